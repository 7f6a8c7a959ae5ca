#ifndef SPS_REPORT_HPP
#define SPS_REPORT_HPP

#include <string>
#include <vector>

namespace sps {

struct Finding {
  std::string claim;
  bool ok = true;
  std::string witness;  // first counterexample, empty when ok
};

struct Report {
  std::string title;
  std::vector<Finding> findings;

  bool pass() const {
    for (const auto& f : findings)
      if (!f.ok) return false;
    return true;
  }

  void add_pass(std::string claim) { findings.push_back({std::move(claim), true, {}}); }
  void add_fail(std::string claim, std::string witness) {
    findings.push_back({std::move(claim), false, std::move(witness)});
  }
  void add(std::string claim, bool ok, std::string witness) {
    findings.push_back({std::move(claim), ok, ok ? std::string{} : std::move(witness)});
  }
};

}  // namespace sps

#endif  // SPS_REPORT_HPP
