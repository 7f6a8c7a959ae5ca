#ifndef SPS_ORTHO_HPP
#define SPS_ORTHO_HPP

#include <memory>
#include <span>
#include <vector>

#include "sps/closure.hpp"
#include "sps/report.hpp"

namespace sps {

// Involutive orthocomplement table over canonical property indices.
struct OrthoMap {
  std::vector<PropertyIndex> partner;
  PropertyIndex operator()(PropertyIndex a) const { return partner[a]; }
};

namespace detail {
struct OrthoCache;  // lazily built |states| x |states| orthogonality relation
}

// A state property system together with a verified orthocomplementation.
// Identity is the pair (system, partner table); two systems with the same
// family but different partner tables are distinct values.
class OrthoSPS {
 public:
  const SPS& sps() const { return sps_; }
  const OrthoMap& ortho() const { return ortho_; }
  PropertyIndex perp(PropertyIndex a) const;

  std::size_t state_count() const { return sps_.state_count(); }
  std::size_t property_count() const { return sps_.property_count(); }
  StateSet kappa(PropertyIndex a) const { return sps_.kappa(a); }
  PropertyIndex bottom() const { return sps_.bottom(); }
  PropertyIndex top() const { return sps_.top(); }

  // States orthogonal to p (row of the cached relation).
  StateSet orthogonal_to(StateIndex p) const;

  friend bool operator==(const OrthoSPS& x, const OrthoSPS& y) {
    return x.sps_ == y.sps_ && x.ortho_.partner == y.ortho_.partner;
  }
  friend bool operator!=(const OrthoSPS& x, const OrthoSPS& y) { return !(x == y); }

 private:
  OrthoSPS(SPS sps, OrthoMap ortho);

  SPS sps_;
  OrthoMap ortho_;
  std::shared_ptr<detail::OrthoCache> cache_;  // excluded from equality

  friend OrthoSPS validate_ortho(SPS sps, std::vector<PropertyIndex> raw_partner);
};

// Verifies, in fixed order, Eq.4 (involution), Eq.5 (antitone), Eq.6
// (complement laws), Eq.7 (every state orthogonal to all of kappa(a) lies in
// kappa(perp(a))). First failure is reported with the earliest witness in
// canonical order. The reverse inclusion of Eq.7 is a theorem; its failure
// raises InternalTheoremViolation instead of a user-facing error.
OrthoSPS validate_ortho(SPS sps, std::vector<PropertyIndex> raw_partner);

// p is orthogonal to q: some property has p in kappa(a) and q in kappa(perp(a)).
bool orthogonal(const OrthoSPS& osps, StateIndex p, StateIndex q);

// States orthogonal to every member of A; the full roster for A = {}.
StateSet ortho_set(const OrthoSPS& osps, StateSet a);

// Diagnostic: symmetry of the relation and absence of self-orthogonal
// states. Both are forced by validation; a finding here means a core bug.
Report symmetry_report(const OrthoSPS& osps);

// Unvalidated instance, the shape mutate() emits and the file format parses.
struct RawProperty {
  std::string name;  // empty = unnamed
  StateSet kappa;
  PropertyIndex perp = 0;
};
struct RawInstance {
  std::vector<std::string> states;
  std::vector<RawProperty> properties;
};

// validate_sps + partner remap + validate_ortho in one step.
OrthoSPS validate_instance(const RawInstance& raw);

// Canonical-order dump of a validated system.
RawInstance to_raw(const OrthoSPS& osps);

namespace detail {
// Rows of the orthogonality relation for a candidate partner table.
std::vector<StateSet> orthogonality_rows(const SPS& sps,
                                         const std::vector<PropertyIndex>& partner);
}

}  // namespace sps

#endif  // SPS_ORTHO_HPP
