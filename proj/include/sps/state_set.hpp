#ifndef SPS_STATE_SET_HPP
#define SPS_STATE_SET_HPP

#include <bit>
#include <cstdint>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "sps/config.hpp"

namespace sps {

using StateIndex = std::size_t;
using PropertyIndex = std::size_t;

// Subset of roster indices, bit i = state i. All set algebra is word ops.
struct StateSet {
  std::uint64_t bits = 0;

  static StateSet empty_set() { return {}; }
  static StateSet full(std::size_t n) {
    return {n >= 64 ? ~0ULL : ((1ULL << n) - 1)};
  }
  static StateSet of(std::initializer_list<StateIndex> indices) {
    StateSet s;
    for (StateIndex i : indices) s.add(i);
    return s;
  }

  bool contains(StateIndex i) const { return (bits >> i) & 1u; }
  StateSet& add(StateIndex i) {
    bits |= (1ULL << i);
    return *this;
  }
  StateSet& remove(StateIndex i) {
    bits &= ~(1ULL << i);
    return *this;
  }

  std::size_t count() const { return static_cast<std::size_t>(std::popcount(bits)); }
  bool empty() const { return bits == 0; }
  bool subset_of(StateSet o) const { return (bits & ~o.bits) == 0; }
  StateSet complement_in(std::size_t n) const { return {~bits & full(n).bits}; }

  friend StateSet operator&(StateSet a, StateSet b) { return {a.bits & b.bits}; }
  friend StateSet operator|(StateSet a, StateSet b) { return {a.bits | b.bits}; }
  friend StateSet operator-(StateSet a, StateSet b) { return {a.bits & ~b.bits}; }
  friend bool operator==(StateSet a, StateSet b) { return a.bits == b.bits; }
  friend bool operator!=(StateSet a, StateSet b) { return a.bits != b.bits; }

  // Canonical family order: cardinality first, then the bit pattern read as
  // an integer (state 0 = least significant bit). Total and deterministic.
  static bool canonical_less(StateSet a, StateSet b) {
    const auto ca = a.count(), cb = b.count();
    if (ca != cb) return ca < cb;
    return a.bits < b.bits;
  }

  std::vector<StateIndex> members() const {
    std::vector<StateIndex> out;
    std::uint64_t rest = bits;
    while (rest) {
      out.push_back(static_cast<StateIndex>(std::countr_zero(rest)));
      rest &= rest - 1;
    }
    return out;
  }
};

// Ordered list of distinct state labels.
class StateRoster {
 public:
  // Throws EmptyRoster / DuplicateStateLabel / CapExceeded.
  static StateRoster from(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(StateIndex i) const { return names_[i]; }
  std::optional<StateIndex> index_of(const std::string& label) const;
  StateSet universe() const { return StateSet::full(size()); }

  friend bool operator==(const StateRoster& a, const StateRoster& b) {
    return a.names_ == b.names_;
  }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, StateIndex> index_;
};

// "{s1,s2}" with labels in roster order; "{}" for the empty set.
std::string format_state_set(const StateRoster& roster, StateSet s);

}  // namespace sps

#endif  // SPS_STATE_SET_HPP
