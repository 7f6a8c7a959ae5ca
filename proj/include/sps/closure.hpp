#ifndef SPS_CLOSURE_HPP
#define SPS_CLOSURE_HPP

#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "sps/errors.hpp"
#include "sps/state_set.hpp"

namespace sps {

// The property lattice, stored as the family of Cartan images itself:
// inclusion is the order, intersection the meet, so the lattice laws hold
// by construction and cannot drift out of sync with a separate order table.
struct ClosureFamily {
  std::vector<StateSet> sets;  // canonical order: (cardinality, bit pattern)
  std::size_t bottom_index = 0;
  std::size_t top_index = 0;
  std::unordered_map<std::uint64_t, PropertyIndex> index_of;

  std::size_t size() const { return sets.size(); }
  std::optional<PropertyIndex> find(StateSet s) const {
    auto it = index_of.find(s.bits);
    if (it == index_of.end()) return std::nullopt;
    return it->second;
  }
};

class SPS;

// validate_sps result: the system plus the permutation from input positions
// to canonical property indices (needed to remap companion tables).
struct ValidatedSps {
  SPS* operator->();  // never null; convenience for tests
  SPS sps;
  std::vector<PropertyIndex> canonical_of_input;
};

// A validated state property system. Immutable; construction only through
// validate_sps.
class SPS {
 public:
  const StateRoster& roster() const { return roster_; }
  const ClosureFamily& family() const { return family_; }
  std::size_t state_count() const { return roster_.size(); }
  std::size_t property_count() const { return family_.size(); }

  StateSet kappa(PropertyIndex a) const;
  PropertyIndex bottom() const { return family_.bottom_index; }
  PropertyIndex top() const { return family_.top_index; }

  // Optional labels, canonical order; empty vector when unnamed.
  const std::vector<std::string>& property_names() const { return names_; }
  bool all_named() const;

  // Name when present, else the formatted kappa set.
  std::string property_label(PropertyIndex a) const;
  const std::string& state_label(StateIndex p) const { return roster_.name(p); }

  void check_property_index(PropertyIndex a) const;
  void check_state_index(StateIndex p) const;

  friend bool operator==(const SPS& x, const SPS& y);

 private:
  SPS(StateRoster roster, ClosureFamily family, std::vector<std::string> names)
      : roster_(std::move(roster)), family_(std::move(family)), names_(std::move(names)) {}

  StateRoster roster_;
  ClosureFamily family_;
  std::vector<std::string> names_;

  friend ValidatedSps validate_sps(std::vector<std::string> state_names,
                                   std::vector<StateSet> raw_sets,
                                   std::vector<std::string> property_names);
};

// Checks Eq.1 (bottom and top present), Eq.2 (pairwise intersections
// present; with finiteness that closes arbitrary intersections) and Eq.3
// injectivity (no duplicate sets), then sorts into canonical order.
// Check order is fixed: EmptyRoster, DuplicateStateLabel, CapExceeded,
// IndexOutOfRange, DuplicateProperty, MissingBottom, MissingTop,
// NotIntersectionClosed. First failure wins, witnesses are the earliest in
// input order.
ValidatedSps validate_sps(std::vector<std::string> state_names,
                          std::vector<StateSet> raw_sets,
                          std::vector<std::string> property_names = {});

// a <= b, rendered as kappa(a) included in kappa(b).
bool leq(const SPS& sps, PropertyIndex a, PropertyIndex b);

// Greatest lower bound; the intersection itself, guaranteed in the family.
// Empty collection yields top.
PropertyIndex meet(const SPS& sps, PropertyIndex a, PropertyIndex b);
PropertyIndex meet(const SPS& sps, std::span<const PropertyIndex> indices);

// Least upper bound; the smallest family member containing the union.
// Empty collection yields bottom.
PropertyIndex join(const SPS& sps, PropertyIndex a, PropertyIndex b);
PropertyIndex join(const SPS& sps, std::span<const PropertyIndex> indices);

// Minimal nonbottom elements, canonical order.
std::vector<PropertyIndex> atoms(const SPS& sps);

// True iff every nonbottom element is the join of the atoms below it.
bool is_atomistic(const SPS& sps);

}  // namespace sps

#endif  // SPS_CLOSURE_HPP
