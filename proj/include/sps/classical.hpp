#ifndef SPS_CLASSICAL_HPP
#define SPS_CLASSICAL_HPP

#include <optional>
#include <vector>

#include "sps/ortho.hpp"

namespace sps {

// The classical skeleton of a system: the properties whose kappa set and
// complement kappa set jointly cover the roster, the classical state of
// each state, and the classical Cartan map restricted to those properties.
struct ClassicalData {
  std::vector<PropertyIndex> classical_props;  // C, ascending canonical order
  std::vector<PropertyIndex> omega_of;         // per state: its classical state
  std::vector<PropertyIndex> omega_roster;     // distinct classical states, canonical order
  std::vector<StateSet> kappa_c;               // per member of C: subset of omega_roster

  std::optional<std::size_t> classical_position(PropertyIndex a) const;
  std::optional<std::size_t> omega_position(PropertyIndex a) const;
};

// kappa(a) together with kappa(perp(a)) covers the roster.
bool is_classical(const OrthoSPS& osps, PropertyIndex a);

std::vector<PropertyIndex> classical_properties(const OrthoSPS& osps);

// Meet of all classical properties actual in p.
PropertyIndex classical_state(const OrthoSPS& osps, StateIndex p);

ClassicalData classical_data(const OrthoSPS& osps);

// The induced system over the classical states. Roster labels are
// "w0", "w1", ... in canonical order; provenance maps back to the ambient
// system.
struct ClassicalSPS {
  OrthoSPS osps;
  std::vector<PropertyIndex> omega_provenance;     // roster position -> ambient property
  std::vector<PropertyIndex> property_provenance;  // family position -> ambient property
};

// Rebuilds (omega roster, classical family, inherited perp) and re-runs the
// full validation; a failure there is an InternalTheoremViolation since
// validity is guaranteed for every validated input.
ClassicalSPS classical_sps(const OrthoSPS& osps);

// Pass/fail per theorem claim:
//  (a) C closed under meets and joins of subsets,
//  (b) each classical state is an atom of C,
//  (c) C is atomistic,
//  (d) distinct classical states are pairwise orthogonal,
//  (e) the classical Cartan map is a bijection onto the power set of the
//      classical state roster,
//  (f) the explicit surjectivity witness reproduces every subset.
// Subsets for (a): exhaustive when |C| <= 12, otherwise all pairs and
// triples plus 1000 seeded pseudo-random subsets.
Report verify_classical_theorems(const OrthoSPS& osps);

}  // namespace sps

#endif  // SPS_CLASSICAL_HPP
