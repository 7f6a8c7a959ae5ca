#ifndef SPS_DECOMPOSITION_HPP
#define SPS_DECOMPOSITION_HPP

#include <span>
#include <vector>

#include "sps/classical.hpp"
#include "sps/config.hpp"

namespace sps {

// The sub-system below one classical state: states kappa(omega), properties
// the family members inside it, orthocomplement a -> perp(a) meet omega.
struct Component {
  OrthoSPS osps;
  PropertyIndex omega;                          // ambient index of the block's top
  std::vector<PropertyIndex> prop_embedding;    // component property -> ambient property
  std::vector<StateIndex> state_embedding;      // component state -> ambient state
};

// omega must be a classical state (NotAClassicalState otherwise). The
// sub-system is re-validated in full; failure there means a core bug.
Component component(const OrthoSPS& osps, PropertyIndex omega);

// One component per classical state, in canonical order. The state
// embeddings partition the roster.
std::vector<Component> components(const OrthoSPS& osps);

// Disjoint union of the parts' rosters; properties are all tuples of part
// properties, realized as unions of the tagged kappa sets; meet, join and
// perp act componentwise. State labels are "<part>:<label>".
struct DirectUnionSPS {
  OrthoSPS osps;
  std::size_t component_count = 0;
  std::vector<std::pair<std::size_t, StateIndex>> state_origin;  // union state -> (part, state)
  std::vector<std::vector<PropertyIndex>> prop_tuple;            // union property -> per-part property
};

DirectUnionSPS direct_union(std::span<const OrthoSPS> parts,
                            std::size_t family_cap = kDefaultFamilyCap);

// The explicit decomposition maps: m sends each state to its tagged copy in
// its block; n sends each tuple to the join of its entries, looked up as
// the union of their kappa sets.
struct MorphismPair {
  std::vector<StateIndex> m;     // source state -> target state
  std::vector<PropertyIndex> n;  // target property -> source property
};

struct Decomposition {
  DirectUnionSPS union_sps;
  MorphismPair morphism;
};

Decomposition decomposition_morphism(const OrthoSPS& osps,
                                     std::size_t family_cap = kDefaultFamilyCap);

// Four check groups: m bijective, n bijective, the membership biconditional
// m(p) in kappa(a) <=> p in kappa(n(a)) over all state/property pairs, and
// perp preservation n(perp(a)) = perp(n(a)).
Report verify_morphism(const MorphismPair& pair, const OrthoSPS& source,
                       const OrthoSPS& target);

// Exhaustive check of the splitting identities behind the decomposition:
// splits of any x by a classical a and its complement, the absorption
// (x join y) meet a = x for x under a and y under perp(a), distribution of
// a classical a over joins, the block decomposition of every property over
// the classical states, the block partition of the roster, and the kappa
// set of a join of one choice per block. Joins of sampled families use all
// pairs plus seeded random families up to size 5; block choices are
// exhaustive up to 1e5 tuples, then a seeded sample of 1e4.
Report lemma_suite(const OrthoSPS& osps);

}  // namespace sps

#endif  // SPS_DECOMPOSITION_HPP
