#ifndef SPS_GENERATORS_HPP
#define SPS_GENERATORS_HPP

#include <cstdint>
#include <span>

#include "sps/decomposition.hpp"
#include "sps/ortho.hpp"

namespace sps {

struct Seed {
  std::uint64_t value = 0;
};

// Power set over n states "s1".."sn" with set complement as perp. Fully
// classical.
OrthoSPS gen_boolean(std::size_t n, std::size_t family_cap = kDefaultFamilyCap);

// MO_k: states p1,q1,..,pk,qk; properties the empty set, the full set and
// all singletons; perp pairs {pi} with {qi}. Purely nonclassical (C is
// {bottom, top}), k >= 2.
OrthoSPS gen_mo(std::size_t k);

// direct_union followed by a seeded scramble: the state labels keep their
// spellings but are permuted against the structure, and the property input
// order is shuffled, so nothing about the result encodes which part a state
// or property came from.
OrthoSPS compose_shuffled(std::span<const OrthoSPS> parts, Seed seed,
                          std::size_t family_cap = kDefaultFamilyCap);

enum class MutationKind {
  DropSet,          // remove an interior set that two remaining sets intersect to (Eq.2)
  BreakInvolution,  // retarget one partner entry (Eq.4)
  ShrinkTop,        // remove the full set (Eq.1)
  UnpairOrtho,      // rewire the partner table so a complement law fails (Eq.6 / Eq.7)
};

// Produces an unvalidated instance guaranteed to fail validation with the
// documented error kind, or throws MutationInapplicable when the system
// admits no such single edit (e.g. DropSet on a family in which no interior
// set is the intersection of two others).
RawInstance mutate(const OrthoSPS& osps, MutationKind kind, Seed seed);

}  // namespace sps

#endif  // SPS_GENERATORS_HPP
