#ifndef SPS_CONFIG_HPP
#define SPS_CONFIG_HPP

#include <cstddef>

namespace sps {

// One machine word per state set. Larger rosters would need multi-word
// sets; the file format permits them but this build rejects them.
inline constexpr std::size_t kMaxStates = 64;

// Ceiling on the number of properties a direct union may materialize.
// Overridable per call; the CLI also honors SPS_PRODUCT_CAP.
inline constexpr std::size_t kDefaultFamilyCap = 100000;

inline constexpr const char* kFormatVersion = "1";

}  // namespace sps

#endif  // SPS_CONFIG_HPP
