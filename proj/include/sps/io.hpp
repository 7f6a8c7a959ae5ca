#ifndef SPS_IO_HPP
#define SPS_IO_HPP

#include <string>
#include <string_view>

#include "sps/ortho.hpp"

namespace sps {

// Instance document, format_version "1":
//   {
//     "format_version": "1",
//     "states": ["s1", "s2"],
//     "properties": [
//       {"name": "bottom", "kappa": [], "perp": "top"},
//       {"name": "top", "kappa": ["s1", "s2"], "perp": "bottom"}
//     ]
//   }
// "name" is optional. "perp" is a property name when every property is
// named (uniquely), a zero-based index otherwise. Order, meets and joins
// are never stored; they are derived from the kappa sets.

// Parsing yields an unvalidated instance; validation is a separate step.
RawInstance parse_instance(std::string_view text);

// Canonical form: states in roster order, properties in canonical family
// order, two-space indentation, trailing newline. Byte-stable.
std::string serialize(const OrthoSPS& osps);

}  // namespace sps

#endif  // SPS_IO_HPP
