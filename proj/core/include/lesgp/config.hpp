#pragma once

#include <cstddef>

namespace lesgp {

inline constexpr std::size_t kDefaultMaxOrder = 12;
inline constexpr std::size_t kDefaultMaxEnumerationOrder = 6;
// ElementId and the canonical-key encoding store indices in 16 and 8 bits.
inline constexpr std::size_t kHardMaxOrder = 255;

/// Largest carrier accepted by the validators. Overridden by LESGP_MAX_N.
[[nodiscard]] std::size_t max_order();

/// Largest order accepted by the enumerators. LESGP_MAX_N overrides this too.
[[nodiscard]] std::size_t max_enumeration_order();

}  // namespace lesgp
