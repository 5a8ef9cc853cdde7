#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>

#include "nfl/bit_genotype.hpp"

namespace nfl {

// The 32-bit genotypes of the real-encoded algorithms are fixed-point values
// over [0, 1]: pattern u maps to u / (2^32 - 1), with bit 0 least
// significant. Distinctness of real-encoded solutions is bit-pattern
// equality.

inline constexpr double kUnitScale = 4294967295.0;  // 2^32 - 1

inline double decode_unit_interval(const BitGenotype& g) {
  if (g.length() != 32)
    throw std::invalid_argument("unit-interval decoding requires 32-bit genotypes");
  return static_cast<double>(g.bits()) / kUnitScale;
}

/// Nearest 32-bit fixed-point pattern for x in [0, 1].
inline BitGenotype encode_unit_interval(double x) {
  const double clamped = x < 0.0 ? 0.0 : (x > 1.0 ? 1.0 : x);
  const auto u = static_cast<std::uint32_t>(std::llround(clamped * kUnitScale));
  return BitGenotype(u, 32);
}

}  // namespace nfl
