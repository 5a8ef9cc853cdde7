#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>

#include "nfl/rng.hpp"

namespace nfl {

/// Fixed-length bit string, the solution encoding shared by every compared
/// algorithm. Length is set at construction; equality is bitwise.
class BitGenotype {
 public:
  BitGenotype(std::uint32_t bits, int length)
      : bits_(bits & mask(length)), length_(static_cast<std::uint8_t>(length)) {
    if (length < 1 || length > 32)
      throw std::invalid_argument("genotype length must be in [1, 32]");
  }

  static BitGenotype random(int length, RngStream& rng) {
    return BitGenotype(static_cast<std::uint32_t>(rng.next_u64()), length);
  }

  std::uint32_t bits() const { return bits_; }
  int length() const { return length_; }

  bool bit(int i) const { return (bits_ >> i) & 1u; }

  BitGenotype with_flipped(int i) const {
    return BitGenotype(bits_ ^ (1u << i), length_);
  }

  BitGenotype complement() const {
    return BitGenotype(~bits_ & mask(length_), length_);
  }

  int hamming_distance(const BitGenotype& other) const {
    return std::popcount(bits_ ^ other.bits_);
  }

  friend bool operator==(const BitGenotype&, const BitGenotype&) = default;

  static std::uint32_t mask(int length) {
    return length >= 32 ? 0xFFFFFFFFu : ((1u << length) - 1u);
  }

 private:
  std::uint32_t bits_;
  std::uint8_t length_;
};

}  // namespace nfl
