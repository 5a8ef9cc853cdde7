#pragma once

#include <cmath>
#include <cstdint>

namespace nfl {

/// Deterministic 64-bit random stream with reproducible child streams.
///
/// The generator is splitmix64: state advances by the golden-ratio constant
/// and each output is the finalizer of the new state. Child streams are
/// derived from the (construction seed, index) pair only, so they do not
/// depend on how many draws the parent has made. The output sequence is part
/// of the artifact contract and must not change between releases; golden
/// values are pinned in the test suite.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed) : seed_(seed), state_(seed) {}

  std::uint64_t seed() const { return seed_; }

  std::uint64_t next_u64() {
    state_ += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  /// Child stream for (seed, index). Independent of draws already made.
  RngStream child(std::uint64_t index) const {
    return RngStream(mix64(seed_ + 0x9E3779B97F4A7C15ull * (index + 1)));
  }

  /// Uniform double in [0, 1), 53 bits of precision.
  double uniform01() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  bool bernoulli(double p) { return uniform01() < p; }

  /// Unbiased uniform integer in [0, n). n must be >= 1.
  std::uint64_t uniform_below(std::uint64_t n) {
    const std::uint64_t threshold = (0 - n) % n;  // 2^64 mod n
    for (;;) {
      const std::uint64_t r = next_u64();
      if (r >= threshold) return r % n;
    }
  }

  /// Normal draw via Box-Muller. Always consumes exactly two words.
  double normal(double mean, double sigma) {
    const double u1 =
        static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;  // (0,1]
    const double u2 = static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    const double r = std::sqrt(-2.0 * std::log(u1));
    return mean + sigma * r * std::cos(6.283185307179586476925286766559 * u2);
  }

  static std::uint64_t mix64(std::uint64_t z) {
    z ^= z >> 33;
    z *= 0xFF51AFD7ED558CCDull;
    z ^= z >> 33;
    z *= 0xC4CEB9FE1A85EC53ull;
    z ^= z >> 33;
    return z;
  }

 private:
  std::uint64_t seed_;   // construction seed, used for child derivation
  std::uint64_t state_;  // advances with each draw
};

}  // namespace nfl
