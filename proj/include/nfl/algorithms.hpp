#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "nfl/bit_genotype.hpp"
#include "nfl/rng.hpp"

namespace nfl {

// The compared algorithms are (1+1) schemes distinguished only by encoding
// length, mutation operator, and acceptance rule.

struct GaussianMutation {
  double sigma;  // > 0
};

struct PerBitMutation {
  double rate;  // flip probability per bit, in [0, 1]
};

struct KFlipsMutation {
  int flips;  // distinct positions flipped, in [1, L]
};

using Mutation = std::variant<GaussianMutation, PerBitMutation, KFlipsMutation>;

enum class Acceptance { kElitist, kAcceptAll };

struct AlgorithmSpec {
  std::string name;
  int encoding_length = 32;
  Mutation mutation = GaussianMutation{0.001};
  Acceptance acceptance = Acceptance::kElitist;
};

/// Validates parameter ranges; throws std::invalid_argument on violation.
void validate(const AlgorithmSpec& spec);

// Mutation operators. Each returns a fresh genotype; the parent is untouched.

/// Decodes to [0,1], perturbs by Normal(0, sigma), clamps, re-encodes to the
/// nearest 32-bit fixed-point pattern.
BitGenotype mutate_gaussian(const BitGenotype& g, double sigma, RngStream& rng);

/// Deterministic core of the Gaussian operator: applies a known delta.
BitGenotype apply_gaussian_delta(const BitGenotype& g, double delta);

/// Flips each bit independently with probability rate.
BitGenotype mutate_per_bit(const BitGenotype& g, double rate, RngStream& rng);

/// Flips exactly `flips` distinct positions chosen uniformly; the offspring
/// is always at Hamming distance `flips` from the parent.
BitGenotype mutate_k_flips(const BitGenotype& g, int flips, RngStream& rng);

/// Applies the algorithm's mutation operator.
BitGenotype mutate(const AlgorithmSpec& spec, const BitGenotype& g, RngStream& rng);

/// Elitist rule: the offspring survives iff it is no worse than the parent
/// (minimization; ties accepted so plateaus stay traversable).
inline bool accept_elitist(double parent_value, double offspring_value) {
  return offspring_value <= parent_value;
}

inline bool accepted(Acceptance rule, double parent_value, double offspring_value) {
  return rule == Acceptance::kAcceptAll ||
         accept_elitist(parent_value, offspring_value);
}

// Named presets.
//
//   A1, A2  32-bit real encoding, Gaussian mutation (sigma 0.001 / 0.01), elitist
//   A3, A4  32-bit binary encoding, per-bit mutation (rate 0.3 / 0.1), elitist
//   B1..B16 16-bit binary encoding, k distinct flips per chromosome, elitist
//
// With per_bit_b semantics, B_k flips each bit independently with
// probability k/16 instead of flipping a fixed Hamming shell; exposed for
// sensitivity analysis, off by default.
std::optional<AlgorithmSpec> algorithm_preset(const std::string& name,
                                              bool per_bit_b = false);

/// All preset names in canonical order: A1..A4, B1..B16.
const std::vector<std::string>& preset_names();

/// Preset for the k-flip 16-bit algorithm, k in [1, 16].
AlgorithmSpec b_preset(int k, bool per_bit_b = false);

}  // namespace nfl
