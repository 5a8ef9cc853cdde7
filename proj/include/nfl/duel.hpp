#pragma once

#include <vector>

#include "nfl/batch.hpp"

namespace nfl {

struct DuelResult {
  double avg_a = 0.0;   // mean best value over A's runs
  double avg_b = 0.0;   // mean best value over B's runs
  double fitness = 0.0;  // avg_a - avg_b; negative means A beat B
  int runs = 0;          // runs per side
  std::vector<double> best_a;  // per-run best values, run order
  std::vector<double> best_b;
};

struct DuelOptions {
  int runs = 500;
  // Reuse one seed set for both sides (variance reduction). Off by default:
  // the two sides draw from independent seed sets.
  bool paired_seeds = false;
  int jobs = 1;
};

void validate(const DuelOptions& options);

/// Core duel with explicit per-side seed streams and engine parameters.
/// Swapping (a, engine_a, seeds_a) with (b, engine_b, seeds_b) negates
/// fitness exactly: per-run values are identical and the mean uses a fixed
/// left-to-right summation order.
DuelResult duel_with_seed_streams(const ObjectiveFunction& objective,
                                  const AlgorithmSpec& a,
                                  const AlgorithmSpec& b, int runs,
                                  const EngineParams& engine_a,
                                  const EngineParams& engine_b,
                                  const RngStream& seeds_a,
                                  const RngStream& seeds_b, int jobs = 1);

/// Both sides on one engine configuration. A's seed set is rng.child(0);
/// B's is rng.child(1), or the same child(0) under paired_seeds.
DuelResult duel(const ObjectiveFunction& objective, const AlgorithmSpec& a,
                const AlgorithmSpec& b, const DuelOptions& options,
                const EngineParams& engine, RngStream rng);

/// Per-side engine configurations (e.g. different step budgets).
DuelResult duel(const ObjectiveFunction& objective, const AlgorithmSpec& a,
                const AlgorithmSpec& b, const DuelOptions& options,
                const EngineParams& engine_a, const EngineParams& engine_b,
                RngStream rng);

}  // namespace nfl
