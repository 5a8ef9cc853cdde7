#pragma once

#include "nfl/duel.hpp"
#include "nfl/gp_tree.hpp"
#include "nfl/steady_state.hpp"

namespace nfl {

struct GpParams {
  int population_size = 50;
  int generations = 10;
  double crossover_probability = 0.9;
  int mutations_per_chromosome = 1;
  int max_depth = 6;
  int duel_runs = 500;
  // Constant terminals uniform in [-10, 10] alongside x. A deliberate
  // extension of the x-only terminal set; turn off for the strict variant.
  bool ephemeral_constants = true;
  bool paired_duel_seeds = false;
  Selection selection = Selection::kUniform;
};

void validate(const GpParams& params);

using GpEvolveResult = SteadyStateResult<GpTree>;

/// Evolves a test function on which algorithm A beats algorithm B: each
/// candidate tree's fitness is duel(tree, A, B).fitness, so negative values
/// mean A reached lower objective values than B on that tree.
GpEvolveResult evolve_gp_function(const AlgorithmSpec& a,
                                  const AlgorithmSpec& b, const GpParams& gp,
                                  const EngineParams& engine, RngStream rng,
                                  int jobs = 1);

}  // namespace nfl
