#include "nfl/gp_evolve.hpp"

#include <stdexcept>

#include "nfl/gp_ops.hpp"
#include "nfl/tree_objective.hpp"

namespace nfl {

void validate(const GpParams& params) {
  validate(SteadyStateParams{params.population_size, params.generations,
                             params.crossover_probability, params.selection});
  if (params.mutations_per_chromosome < 0)
    throw std::invalid_argument(
        "mutations_per_chromosome must not be negative");
  if (params.max_depth < 1)
    throw std::invalid_argument("max_depth must be at least 1");
  if (params.duel_runs < 1)
    throw std::invalid_argument("duel_runs must be at least 1");
}

GpEvolveResult evolve_gp_function(const AlgorithmSpec& a,
                                  const AlgorithmSpec& b, const GpParams& gp,
                                  const EngineParams& engine, RngStream rng,
                                  int jobs) {
  validate(gp);
  validate(engine);
  if (a.encoding_length != 32 || b.encoding_length != 32)
    throw std::invalid_argument(
        "tree objectives require 32-bit encodings on both sides");

  const DuelOptions duel_options{gp.duel_runs, gp.paired_duel_seeds, jobs};
  SteadyStateOps<GpTree> ops;
  ops.init = [&gp](RngStream& r) {
    return random_tree(gp.max_depth, r, gp.ephemeral_constants);
  };
  ops.crossover = [&gp](const GpTree& x, const GpTree& y, RngStream& r) {
    return subtree_crossover(x, y, r, gp.max_depth);
  };
  ops.mutate = [&gp](const GpTree& t, RngStream& r) {
    GpTree out = t;
    for (int m = 0; m < gp.mutations_per_chromosome; ++m)
      out = mutate_tree(out, r, gp.max_depth, gp.ephemeral_constants);
    return out;
  };
  ops.evaluate = [&](const GpTree& t, RngStream seed) {
    const TreeObjective objective(t);
    return duel(objective, a, b, duel_options, engine, seed).fitness;
  };

  const SteadyStateParams ss{gp.population_size, gp.generations,
                             gp.crossover_probability, gp.selection};
  return evolve_steady_state<GpTree>(ss, ops, rng);
}

}  // namespace nfl
