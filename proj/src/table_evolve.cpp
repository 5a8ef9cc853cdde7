#include "nfl/table_evolve.hpp"

#include <stdexcept>

namespace nfl {

void validate(const TableEaParams& params) {
  validate(SteadyStateParams{params.population_size, params.generations,
                             params.crossover_probability, params.selection});
  if (params.per_bit_mutation < 0.0 || params.per_bit_mutation > 1.0)
    throw std::invalid_argument("per_bit_mutation must lie in [0, 1]");
  if (params.duel_runs < 1)
    throw std::invalid_argument("duel_runs must be at least 1");
  if (params.meta_runs < 1)
    throw std::invalid_argument("meta_runs must be at least 1");
  if (params.n < 1 || params.n > 30)
    throw std::invalid_argument("table input width must lie in [1, 30]");
  if (params.m < 1 || params.m > 64)
    throw std::invalid_argument("table output width must lie in [1, 64]");
}

TableEvolveResult evolve_table_function(const AlgorithmSpec& a,
                                        const AlgorithmSpec& b,
                                        const TableEaParams& ea,
                                        const EngineParams& engine,
                                        RngStream rng, int jobs) {
  validate(ea);
  validate(engine);
  if (a.encoding_length != ea.n || b.encoding_length != ea.n)
    throw std::invalid_argument(
        "table objectives require n-bit encodings on both sides");

  const DuelOptions duel_options{ea.duel_runs, ea.paired_duel_seeds, jobs};
  SteadyStateOps<TableFunction> ops;
  ops.init = [&ea](RngStream& r) { return random_table(ea.n, ea.m, r); };
  ops.crossover = [](const TableFunction& x, const TableFunction& y,
                     RngStream& r) { return uniform_crossover(x, y, r); };
  ops.mutate = [&ea](const TableFunction& t, RngStream& r) {
    return mutate_table(t, ea.per_bit_mutation, r);
  };
  ops.evaluate = [&](const TableFunction& t, RngStream seed) {
    const TableObjective objective(t);
    return duel(objective, a, b, duel_options, engine, seed).fitness;
  };

  const SteadyStateParams ss{ea.population_size, ea.generations,
                             ea.crossover_probability, ea.selection};
  return evolve_steady_state<TableFunction>(ss, ops, rng);
}

}  // namespace nfl
