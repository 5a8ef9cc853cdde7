#pragma once

#include "nfl/duel.hpp"
#include "nfl/steady_state.hpp"
#include "nfl/table_function.hpp"

namespace nfl {

struct TableEaParams {
  int population_size = 10;
  int generations = 10;
  double crossover_probability = 0.9;
  double per_bit_mutation = 0.01;
  int duel_runs = 100;
  int meta_runs = 30;  // independent repetitions in matrix experiments
  int n = 16;  // table input bits; small values give oracle-checkable spaces
  int m = 8;   // table output bits
  bool paired_duel_seeds = false;
  Selection selection = Selection::kUniform;
};

void validate(const TableEaParams& params);

using TableEvolveResult = SteadyStateResult<TableFunction>;

/// Evolves a lookup table on which algorithm A beats algorithm B; fitness of
/// a candidate table is duel(table, A, B).fitness, negative when A wins.
TableEvolveResult evolve_table_function(const AlgorithmSpec& a,
                                        const AlgorithmSpec& b,
                                        const TableEaParams& ea,
                                        const EngineParams& engine,
                                        RngStream rng, int jobs = 1);

}  // namespace nfl
