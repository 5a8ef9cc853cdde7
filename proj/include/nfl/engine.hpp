#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "nfl/algorithms.hpp"
#include "nfl/archive.hpp"
#include "nfl/objective.hpp"
#include "nfl/rng.hpp"

namespace nfl {

struct EngineParams {
  // Distinct points visited per run. Clamped to the size of the search
  // space, since no run can visit more distinct points than exist.
  int max_steps = 100;
  // Mutation attempts per step before the search jumps to a random point.
  int max_mutations = 20;
  // When set, every offspring that gets evaluated enters the archive and
  // consumes step budget, even if the acceptance rule rejects it. Off by
  // default: only adopted solutions are archived.
  bool count_rejected = false;
};

void validate(const EngineParams& params);

struct RunOutcome {
  double best_value = 0.0;  // minimum objective value over the archive
  int distinct_visited = 0;  // final archive size
  int reinit_count = 0;  // uniform re-initialization draws taken
};

/// Per-insert trace of a run, for inspection and tests.
struct RunTrace {
  struct Step {
    double value;      // objective value of the inserted solution
    bool via_restart;  // inserted through the random-restart branch
  };
  std::vector<Step> steps;
};

struct SelectedSolution {
  BitGenotype genotype;
  double value;
  bool via_restart;
  int reinit_draws;  // uniform draws consumed by the restart branch
};

/// Picks the next solution from the neighborhood of curr: mutants are tried
/// until one is both unarchived and accepted, for at most max_mutations
/// attempts; afterwards uniform random points are drawn (ignoring the
/// acceptance rule) until an unarchived one appears.
///
/// With count_rejected set, evaluated mutants are inserted into the archive
/// as they appear; their values are appended to rejected_inserts (when given)
/// and nullopt is returned if the archive fills up mid-selection.
std::optional<SelectedSolution> select_new_solution(
    const BitGenotype& curr, double curr_value, const AlgorithmSpec& algorithm,
    const ObjectiveFunction& objective, Archive& archive,
    const EngineParams& params, RngStream& rng,
    std::vector<RunTrace::Step>* rejected_inserts = nullptr);

/// One complete single-individual run: visits exactly max_steps distinct
/// points (or the whole space, if smaller) and reports the best value seen.
/// A pure function of (algorithm, objective, params, seed).
RunOutcome run_nfl(const AlgorithmSpec& algorithm,
                   const ObjectiveFunction& objective,
                   const EngineParams& params, RngStream rng,
                   RunTrace* trace = nullptr);

}  // namespace nfl
