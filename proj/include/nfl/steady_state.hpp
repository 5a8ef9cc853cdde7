#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "nfl/rng.hpp"

namespace nfl {

enum class Selection { kUniform, kTournament2 };

struct SteadyStateParams {
  int population_size = 0;
  int generations = 0;  // population_size insertion attempts each
  double crossover_probability = 0.0;
  Selection selection = Selection::kUniform;
};

inline void validate(const SteadyStateParams& params) {
  if (params.population_size < 1)
    throw std::invalid_argument("population_size must be at least 1");
  if (params.generations < 0)
    throw std::invalid_argument("generations must not be negative");
  if (params.crossover_probability < 0.0 ||
      params.crossover_probability > 1.0)
    throw std::invalid_argument("crossover_probability must lie in [0, 1]");
}

template <typename Genome>
struct SteadyStateOps {
  std::function<Genome(RngStream&)> init;
  std::function<Genome(const Genome&, const Genome&, RngStream&)> crossover;
  std::function<Genome(const Genome&, RngStream&)> mutate;
  // Fitness of a genome; lower is better. The stream seeds the evaluation
  // and is derived from an insertion counter, not from the decision stream,
  // so evaluation seeds do not depend on which decisions were taken.
  std::function<double(const Genome&, RngStream)> evaluate;
};

template <typename Genome>
struct SteadyStateResult {
  Genome best{};
  double best_fitness = 0.0;
  // Best-of-population fitness after initialization and after each
  // insertion attempt; monotone non-increasing.
  std::vector<double> history;
};

/// Steady-state loop: each generation makes population_size insertion
/// attempts. An offspring is bred by crossover with the configured
/// probability (else cloned from the first parent), then mutated; it
/// replaces the worst member iff strictly better.
template <typename Genome>
SteadyStateResult<Genome> evolve_steady_state(
    const SteadyStateParams& params, const SteadyStateOps<Genome>& ops,
    RngStream rng) {
  validate(params);
  RngStream decisions = rng.child(0);
  const RngStream eval_seeds = rng.child(1);
  std::uint64_t eval_counter = 0;

  const std::size_t pop_size =
      static_cast<std::size_t>(params.population_size);
  std::vector<Genome> population;
  std::vector<double> fitness;
  population.reserve(pop_size);
  fitness.reserve(pop_size);
  for (std::size_t i = 0; i < pop_size; ++i) {
    population.push_back(ops.init(decisions));
    fitness.push_back(
        ops.evaluate(population.back(), eval_seeds.child(eval_counter++)));
  }

  const auto select = [&]() -> std::size_t {
    const auto i = static_cast<std::size_t>(decisions.uniform_below(pop_size));
    if (params.selection == Selection::kUniform) return i;
    const auto j = static_cast<std::size_t>(decisions.uniform_below(pop_size));
    return fitness[j] < fitness[i] ? j : i;
  };

  double best_so_far = fitness[0];
  for (double f : fitness) best_so_far = f < best_so_far ? f : best_so_far;

  SteadyStateResult<Genome> result;
  result.history.reserve(1 + pop_size * static_cast<std::size_t>(
                                             params.generations));
  result.history.push_back(best_so_far);

  for (int gen = 0; gen < params.generations; ++gen) {
    for (std::size_t k = 0; k < pop_size; ++k) {
      const std::size_t pa = select();
      const std::size_t pb = select();
      Genome offspring =
          decisions.bernoulli(params.crossover_probability)
              ? ops.crossover(population[pa], population[pb], decisions)
              : population[pa];
      offspring = ops.mutate(offspring, decisions);
      const double f =
          ops.evaluate(offspring, eval_seeds.child(eval_counter++));
      std::size_t worst = 0;
      for (std::size_t i = 1; i < pop_size; ++i)
        if (fitness[i] > fitness[worst]) worst = i;
      if (f < fitness[worst]) {
        population[worst] = std::move(offspring);
        fitness[worst] = f;
      }
      if (f < best_so_far) best_so_far = f;
      result.history.push_back(best_so_far);
    }
  }

  std::size_t best = 0;
  for (std::size_t i = 1; i < pop_size; ++i)
    if (fitness[i] < fitness[best]) best = i;
  result.best = population[best];
  result.best_fitness = fitness[best];
  return result;
}

}  // namespace nfl
