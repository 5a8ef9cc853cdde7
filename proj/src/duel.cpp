#include "nfl/duel.hpp"

#include <stdexcept>

namespace nfl {

namespace {

double mean_in_order(const std::vector<double>& values) {
  double sum = 0.0;
  for (double v : values) sum += v;
  return sum / static_cast<double>(values.size());
}

void check_dimensions(const ObjectiveFunction& objective,
                      const AlgorithmSpec& a, const AlgorithmSpec& b) {
  if (a.encoding_length != objective.bit_length() ||
      b.encoding_length != objective.bit_length())
    throw std::invalid_argument(
        "algorithm encoding length does not match the objective domain");
}

}  // namespace

void validate(const DuelOptions& options) {
  if (options.runs < 1)
    throw std::invalid_argument("duel runs must be at least 1");
  if (options.jobs < 1)
    throw std::invalid_argument("jobs must be at least 1");
}

DuelResult duel_with_seed_streams(const ObjectiveFunction& objective,
                                  const AlgorithmSpec& a,
                                  const AlgorithmSpec& b, int runs,
                                  const EngineParams& engine_a,
                                  const EngineParams& engine_b,
                                  const RngStream& seeds_a,
                                  const RngStream& seeds_b, int jobs) {
  check_dimensions(objective, a, b);
  if (runs < 1) throw std::invalid_argument("duel runs must be at least 1");
  DuelResult result;
  result.runs = runs;
  result.best_a = run_batch(a, objective, engine_a, seeds_a, runs, jobs);
  result.best_b = run_batch(b, objective, engine_b, seeds_b, runs, jobs);
  result.avg_a = mean_in_order(result.best_a);
  result.avg_b = mean_in_order(result.best_b);
  result.fitness = result.avg_a - result.avg_b;
  return result;
}

DuelResult duel(const ObjectiveFunction& objective, const AlgorithmSpec& a,
                const AlgorithmSpec& b, const DuelOptions& options,
                const EngineParams& engine, RngStream rng) {
  return duel(objective, a, b, options, engine, engine, rng);
}

DuelResult duel(const ObjectiveFunction& objective, const AlgorithmSpec& a,
                const AlgorithmSpec& b, const DuelOptions& options,
                const EngineParams& engine_a, const EngineParams& engine_b,
                RngStream rng) {
  validate(options);
  const RngStream seeds_a = rng.child(0);
  const RngStream seeds_b = options.paired_seeds ? rng.child(0) : rng.child(1);
  return duel_with_seed_streams(objective, a, b, options.runs, engine_a,
                                engine_b, seeds_a, seeds_b, options.jobs);
}

}  // namespace nfl
