#include "nfl/batch.hpp"

#include <stdexcept>

#include "nfl/parallel.hpp"

namespace nfl {

std::vector<double> run_batch_serial(const AlgorithmSpec& algorithm,
                                     const ObjectiveFunction& objective,
                                     const EngineParams& params,
                                     const RngStream& seeds, int count) {
  if (count < 1) throw std::invalid_argument("run count must be at least 1");
  std::vector<double> best(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i)
    best[static_cast<std::size_t>(i)] =
        run_nfl(algorithm, objective, params, seeds.child(i)).best_value;
  return best;
}

std::vector<double> run_batch(const AlgorithmSpec& algorithm,
                              const ObjectiveFunction& objective,
                              const EngineParams& params,
                              const RngStream& seeds, int count, int jobs) {
  if (count < 1) throw std::invalid_argument("run count must be at least 1");
  if (jobs <= 1) return run_batch_serial(algorithm, objective, params, seeds, count);
  std::vector<double> best(static_cast<std::size_t>(count));
  parallel_for(best.size(), jobs, [&](std::size_t i) {
    best[i] = run_nfl(algorithm, objective, params, seeds.child(i)).best_value;
  });
  return best;
}

}  // namespace nfl
