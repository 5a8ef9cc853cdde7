#pragma once

#include <vector>

#include "nfl/engine.hpp"

namespace nfl {

/// `count` independent NFL runs of one algorithm on one objective; run i is
/// seeded with seeds.child(i) and its best value lands in slot i. Reference
/// implementation; run_batch must produce identical output.
std::vector<double> run_batch_serial(const AlgorithmSpec& algorithm,
                                     const ObjectiveFunction& objective,
                                     const EngineParams& params,
                                     const RngStream& seeds, int count);

/// Parallel version of run_batch_serial, split across up to `jobs` threads.
/// Output is byte-identical to the serial version for every jobs value.
std::vector<double> run_batch(const AlgorithmSpec& algorithm,
                              const ObjectiveFunction& objective,
                              const EngineParams& params,
                              const RngStream& seeds, int count, int jobs);

}  // namespace nfl
