#pragma once

#include <cstddef>
#include <cstdint>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace nfl {

/// Number of worker threads actually available to parallel_for.
int hardware_jobs();

/// Runs fn(0) .. fn(n-1) on up to `jobs` threads. Iterations must be
/// independent; callers get determinism by writing to slot i only.
/// jobs <= 1 runs the plain serial loop.
template <typename F>
void parallel_for(std::size_t n, int jobs, F&& fn) {
#ifdef _OPENMP
  if (jobs > 1 && n > 1) {
    const std::int64_t count = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(dynamic) num_threads(jobs)
    for (std::int64_t i = 0; i < count; ++i) fn(static_cast<std::size_t>(i));
    return;
  }
#else
  (void)jobs;
#endif
  for (std::size_t i = 0; i < n; ++i) fn(i);
}

}  // namespace nfl
