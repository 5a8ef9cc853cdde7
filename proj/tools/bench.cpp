// Times run_batch_serial against the threaded run_batch on representative
// workloads and verifies that both produce identical per-run results.
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "nfl/batch.hpp"
#include "nfl/gp_ops.hpp"
#include "nfl/parallel.hpp"
#include "nfl/table_function.hpp"
#include "nfl/tree_objective.hpp"

namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                       start)
      .count();
}

bool bench_case(const char* name, const nfl::AlgorithmSpec& algorithm,
                const nfl::ObjectiveFunction& objective, int runs, int jobs) {
  const nfl::EngineParams params;
  const nfl::RngStream seeds(2024);

  auto start = std::chrono::steady_clock::now();
  const std::vector<double> serial =
      nfl::run_batch_serial(algorithm, objective, params, seeds, runs);
  const double serial_s = seconds_since(start);

  start = std::chrono::steady_clock::now();
  const std::vector<double> parallel =
      nfl::run_batch(algorithm, objective, params, seeds, runs, jobs);
  const double parallel_s = seconds_since(start);

  const bool match = serial == parallel;
  std::printf("%-12s runs=%d jobs=%d serial=%.3fs parallel=%.3fs speedup=%.2fx match=%s\n",
              name, runs, jobs, serial_s, parallel_s,
              parallel_s > 0.0 ? serial_s / parallel_s : 0.0,
              match ? "yes" : "NO");
  return match;
}

}  // namespace

int main(int argc, char** argv) {
  int runs = 2000;
  int jobs = nfl::hardware_jobs();
  if (argc > 1) runs = std::atoi(argv[1]);
  if (argc > 2) jobs = std::atoi(argv[2]);
  if (runs < 1 || jobs < 1) {
    std::fprintf(stderr, "usage: %s [runs] [jobs]\n", argv[0]);
    return 2;
  }

  nfl::RngStream rng(7);
  const nfl::TableFunction table = nfl::random_table(16, 8, rng);
  const nfl::TableObjective table_objective(table);

  nfl::RngStream tree_rng(8);
  const nfl::TreeObjective tree_objective(nfl::random_tree(6, tree_rng));

  bool ok = true;
  ok &= bench_case("table/B4", nfl::b_preset(4), table_objective, runs, jobs);
  ok &= bench_case("tree/A1", *nfl::algorithm_preset("A1"), tree_objective,
                   runs, jobs);
  ok &= bench_case("tree/A4", *nfl::algorithm_preset("A4"), tree_objective,
                   runs, jobs);
  if (!ok) {
    std::fprintf(stderr, "parallel results diverged from the serial reference\n");
    return 1;
  }
  return 0;
}
