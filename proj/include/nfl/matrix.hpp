#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "nfl/table_evolve.hpp"

namespace nfl {

struct MatrixCell {
  double mean = 0.0;    // mean best evolved fitness over meta_runs
  double stddev = 0.0;  // sample standard deviation (0 when meta_runs < 2)
  int meta_runs = 0;    // 0 marks the absent diagonal
};

struct MatrixReport {
  std::vector<int> ks;  // B indices in row/column order
  std::vector<std::vector<MatrixCell>> cells;  // [row][col]
  bool per_bit_b = false;  // B_k mutation interpreted as per-bit rate k/16
};

/// Called after each finished pair-repetition unit, possibly from worker
/// threads: (units done, units total).
using MatrixProgress = std::function<void(std::size_t, std::size_t)>;

/// Evolves tables for every ordered pair (B_k, B_j), k != j, from `ks`,
/// repeating each pair meta_runs times. Cell seeds derive from the global
/// (k, j, repetition) identity, so a sub-matrix reproduces the full matrix's
/// values for its pairs. `jobs` threads split the pair-repetition units;
/// inner duels go parallel only when the outer level cannot.
MatrixReport matrix_experiment(const std::vector<int>& ks,
                               const TableEaParams& ea,
                               const EngineParams& engine, RngStream rng,
                               int jobs = 1, bool per_bit_b = false,
                               const MatrixProgress& progress = {});

/// All sixteen B algorithms.
MatrixReport matrix_experiment(const TableEaParams& ea,
                               const EngineParams& engine, RngStream rng,
                               int jobs = 1, bool per_bit_b = false,
                               const MatrixProgress& progress = {});

/// Long-format CSV: row_algorithm,col_algorithm,mean_fitness,stddev,
/// meta_runs. Diagonal pairs are omitted.
std::string render_matrix_csv(const MatrixReport& report);

/// Aligned text table, one row per algorithm, "-" on the diagonal.
std::string render_matrix_text(const MatrixReport& report);

}  // namespace nfl
