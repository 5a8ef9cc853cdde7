#include "nfl/matrix.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <stdexcept>

#include "nfl/parallel.hpp"
#include "nfl/text.hpp"

namespace nfl {

namespace {

std::string fixed2(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

}  // namespace

MatrixReport matrix_experiment(const std::vector<int>& ks,
                               const TableEaParams& ea,
                               const EngineParams& engine, RngStream rng,
                               int jobs, bool per_bit_b,
                               const MatrixProgress& progress) {
  validate(ea);
  validate(engine);
  if (ea.n != 16 || ea.m != 8)
    throw std::invalid_argument(
        "matrix experiments run on the 16-bit/8-bit table domain");
  if (jobs < 1) throw std::invalid_argument("jobs must be at least 1");
  if (ks.empty())
    throw std::invalid_argument("at least one algorithm index required");
  for (int k : ks)
    if (k < 1 || k > 16)
      throw std::invalid_argument("B index must lie in [1, 16]");
  for (std::size_t i = 0; i < ks.size(); ++i)
    for (std::size_t j = i + 1; j < ks.size(); ++j)
      if (ks[i] == ks[j])
        throw std::invalid_argument("duplicate B index in algorithm list");

  struct Unit {
    std::size_t row, col;
    int rep;
  };
  std::vector<Unit> units;
  const std::size_t side = ks.size();
  units.reserve(side * (side - 1) * static_cast<std::size_t>(ea.meta_runs));
  for (std::size_t row = 0; row < side; ++row)
    for (std::size_t col = 0; col < side; ++col) {
      if (row == col) continue;
      for (int rep = 0; rep < ea.meta_runs; ++rep)
        units.push_back({row, col, rep});
    }

  std::vector<double> fitness(units.size());
  const int outer = static_cast<int>(
      std::min<std::size_t>(static_cast<std::size_t>(jobs), units.size()));
  const int inner = outer > 1 ? 1 : jobs;
  std::atomic<std::size_t> done{0};
  parallel_for(units.size(), outer, [&](std::size_t u) {
    const Unit& unit = units[u];
    const int k = ks[unit.row];
    const int j = ks[unit.col];
    // Seeds hang off the global (k, j, rep) identity, not the unit index,
    // so sub-matrices reproduce full-matrix cells.
    const RngStream seed =
        rng.child(static_cast<std::uint64_t>((k - 1) * 16 + (j - 1)))
            .child(static_cast<std::uint64_t>(unit.rep));
    const AlgorithmSpec a = b_preset(k, per_bit_b);
    const AlgorithmSpec b = b_preset(j, per_bit_b);
    fitness[u] = evolve_table_function(a, b, ea, engine, seed, inner)
                     .best_fitness;
    if (progress) progress(done.fetch_add(1) + 1, units.size());
  });

  MatrixReport report;
  report.ks = ks;
  report.per_bit_b = per_bit_b;
  report.cells.assign(side, std::vector<MatrixCell>(side));
  std::size_t u = 0;
  for (std::size_t row = 0; row < side; ++row)
    for (std::size_t col = 0; col < side; ++col) {
      if (row == col) continue;
      double sum = 0.0;
      for (int rep = 0; rep < ea.meta_runs; ++rep) sum += fitness[u + rep];
      const double mean = sum / ea.meta_runs;
      double sq = 0.0;
      for (int rep = 0; rep < ea.meta_runs; ++rep) {
        const double d = fitness[u + rep] - mean;
        sq += d * d;
      }
      const double stddev =
          ea.meta_runs > 1 ? std::sqrt(sq / (ea.meta_runs - 1)) : 0.0;
      report.cells[row][col] = {mean, stddev, ea.meta_runs};
      u += static_cast<std::size_t>(ea.meta_runs);
    }
  return report;
}

MatrixReport matrix_experiment(const TableEaParams& ea,
                               const EngineParams& engine, RngStream rng,
                               int jobs, bool per_bit_b,
                               const MatrixProgress& progress) {
  std::vector<int> ks(16);
  std::iota(ks.begin(), ks.end(), 1);
  return matrix_experiment(ks, ea, engine, rng, jobs, per_bit_b, progress);
}

std::string render_matrix_csv(const MatrixReport& report) {
  std::string out = "row_algorithm,col_algorithm,mean_fitness,stddev,meta_runs\n";
  for (std::size_t row = 0; row < report.ks.size(); ++row)
    for (std::size_t col = 0; col < report.ks.size(); ++col) {
      if (row == col) continue;
      const MatrixCell& cell = report.cells[row][col];
      out += "B" + std::to_string(report.ks[row]);
      out += ",B" + std::to_string(report.ks[col]);
      out += "," + format_double(cell.mean);
      out += "," + format_double(cell.stddev);
      out += "," + std::to_string(cell.meta_runs);
      out += '\n';
    }
  return out;
}

std::string render_matrix_text(const MatrixReport& report) {
  const std::size_t side = report.ks.size();
  std::vector<std::string> names(side);
  for (std::size_t i = 0; i < side; ++i)
    names[i] = "B" + std::to_string(report.ks[i]);

  std::vector<std::vector<std::string>> body(side,
                                             std::vector<std::string>(side));
  for (std::size_t row = 0; row < side; ++row)
    for (std::size_t col = 0; col < side; ++col)
      body[row][col] =
          row == col ? "-" : fixed2(report.cells[row][col].mean);

  std::vector<std::size_t> width(side + 1, 0);
  for (std::size_t i = 0; i < side; ++i)
    width[0] = std::max(width[0], names[i].size());
  for (std::size_t col = 0; col < side; ++col) {
    width[col + 1] = names[col].size();
    for (std::size_t row = 0; row < side; ++row)
      width[col + 1] = std::max(width[col + 1], body[row][col].size());
  }

  const auto pad = [](const std::string& s, std::size_t w) {
    return std::string(w - s.size(), ' ') + s;
  };
  std::string out = pad("", width[0]);
  for (std::size_t col = 0; col < side; ++col)
    out += "  " + pad(names[col], width[col + 1]);
  out += '\n';
  for (std::size_t row = 0; row < side; ++row) {
    out += pad(names[row], width[0]);
    for (std::size_t col = 0; col < side; ++col)
      out += "  " + pad(body[row][col], width[col + 1]);
    out += '\n';
  }
  return out;
}

}  // namespace nfl
