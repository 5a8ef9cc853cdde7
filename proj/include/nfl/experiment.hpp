#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "nfl/engine.hpp"
#include "nfl/gp_evolve.hpp"
#include "nfl/landscape.hpp"
#include "nfl/matrix.hpp"
#include "nfl/table_evolve.hpp"

namespace nfl {

/// Fully resolved experiment description. Every field that can influence
/// artifact content is echoed into artifact headers; jobs, out_dir and
/// progress are execution policy and deliberately excluded, so the same
/// config produces byte-identical artifacts at any parallelism.
struct ExperimentConfig {
  std::string command;  // evolve-gp | evolve-table | matrix | landscape | replay
  std::string pair;     // "A2,A1", "B16,B1", ...
  std::uint64_t seed = 1;
  int meta_runs = 10;  // paper-scale experiments use 30
  int runs = 0;        // duel runs per side; 0 picks the command default
  int max_steps = 100;
  int max_mutations = 20;
  bool count_rejected = false;
  int population = 0;  // 0 picks the command default (50 trees, 10 tables)
  int generations = 10;
  double crossover_probability = 0.9;
  int mutations_per_chromosome = 1;
  int max_depth = 6;
  double per_bit_mutation = 0.01;
  int table_n = 16;
  int table_m = 8;
  bool ephemeral_constants = true;
  bool paired_seeds = false;
  bool per_bit_b = false;
  bool tournament = false;
  std::string algos;      // matrix subset, "B1,B8,B16" or "1,8,16"; empty = all
  bool baseline = false;  // landscape: append iid-uniform baseline rows
  std::string algorithm;  // replay preset name
  std::vector<std::string> inputs;  // landscape/replay input files

  // Execution policy, excluded from artifact headers.
  int jobs = 1;
  std::filesystem::path out_dir = "out";
  bool progress = false;  // per-unit lines on stderr
};

/// Duel runs per side after applying the command default: 500 for GP trees,
/// 100 for tables and replay.
int resolved_runs(const ExperimentConfig& config);
int resolved_population(const ExperimentConfig& config);

/// "# key=value" lines: artifact format version, tool version, and the
/// resolved config. Two artifacts with equal headers are byte-identical.
std::string artifact_header(const ExperimentConfig& config);

/// Splits "A2,A1" into two algorithm presets. Throws std::invalid_argument
/// naming the valid presets on failure.
std::pair<AlgorithmSpec, AlgorithmSpec> resolve_pair(const std::string& pair,
                                                     bool per_bit_b);

/// Matrix algorithm subset: "B1,B8,B16" or "1,8,16"; empty means B1..B16.
std::vector<int> resolve_algos(const std::string& algos);

EngineParams engine_params_from(const ExperimentConfig& config);
GpParams gp_params_from(const ExperimentConfig& config);
TableEaParams table_params_from(const ExperimentConfig& config);

struct EvolveSummary {
  std::vector<double> fitness;  // best fitness per meta run
  double mean_fitness = 0.0;
  std::vector<std::filesystem::path> function_files;
  std::filesystem::path summary_csv;
  std::filesystem::path history_csv;
};

/// meta_runs repetitions of evolve_gp_function; writes trees/run_<i>.sexpr,
/// summary.csv (per-run fitness plus mean row), fitness_history.csv.
EvolveSummary cmd_evolve_gp(const ExperimentConfig& config);

/// Same shape for tables: tables/run_<i>.nflf (bit-exact format) with a
/// .meta text sidecar carrying the header, plus summary and history CSVs.
EvolveSummary cmd_evolve_table(const ExperimentConfig& config);

struct MatrixArtifacts {
  MatrixReport report;
  std::filesystem::path csv;
  std::filesystem::path txt;
};

MatrixArtifacts cmd_matrix(const ExperimentConfig& config);

struct LandscapeArtifacts {
  LandscapeSummary summary;
  std::filesystem::path csv;
};

/// Peak counts for config.inputs; writes landscape.csv with per-file rows,
/// a mean row, and iid-uniform baseline rows when config.baseline is set.
LandscapeArtifacts cmd_landscape(const ExperimentConfig& config);

struct ReplaySummary {
  std::vector<RunOutcome> outcomes;
  double mean_best = 0.0;
  std::filesystem::path csv;
};

/// Runs config.algorithm on the stored function (single input: .nflf table
/// or .sexpr tree) `runs` times; writes replay.csv.
ReplaySummary cmd_replay(const ExperimentConfig& config);

/// Reads a tree artifact, skipping "#" header lines.
GpTree read_tree_file(const std::filesystem::path& path);

/// Creates parent directories and writes content, byte-exact.
void write_text_file(const std::filesystem::path& path,
                     const std::string& content);

}  // namespace nfl
