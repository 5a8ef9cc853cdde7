#include <algorithm>
#include <cstdio>
#include <exception>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "nfl/experiment.hpp"
#include "nfl/text.hpp"
#include "nfl/version.hpp"

namespace {

std::string trimmed(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return {};
  return s.substr(begin, s.find_last_not_of(" \t\r") - begin + 1);
}

/// Expands "--config FILE" into "--key=value" tokens inserted at its
/// position. Keys are long option names without the dashes. A key whose
/// option already appears on the command line is dropped, so explicit flags
/// always win; unknown keys surface as ordinary unrecognized-option errors.
std::vector<std::string> expand_config(std::vector<std::string> args) {
  std::size_t at = args.size();
  std::size_t width = 0;
  std::string file;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config") {
      if (i + 1 >= args.size())
        throw std::invalid_argument("--config needs a file argument");
      file = args[i + 1];
      width = 2;
    } else if (args[i].rfind("--config=", 0) == 0) {
      file = args[i].substr(9);
      width = 1;
    } else {
      continue;
    }
    at = i;
    break;
  }
  if (at == args.size()) return args;
  for (std::size_t i = at + width; i < args.size(); ++i)
    if (args[i] == "--config" || args[i].rfind("--config=", 0) == 0)
      throw std::invalid_argument("--config may be given at most once");

  std::ifstream in(file);
  if (!in.good())
    throw std::invalid_argument("cannot open config file " + file);
  std::vector<std::string> expansion;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    line = trimmed(line);
    if (line.empty() || line[0] == '#') continue;
    const auto eq = line.find('=');
    const std::string where = file + ":" + std::to_string(lineno);
    if (eq == std::string::npos)
      throw std::invalid_argument(where + ": expected key=value");
    const std::string key = trimmed(line.substr(0, eq));
    const std::string value = trimmed(line.substr(eq + 1));
    if (key.empty()) throw std::invalid_argument(where + ": empty key");
    if (key == "config")
      throw std::invalid_argument(where + ": config files cannot nest");
    const std::string option = "--" + key;
    const std::string negated = "--no-" + key;
    bool given = false;
    for (const std::string& token : args)
      if (token == option || token.rfind(option + "=", 0) == 0 ||
          token == negated) {
        given = true;
        break;
      }
    if (!given) expansion.push_back(option + "=" + value);
  }
  args.erase(args.begin() + static_cast<std::ptrdiff_t>(at),
             args.begin() + static_cast<std::ptrdiff_t>(at + width));
  args.insert(args.begin() + static_cast<std::ptrdiff_t>(at),
              expansion.begin(), expansion.end());
  return args;
}

void add_shared_options(CLI::App* cmd, nfl::ExperimentConfig& config,
                        std::string& out_dir) {
  cmd->add_option_function<std::string>(
      "--config", [](const std::string&) {},
      "Flat key=value file of these options (keys are long option names "
      "without dashes); explicit flags win");
  cmd->add_option("--seed", config.seed, "Root random seed")
      ->capture_default_str();
  cmd->add_option("--runs", config.runs,
                  "Duel runs per side (0 = command default: 500 for trees, "
                  "100 for tables)")
      ->capture_default_str();
  cmd->add_option("--meta-runs", config.meta_runs,
                  "Independent repetitions of the whole experiment")
      ->capture_default_str();
  cmd->add_option("--max-steps", config.max_steps,
                  "Distinct points each search run visits")
      ->capture_default_str();
  cmd->add_option("--max-mutations", config.max_mutations,
                  "Mutation attempts per step before a random jump")
      ->capture_default_str();
  cmd->add_option("--jobs", config.jobs,
                  "Worker threads; artifacts do not depend on this")
      ->capture_default_str();
  cmd->add_option("--out", out_dir, "Output directory")
      ->capture_default_str();
  cmd->add_flag("--count-rejected", config.count_rejected,
                "Archive rejected offspring and charge them to the budget");
  cmd->add_flag("--paired-seeds", config.paired_seeds,
                "Both duel sides reuse one seed set (variance reduction)");
  cmd->add_flag("--per-bit-bk", config.per_bit_b,
                "B_k flips each bit with rate k/16 instead of exactly k bits");
  cmd->add_flag("--tournament", config.tournament,
                "Binary tournament parent selection instead of uniform");
}

void add_ea_options(CLI::App* cmd, nfl::ExperimentConfig& config) {
  cmd->add_option("--population", config.population,
                  "Population size (0 = command default: 50 trees, 10 tables)")
      ->capture_default_str();
  cmd->add_option("--generations", config.generations,
                  "Generations (population-size insertions each)")
      ->capture_default_str();
  cmd->add_option("--crossover-probability", config.crossover_probability,
                  "Probability an offspring is bred by crossover")
      ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Evolves optimization test functions on which one black-box search "
      "algorithm beats another, and analyzes the results"};
  app.set_version_flag("--version", nfl::kToolVersion);
  app.require_subcommand(1);

  nfl::ExperimentConfig config;
  std::string out_dir = "out";

  CLI::App* evolve_gp = app.add_subcommand(
      "evolve-gp", "Evolve a real-valued test function as an expression tree");
  add_shared_options(evolve_gp, config, out_dir);
  add_ea_options(evolve_gp, config);
  evolve_gp
      ->add_option("--pair", config.pair,
                   "Algorithms A,B to pit against each other, e.g. A2,A1")
      ->required();
  evolve_gp
      ->add_option("--mutations-per-chromosome",
                   config.mutations_per_chromosome,
                   "Tree mutations applied to each offspring")
      ->capture_default_str();
  evolve_gp
      ->add_option("--max-depth", config.max_depth, "Tree depth bound")
      ->capture_default_str();
  evolve_gp->add_flag(
      "--ephemeral-constants,!--no-ephemeral-constants",
      config.ephemeral_constants,
      "Allow constant terminals uniform in [-10,10] (default on)");

  CLI::App* evolve_table = app.add_subcommand(
      "evolve-table", "Evolve a test function as an exhaustive lookup table");
  add_shared_options(evolve_table, config, out_dir);
  add_ea_options(evolve_table, config);
  evolve_table
      ->add_option("--pair", config.pair,
                   "Algorithms A,B to pit against each other, e.g. B16,B1")
      ->required();
  evolve_table
      ->add_option("--per-bit-mutation", config.per_bit_mutation,
                   "Flip probability per table bit")
      ->capture_default_str();
  evolve_table
      ->add_option("--table-n", config.table_n, "Table input bits")
      ->capture_default_str();
  evolve_table
      ->add_option("--table-m", config.table_m, "Table output bits")
      ->capture_default_str();

  CLI::App* matrix = app.add_subcommand(
      "matrix", "Evolved-fitness matrix over ordered pairs of B algorithms");
  add_shared_options(matrix, config, out_dir);
  add_ea_options(matrix, config);
  matrix->add_option("--algos", config.algos,
                     "Subset of B indices, e.g. B1,B8,B16 (default: all 16)");
  matrix
      ->add_option("--per-bit-mutation", config.per_bit_mutation,
                   "Flip probability per table bit")
      ->capture_default_str();

  CLI::App* landscape = app.add_subcommand(
      "landscape", "Count local optima of stored table functions");
  add_shared_options(landscape, config, out_dir);
  landscape->add_option("files", config.inputs, "Table files (.nflf)")
      ->required();
  landscape->add_flag("--baseline", config.baseline,
                      "Append the iid-uniform expected peak fraction");

  CLI::App* replay = app.add_subcommand(
      "replay", "Re-run one algorithm on a stored function");
  add_shared_options(replay, config, out_dir);
  // A plain string keeps this positional single-valued; a vector target
  // would swallow the algorithm positional too.
  std::string replay_file;
  replay
      ->add_option("file", replay_file,
                   "Stored function (.nflf table or .sexpr tree)")
      ->required();
  replay->add_option("algorithm", config.algorithm, "Algorithm preset name")
      ->required();

  std::vector<std::string> args;
  try {
    args = expand_config(std::vector<std::string>(argv + 1, argv + argc));
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  std::reverse(args.begin(), args.end());
  try {
    app.parse(std::move(args));
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  config.out_dir = out_dir;
  config.progress = true;

  try {
    if (evolve_gp->parsed()) {
      const nfl::EvolveSummary s = nfl::cmd_evolve_gp(config);
      std::printf("mean_fitness=%s\n", nfl::format_double(s.mean_fitness).c_str());
      std::printf("summary_csv=%s\n", s.summary_csv.string().c_str());
      std::printf("history_csv=%s\n", s.history_csv.string().c_str());
      for (const auto& file : s.function_files)
        std::printf("function_file=%s\n", file.string().c_str());
    } else if (evolve_table->parsed()) {
      const nfl::EvolveSummary s = nfl::cmd_evolve_table(config);
      std::printf("mean_fitness=%s\n", nfl::format_double(s.mean_fitness).c_str());
      std::printf("summary_csv=%s\n", s.summary_csv.string().c_str());
      std::printf("history_csv=%s\n", s.history_csv.string().c_str());
      for (const auto& file : s.function_files)
        std::printf("function_file=%s\n", file.string().c_str());
    } else if (matrix->parsed()) {
      const nfl::MatrixArtifacts a = nfl::cmd_matrix(config);
      std::printf("matrix_csv=%s\n", a.csv.string().c_str());
      std::printf("matrix_txt=%s\n", a.txt.string().c_str());
    } else if (landscape->parsed()) {
      const nfl::LandscapeArtifacts a = nfl::cmd_landscape(config);
      std::printf("mean_peak_count=%s\n",
                  nfl::format_double(a.summary.mean_peak_count).c_str());
      std::printf("mean_peak_fraction=%s\n",
                  nfl::format_double(a.summary.mean_peak_fraction).c_str());
      std::printf("landscape_csv=%s\n", a.csv.string().c_str());
    } else if (replay->parsed()) {
      config.inputs = {replay_file};
      const nfl::ReplaySummary s = nfl::cmd_replay(config);
      std::printf("mean_best=%s\n", nfl::format_double(s.mean_best).c_str());
      std::printf("replay_csv=%s\n", s.csv.string().c_str());
    }
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
