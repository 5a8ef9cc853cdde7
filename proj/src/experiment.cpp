#include "nfl/experiment.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <memory>
#include <stdexcept>

#include "nfl/parallel.hpp"
#include "nfl/table_io.hpp"
#include "nfl/text.hpp"
#include "nfl/tree_objective.hpp"
#include "nfl/version.hpp"

namespace nfl {

namespace {

namespace fs = std::filesystem;

std::string bool01(bool b) { return b ? "1" : "0"; }

std::vector<std::string> split_csv(const std::string& text) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = text.find(',', start);
    std::string part = text.substr(
        start, comma == std::string::npos ? std::string::npos : comma - start);
    const std::size_t first = part.find_first_not_of(" \t");
    const std::size_t last = part.find_last_not_of(" \t");
    parts.push_back(first == std::string::npos
                        ? std::string()
                        : part.substr(first, last - first + 1));
    if (comma == std::string::npos) return parts;
    start = comma + 1;
  }
}

void check_common(const ExperimentConfig& config) {
  if (config.meta_runs < 1)
    throw std::invalid_argument("meta_runs must be at least 1");
  if (config.runs < 0)
    throw std::invalid_argument("runs must be positive");
  if (config.population < 0)
    throw std::invalid_argument("population must be positive");
  if (config.jobs < 1) throw std::invalid_argument("jobs must be at least 1");
}

/// Outer thread split over `units` independent units; nested duels only get
/// threads when the outer level is serial.
std::pair<int, int> split_jobs(int jobs, std::size_t units) {
  const int outer = static_cast<int>(
      std::min<std::size_t>(static_cast<std::size_t>(jobs), units));
  return {outer, outer > 1 ? 1 : jobs};
}

void write_bytes(const fs::path& path, const std::vector<std::uint8_t>& bytes) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out)
    throw std::runtime_error(path.string() + ": cannot open for writing");
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  out.flush();
  if (!out) throw std::runtime_error(path.string() + ": write failed");
}

double mean_of(const std::vector<double>& values) {
  double sum = 0.0;
  for (double v : values) sum += v;
  return sum / static_cast<double>(values.size());
}

struct MetaRunArtifacts {
  std::vector<double> fitness;
  std::vector<std::vector<double>> histories;
};

std::string render_summary_csv(const std::string& header,
                               const std::vector<double>& fitness) {
  std::string csv = header + "run,fitness\n";
  for (std::size_t i = 0; i < fitness.size(); ++i)
    csv += std::to_string(i + 1) + "," + format_double(fitness[i]) + "\n";
  csv += "mean," + format_double(mean_of(fitness)) + "\n";
  return csv;
}

std::string render_history_csv(
    const std::string& header,
    const std::vector<std::vector<double>>& histories) {
  std::string csv = header + "run,insertion,best_fitness\n";
  for (std::size_t i = 0; i < histories.size(); ++i)
    for (std::size_t k = 0; k < histories[i].size(); ++k)
      csv += std::to_string(i + 1) + "," + std::to_string(k) + "," +
             format_double(histories[i][k]) + "\n";
  return csv;
}

}  // namespace

int resolved_runs(const ExperimentConfig& config) {
  if (config.runs > 0) return config.runs;
  return config.command == "evolve-gp" ? 500 : 100;
}

int resolved_population(const ExperimentConfig& config) {
  if (config.population > 0) return config.population;
  return config.command == "evolve-gp" ? 50 : 10;
}

std::string artifact_header(const ExperimentConfig& config) {
  std::string h;
  const auto line = [&h](const char* key, const std::string& value) {
    h += "# ";
    h += key;
    h += '=';
    h += value;
    h += '\n';
  };
  line("artifact_format", std::to_string(kArtifactFormatVersion));
  line("tool_version", kToolVersion);
  line("command", config.command);
  line("seed", std::to_string(config.seed));
  line("pair", config.pair);
  line("meta_runs", std::to_string(config.meta_runs));
  line("runs", std::to_string(resolved_runs(config)));
  line("max_steps", std::to_string(config.max_steps));
  line("max_mutations", std::to_string(config.max_mutations));
  line("count_rejected", bool01(config.count_rejected));
  line("population", std::to_string(resolved_population(config)));
  line("generations", std::to_string(config.generations));
  line("crossover_probability", format_double(config.crossover_probability));
  line("mutations_per_chromosome",
       std::to_string(config.mutations_per_chromosome));
  line("max_depth", std::to_string(config.max_depth));
  line("per_bit_mutation", format_double(config.per_bit_mutation));
  line("table_n", std::to_string(config.table_n));
  line("table_m", std::to_string(config.table_m));
  line("ephemeral_constants", bool01(config.ephemeral_constants));
  line("paired_seeds", bool01(config.paired_seeds));
  line("per_bit_b", bool01(config.per_bit_b));
  line("tournament", bool01(config.tournament));
  line("algos", config.algos);
  line("baseline", bool01(config.baseline));
  line("algorithm", config.algorithm);
  std::string inputs;
  for (std::size_t i = 0; i < config.inputs.size(); ++i) {
    if (i > 0) inputs += ',';
    inputs += config.inputs[i];
  }
  line("inputs", inputs);
  return h;
}

std::pair<AlgorithmSpec, AlgorithmSpec> resolve_pair(const std::string& pair,
                                                     bool per_bit_b) {
  const std::vector<std::string> parts = split_csv(pair);
  const auto fail = [&pair]() {
    std::string names;
    for (const std::string& name : preset_names()) {
      if (!names.empty()) names += ", ";
      names += name;
    }
    throw std::invalid_argument("bad algorithm pair '" + pair +
                                "'; expected two of: " + names);
  };
  if (parts.size() != 2 || parts[0].empty() || parts[1].empty()) fail();
  const auto a = algorithm_preset(parts[0], per_bit_b);
  const auto b = algorithm_preset(parts[1], per_bit_b);
  if (!a || !b) fail();
  return {*a, *b};
}

namespace {

/// Rebinds a preset to `bits`-long strings. Mutation parameters are part of
/// the algorithm's identity and stay fixed; combinations they cannot express
/// (k flips on fewer than k bits, Gaussian off 32) fail validation here.
AlgorithmSpec with_encoding(AlgorithmSpec spec, int bits) {
  spec.encoding_length = bits;
  validate(spec);
  return spec;
}

}  // namespace

std::vector<int> resolve_algos(const std::string& algos) {
  std::vector<int> ks;
  if (algos.empty()) {
    for (int k = 1; k <= 16; ++k) ks.push_back(k);
    return ks;
  }
  for (const std::string& token : split_csv(algos)) {
    std::string digits = token;
    if (!digits.empty() && (digits[0] == 'B' || digits[0] == 'b'))
      digits = digits.substr(1);
    int k = 0;
    try {
      std::size_t used = 0;
      k = std::stoi(digits, &used);
      if (used != digits.size()) throw std::invalid_argument(token);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad algorithm list entry '" + token +
                                  "'; expected indices like B1,B8,B16");
    }
    ks.push_back(k);
  }
  return ks;
}

EngineParams engine_params_from(const ExperimentConfig& config) {
  EngineParams params;
  params.max_steps = config.max_steps;
  params.max_mutations = config.max_mutations;
  params.count_rejected = config.count_rejected;
  return params;
}

GpParams gp_params_from(const ExperimentConfig& config) {
  GpParams params;
  params.population_size = resolved_population(config);
  params.generations = config.generations;
  params.crossover_probability = config.crossover_probability;
  params.mutations_per_chromosome = config.mutations_per_chromosome;
  params.max_depth = config.max_depth;
  params.duel_runs = resolved_runs(config);
  params.ephemeral_constants = config.ephemeral_constants;
  params.paired_duel_seeds = config.paired_seeds;
  params.selection =
      config.tournament ? Selection::kTournament2 : Selection::kUniform;
  return params;
}

TableEaParams table_params_from(const ExperimentConfig& config) {
  TableEaParams params;
  params.population_size = resolved_population(config);
  params.generations = config.generations;
  params.crossover_probability = config.crossover_probability;
  params.per_bit_mutation = config.per_bit_mutation;
  params.duel_runs = resolved_runs(config);
  params.meta_runs = config.meta_runs;
  params.n = config.table_n;
  params.m = config.table_m;
  params.paired_duel_seeds = config.paired_seeds;
  params.selection =
      config.tournament ? Selection::kTournament2 : Selection::kUniform;
  return params;
}

void write_text_file(const fs::path& path, const std::string& content) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out)
    throw std::runtime_error(path.string() + ": cannot open for writing");
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  out.flush();
  if (!out) throw std::runtime_error(path.string() + ": write failed");
}

GpTree read_tree_file(const fs::path& path) {
  std::ifstream in(path);
  if (!in)
    throw std::runtime_error(path.string() + ": cannot open for reading");
  std::string body;
  std::string line;
  while (std::getline(in, line)) {
    const std::size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    body += line;
    body += '\n';
  }
  if (in.bad()) throw std::runtime_error(path.string() + ": read failed");
  try {
    return parse_tree(body);
  } catch (const std::invalid_argument& e) {
    throw std::runtime_error(path.string() + ": " + e.what());
  }
}

EvolveSummary cmd_evolve_gp(const ExperimentConfig& caller_config) {
  ExperimentConfig config = caller_config;
  config.command = "evolve-gp";
  check_common(config);
  const auto [algo_a, algo_b] = resolve_pair(config.pair, config.per_bit_b);
  const GpParams gp = gp_params_from(config);
  const EngineParams engine = engine_params_from(config);
  const RngStream root(config.seed);
  const std::size_t meta = static_cast<std::size_t>(config.meta_runs);
  const auto [outer, inner] = split_jobs(config.jobs, meta);

  std::vector<GpEvolveResult> results(meta);
  parallel_for(meta, outer, [&, inner = inner](std::size_t i) {
    results[i] =
        evolve_gp_function(algo_a, algo_b, gp, engine, root.child(i), inner);
    if (config.progress)
      std::fprintf(stderr, "evolve-gp run %zu/%zu fitness=%s\n", i + 1, meta,
                   format_double(results[i].best_fitness).c_str());
  });

  const std::string header = artifact_header(config);
  EvolveSummary summary;
  summary.fitness.reserve(meta);
  for (std::size_t i = 0; i < meta; ++i) {
    summary.fitness.push_back(results[i].best_fitness);
    const fs::path file =
        config.out_dir / "trees" / ("run_" + std::to_string(i + 1) + ".sexpr");
    std::string content = header;
    content += "# run=" + std::to_string(i + 1) + "\n";
    content += "# fitness=" + format_double(results[i].best_fitness) + "\n";
    content += print_tree(results[i].best);
    content += '\n';
    write_text_file(file, content);
    summary.function_files.push_back(file);
  }
  summary.mean_fitness = mean_of(summary.fitness);

  summary.summary_csv = config.out_dir / "summary.csv";
  write_text_file(summary.summary_csv,
                  render_summary_csv(header, summary.fitness));
  std::vector<std::vector<double>> histories;
  histories.reserve(meta);
  for (const auto& r : results) histories.push_back(r.history);
  summary.history_csv = config.out_dir / "fitness_history.csv";
  write_text_file(summary.history_csv, render_history_csv(header, histories));
  return summary;
}

EvolveSummary cmd_evolve_table(const ExperimentConfig& caller_config) {
  ExperimentConfig config = caller_config;
  config.command = "evolve-table";
  check_common(config);
  const auto [pair_a, pair_b] = resolve_pair(config.pair, config.per_bit_b);
  const AlgorithmSpec algo_a = with_encoding(pair_a, config.table_n);
  const AlgorithmSpec algo_b = with_encoding(pair_b, config.table_n);
  const TableEaParams ea = table_params_from(config);
  const EngineParams engine = engine_params_from(config);
  const RngStream root(config.seed);
  const std::size_t meta = static_cast<std::size_t>(config.meta_runs);
  const auto [outer, inner] = split_jobs(config.jobs, meta);

  std::vector<TableEvolveResult> results(meta);
  parallel_for(meta, outer, [&, inner = inner](std::size_t i) {
    results[i] =
        evolve_table_function(algo_a, algo_b, ea, engine, root.child(i), inner);
    if (config.progress)
      std::fprintf(stderr, "evolve-table run %zu/%zu fitness=%s\n", i + 1,
                   meta, format_double(results[i].best_fitness).c_str());
  });

  const std::string header = artifact_header(config);
  EvolveSummary summary;
  summary.fitness.reserve(meta);
  for (std::size_t i = 0; i < meta; ++i) {
    summary.fitness.push_back(results[i].best_fitness);
    const fs::path file =
        config.out_dir / "tables" / ("run_" + std::to_string(i + 1) + ".nflf");
    write_bytes(file, table_to_bytes(results[i].best));
    // The binary format has no room for headers; a text sidecar carries the
    // provenance instead.
    std::string meta_content = header;
    meta_content += "# run=" + std::to_string(i + 1) + "\n";
    meta_content += "# fitness=" + format_double(results[i].best_fitness) + "\n";
    write_text_file(fs::path(file.string() + ".meta"), meta_content);
    summary.function_files.push_back(file);
  }
  summary.mean_fitness = mean_of(summary.fitness);

  summary.summary_csv = config.out_dir / "summary.csv";
  write_text_file(summary.summary_csv,
                  render_summary_csv(header, summary.fitness));
  std::vector<std::vector<double>> histories;
  histories.reserve(meta);
  for (const auto& r : results) histories.push_back(r.history);
  summary.history_csv = config.out_dir / "fitness_history.csv";
  write_text_file(summary.history_csv, render_history_csv(header, histories));
  return summary;
}

MatrixArtifacts cmd_matrix(const ExperimentConfig& caller_config) {
  ExperimentConfig config = caller_config;
  config.command = "matrix";
  check_common(config);
  const std::vector<int> ks = resolve_algos(config.algos);
  const TableEaParams ea = table_params_from(config);
  const EngineParams engine = engine_params_from(config);
  MatrixProgress progress;
  if (config.progress)
    progress = [](std::size_t done, std::size_t total) {
      std::fprintf(stderr, "matrix unit %zu/%zu\n", done, total);
    };
  MatrixArtifacts artifacts;
  artifacts.report =
      matrix_experiment(ks, ea, engine, RngStream(config.seed), config.jobs,
                        config.per_bit_b, progress);
  const std::string header = artifact_header(config);
  artifacts.csv = config.out_dir / "matrix.csv";
  write_text_file(artifacts.csv, header + render_matrix_csv(artifacts.report));
  artifacts.txt = config.out_dir / "matrix.txt";
  write_text_file(artifacts.txt,
                  header + render_matrix_text(artifacts.report));
  return artifacts;
}

LandscapeArtifacts cmd_landscape(const ExperimentConfig& caller_config) {
  ExperimentConfig config = caller_config;
  config.command = "landscape";
  if (config.inputs.empty())
    throw std::invalid_argument("at least one table file required");
  std::vector<fs::path> files(config.inputs.begin(), config.inputs.end());
  LandscapeArtifacts artifacts;
  artifacts.summary = landscape_report(files);

  std::string csv = artifact_header(config);
  csv += "file,peaks,fraction\n";
  for (const LandscapeReport& r : artifacts.summary.reports)
    csv += r.source + "," + std::to_string(r.peak_count) + "," +
           format_double(r.peak_fraction) + "\n";
  csv += "mean," + format_double(artifacts.summary.mean_peak_count) + "," +
         format_double(artifacts.summary.mean_peak_fraction) + "\n";
  if (config.baseline) {
    // One row per distinct output width, in first-appearance order. The
    // peaks column stays empty: the expectation is a fraction.
    std::vector<int> seen;
    for (const LandscapeReport& r : artifacts.summary.reports) {
      if (std::find(seen.begin(), seen.end(), r.m) != seen.end()) continue;
      seen.push_back(r.m);
      csv += "iid-baseline(m=" + std::to_string(r.m) + "),," +
             format_double(expected_peak_fraction(r.m)) + "\n";
    }
  }
  artifacts.csv = config.out_dir / "landscape.csv";
  write_text_file(artifacts.csv, csv);
  return artifacts;
}

ReplaySummary cmd_replay(const ExperimentConfig& caller_config) {
  ExperimentConfig config = caller_config;
  config.command = "replay";
  check_common(config);
  if (config.inputs.size() != 1)
    throw std::invalid_argument("replay needs exactly one function file");
  const auto algo = algorithm_preset(config.algorithm, config.per_bit_b);
  if (!algo) {
    std::string names;
    for (const std::string& name : preset_names()) {
      if (!names.empty()) names += ", ";
      names += name;
    }
    throw std::invalid_argument("unknown algorithm '" + config.algorithm +
                                "'; expected one of: " + names);
  }

  const fs::path file = config.inputs[0];
  TableFunction table;
  AlgorithmSpec spec = *algo;
  std::unique_ptr<ObjectiveFunction> objective;
  const std::string extension = file.extension().string();
  if (extension == ".nflf") {
    table = load_table(file);
    spec = with_encoding(spec, table.n);
    objective = std::make_unique<TableObjective>(table);
  } else if (extension == ".sexpr") {
    objective = std::make_unique<TreeObjective>(read_tree_file(file));
  } else {
    throw std::invalid_argument(
        file.string() +
        ": unrecognized function file extension (expected .nflf or .sexpr)");
  }

  const EngineParams engine = engine_params_from(config);
  const int runs = resolved_runs(config);
  const RngStream root(config.seed);
  ReplaySummary summary;
  summary.outcomes.resize(static_cast<std::size_t>(runs));
  parallel_for(summary.outcomes.size(), config.jobs, [&](std::size_t i) {
    summary.outcomes[i] = run_nfl(spec, *objective, engine, root.child(i));
  });

  std::string csv = artifact_header(config);
  csv += "run,best_value,distinct_visited,reinit_count\n";
  double best_sum = 0.0;
  double distinct_sum = 0.0;
  double reinit_sum = 0.0;
  for (std::size_t i = 0; i < summary.outcomes.size(); ++i) {
    const RunOutcome& o = summary.outcomes[i];
    csv += std::to_string(i + 1) + "," + format_double(o.best_value) + "," +
           std::to_string(o.distinct_visited) + "," +
           std::to_string(o.reinit_count) + "\n";
    best_sum += o.best_value;
    distinct_sum += o.distinct_visited;
    reinit_sum += o.reinit_count;
  }
  const double count = static_cast<double>(summary.outcomes.size());
  summary.mean_best = best_sum / count;
  csv += "mean," + format_double(summary.mean_best) + "," +
         format_double(distinct_sum / count) + "," +
         format_double(reinit_sum / count) + "\n";
  summary.csv = config.out_dir / "replay.csv";
  write_text_file(summary.csv, csv);
  return summary;
}

}  // namespace nfl
