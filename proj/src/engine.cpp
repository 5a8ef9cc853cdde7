#include "nfl/engine.hpp"

#include <stdexcept>

namespace nfl {

void validate(const EngineParams& params) {
  if (params.max_steps < 1)
    throw std::invalid_argument("max_steps must be at least 1");
  if (params.max_mutations < 1)
    throw std::invalid_argument("max_mutations must be at least 1");
}

std::optional<SelectedSolution> select_new_solution(
    const BitGenotype& curr, double curr_value, const AlgorithmSpec& algorithm,
    const ObjectiveFunction& objective, Archive& archive,
    const EngineParams& params, RngStream& rng,
    std::vector<RunTrace::Step>* rejected_inserts) {
  for (int attempt = 0; attempt < params.max_mutations; ++attempt) {
    const BitGenotype candidate = mutate(algorithm, curr, rng);
    if (archive.contains(candidate)) continue;
    const double value = finite_or_penalty(objective.evaluate(candidate));
    const bool take = accepted(algorithm.acceptance, curr_value, value);
    if (params.count_rejected) {
      archive.insert(candidate);
      if (take) return SelectedSolution{candidate, value, false, 0};
      if (rejected_inserts) rejected_inserts->push_back({value, false});
      if (archive.full()) return std::nullopt;  // budget spent on rejects
    } else if (take) {
      return SelectedSolution{candidate, value, false, 0};
    }
  }
  // Neighborhood looks exhausted; jump to a random unarchived point. The
  // jump ignores the acceptance rule.
  int draws = 0;
  for (;;) {
    const BitGenotype candidate =
        BitGenotype::random(algorithm.encoding_length, rng);
    ++draws;
    if (!archive.contains(candidate)) {
      const double value = finite_or_penalty(objective.evaluate(candidate));
      return SelectedSolution{candidate, value, true, draws};
    }
  }
}

RunOutcome run_nfl(const AlgorithmSpec& algorithm,
                   const ObjectiveFunction& objective,
                   const EngineParams& params, RngStream rng,
                   RunTrace* trace) {
  validate(algorithm);
  validate(params);
  if (algorithm.encoding_length != objective.bit_length())
    throw std::invalid_argument(
        "objective bit length does not match algorithm encoding length");

  const int length = algorithm.encoding_length;
  // No run can visit more distinct points than the space holds.
  std::int64_t steps = params.max_steps;
  if (length < 32) {
    const std::int64_t space = std::int64_t{1} << length;
    if (steps > space) steps = space;
  }

  Archive archive(static_cast<std::size_t>(steps));
  double best = kPenaltyValue;
  int reinit_count = 0;
  std::vector<RunTrace::Step> rejected;

  BitGenotype curr = BitGenotype::random(length, rng);
  double curr_value = finite_or_penalty(objective.evaluate(curr));
  archive.insert(curr);
  if (curr_value < best) best = curr_value;
  if (trace) trace->steps.push_back({curr_value, false});

  while (archive.size() < static_cast<std::size_t>(steps)) {
    rejected.clear();
    auto selected =
        select_new_solution(curr, curr_value, algorithm, objective, archive,
                            params, rng, params.count_rejected ? &rejected : nullptr);
    for (const auto& step : rejected) {
      if (step.value < best) best = step.value;
      if (trace) trace->steps.push_back(step);
    }
    if (!selected) break;  // count_rejected filled the archive mid-selection
    reinit_count += selected->reinit_draws;
    archive.insert(selected->genotype);  // no-op if already added above
    if (selected->value < best) best = selected->value;
    if (trace) trace->steps.push_back({selected->value, selected->via_restart});
    curr = selected->genotype;
    curr_value = selected->value;
  }

  return RunOutcome{best, static_cast<int>(archive.size()), reinit_count};
}

}  // namespace nfl
