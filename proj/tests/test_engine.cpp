#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "nfl/archive.hpp"
#include "nfl/engine.hpp"
#include "nfl/objective.hpp"
#include "nfl/rng.hpp"

using namespace nfl;

namespace {

AlgorithmSpec k_flip_spec(int length, int flips,
                          Acceptance acceptance = Acceptance::kElitist) {
  AlgorithmSpec spec;
  spec.name = "K" + std::to_string(flips);
  spec.encoding_length = length;
  spec.mutation = KFlipsMutation{flips};
  spec.acceptance = acceptance;
  return spec;
}

// Objective over L=4 defined extensionally by 16 values.
CallableObjective small_table(std::vector<double> values) {
  return CallableObjective(4, [values = std::move(values)](const BitGenotype& g) {
    return values[g.bits()];
  });
}

}  // namespace

TEST_CASE("constant objective exhausts the space") {
  const ConstantObjective f(4, 0.0);
  EngineParams params;
  params.max_steps = 16;
  for (int flips : {1, 4}) {
    const RunOutcome out = run_nfl(k_flip_spec(4, flips), f, params, RngStream(1));
    CHECK(out.best_value == 0.0);
    CHECK(out.distinct_visited == 16);
  }
}

TEST_CASE("exhaustive run always finds the global minimum") {
  EngineParams params;
  params.max_steps = 16;
  RngStream seeds(2024);
  const std::vector<AlgorithmSpec> algos = {
      k_flip_spec(4, 1), k_flip_spec(4, 4),
      AlgorithmSpec{"P", 4, PerBitMutation{0.5}, Acceptance::kAcceptAll}};
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<double> values(16);
    RngStream value_rng = seeds.child(trial);
    for (double& v : values) v = std::floor(value_rng.uniform01() * 64.0);
    const double truth = *std::min_element(values.begin(), values.end());
    const auto f = small_table(values);
    const auto& algo = algos[trial % algos.size()];
    const RunOutcome out = run_nfl(algo, f, params, seeds.child(10000 + trial));
    REQUIRE(out.best_value == truth);
    REQUIRE(out.distinct_visited == 16);
  }
}

TEST_CASE("max_steps is clamped to the search space size") {
  const ConstantObjective f(4, 1.0);
  EngineParams params;
  params.max_steps = 100;
  const RunOutcome out = run_nfl(k_flip_spec(4, 1), f, params, RngStream(3));
  CHECK(out.distinct_visited == 16);
}

TEST_CASE("distinct visited equals the step budget") {
  const CallableObjective f(8, [](const BitGenotype& g) {
    return static_cast<double>(g.bits());
  });
  EngineParams params;
  params.max_steps = 100;
  RunTrace trace;
  const RunOutcome out =
      run_nfl(k_flip_spec(8, 1), f, params, RngStream(4), &trace);
  CHECK(out.distinct_visited == 100);
  CHECK(trace.steps.size() == 100);
}

TEST_CASE("best value is the minimum over the trace") {
  const CallableObjective f(8, [](const BitGenotype& g) {
    const double x = static_cast<double>(g.bits());
    return (x - 77.0) * (x - 77.0);
  });
  EngineParams params;
  params.max_steps = 60;
  RunTrace trace;
  const RunOutcome out =
      run_nfl(k_flip_spec(8, 2), f, params, RngStream(5), &trace);
  REQUIRE(trace.steps.size() == 60);
  double min_seen = kPenaltyValue;
  for (const auto& step : trace.steps) min_seen = std::min(min_seen, step.value);
  CHECK(out.best_value == min_seen);
}

TEST_CASE("single step run reports the initial point") {
  const ConstantObjective f(16, 2.5);
  EngineParams params;
  params.max_steps = 1;
  RunTrace trace;
  const RunOutcome out =
      run_nfl(k_flip_spec(16, 1), f, params, RngStream(6), &trace);
  CHECK(out.best_value == 2.5);
  CHECK(out.distinct_visited == 1);
  CHECK(out.reinit_count == 0);
  REQUIRE(trace.steps.size() == 1);
  CHECK_FALSE(trace.steps[0].via_restart);
}

TEST_CASE("identical inputs and seed reproduce the run exactly") {
  const CallableObjective f(16, [](const BitGenotype& g) {
    return static_cast<double>((g.bits() * 2654435761u) & 0xFFFFu);
  });
  EngineParams params;
  RunTrace t1, t2;
  const RunOutcome a = run_nfl(k_flip_spec(16, 3), f, params, RngStream(7), &t1);
  const RunOutcome b = run_nfl(k_flip_spec(16, 3), f, params, RngStream(7), &t2);
  CHECK(a.best_value == b.best_value);
  CHECK(a.distinct_visited == b.distinct_visited);
  CHECK(a.reinit_count == b.reinit_count);
  REQUIRE(t1.steps.size() == t2.steps.size());
  for (std::size_t i = 0; i < t1.steps.size(); ++i) {
    REQUIRE(t1.steps[i].value == t2.steps[i].value);
    REQUIRE(t1.steps[i].via_restart == t2.steps[i].via_restart);
  }
  RunTrace t3;
  run_nfl(k_flip_spec(16, 3), f, params, RngStream(8), &t3);
  bool any_difference = t3.steps.size() != t1.steps.size();
  for (std::size_t i = 0; !any_difference && i < t1.steps.size(); ++i)
    any_difference = t1.steps[i].value != t3.steps[i].value;
  CHECK(any_difference);
}

TEST_CASE("selection falls back to a random jump when neighbors are archived") {
  const ConstantObjective f(4, 0.0);
  const AlgorithmSpec algo = k_flip_spec(4, 1);
  Archive archive(16);
  const BitGenotype curr(0b0000, 4);
  archive.insert(curr);
  for (int i = 0; i < 4; ++i) archive.insert(curr.with_flipped(i));
  EngineParams params;
  RngStream rng(9);
  const auto picked =
      select_new_solution(curr, 0.0, algo, f, archive, params, rng);
  REQUIRE(picked.has_value());
  CHECK(picked->via_restart);
  CHECK(picked->reinit_draws >= 1);
  CHECK_FALSE(archive.contains(picked->genotype));
  CHECK(picked->genotype.hamming_distance(curr) > 1);
}

TEST_CASE("selection takes the first accepted mutant at the operator distance") {
  const ConstantObjective f(16, 0.0);
  const AlgorithmSpec algo = k_flip_spec(16, 2, Acceptance::kAcceptAll);
  Archive archive(100);
  const BitGenotype curr(0x0F0F, 16);
  archive.insert(curr);
  EngineParams params;
  RngStream rng(10);
  const auto picked =
      select_new_solution(curr, 0.0, algo, f, archive, params, rng);
  REQUIRE(picked.has_value());
  CHECK_FALSE(picked->via_restart);
  CHECK(picked->reinit_draws == 0);
  CHECK(picked->genotype.hamming_distance(curr) == 2);
}

TEST_CASE("elitist rejections exhaust the mutation budget and force a jump") {
  // Every point except curr is strictly worse, so all mutants are rejected.
  const BitGenotype curr(0b0110, 4);
  const CallableObjective f(4, [curr](const BitGenotype& g) {
    return g == curr ? 0.0 : 1.0;
  });
  const AlgorithmSpec algo = k_flip_spec(4, 1);
  Archive archive(16);
  archive.insert(curr);
  EngineParams params;
  params.max_mutations = 5;
  RngStream rng(11);
  const auto picked =
      select_new_solution(curr, 0.0, algo, f, archive, params, rng);
  REQUIRE(picked.has_value());
  CHECK(picked->via_restart);
  CHECK_FALSE(archive.contains(picked->genotype));
  CHECK(picked->value == 1.0);  // adopted although worse: jumps skip acceptance
}

TEST_CASE("random jump adopts a worse point when it is the only one left") {
  std::vector<double> values(16, 0.0);
  values[0b1010] = 5.0;
  const auto f = small_table(values);
  const AlgorithmSpec algo = k_flip_spec(4, 1);
  Archive archive(16);
  for (std::uint32_t bits = 0; bits < 16; ++bits)
    if (bits != 0b1010) archive.insert(BitGenotype(bits, 4));
  EngineParams params;
  RngStream rng(12);
  const auto picked =
      select_new_solution(BitGenotype(0, 4), 0.0, algo, f, archive, params, rng);
  REQUIRE(picked.has_value());
  CHECK(picked->via_restart);
  CHECK(picked->genotype == BitGenotype(0b1010, 4));
  CHECK(picked->value == 5.0);
}

TEST_CASE("reinit count tallies every random draw taken") {
  // B16-style complement mutation on an identity objective restarts roughly
  // every other step, and draws can repeat archived points near the end.
  const CallableObjective f(16, [](const BitGenotype& g) {
    return static_cast<double>(g.bits());
  });
  EngineParams params;
  RunTrace trace;
  const RunOutcome out =
      run_nfl(k_flip_spec(16, 16), f, params, RngStream(13), &trace);
  int restarts = 0;
  for (const auto& step : trace.steps)
    if (step.via_restart) ++restarts;
  CHECK(restarts >= 1);
  CHECK(out.reinit_count >= restarts);
}

TEST_CASE("counting rejected offspring archives them in selection") {
  const CallableObjective f(4, [](const BitGenotype& g) {
    return static_cast<double>(g.bits());
  });
  const AlgorithmSpec algo = k_flip_spec(4, 1);
  Archive archive(16);
  const BitGenotype curr(0b0000, 4);  // every neighbor is strictly worse
  archive.insert(curr);
  EngineParams params;
  params.count_rejected = true;
  params.max_mutations = 20;
  RngStream rng(14);
  std::vector<RunTrace::Step> rejected;
  const auto picked = select_new_solution(curr, 0.0, algo, f, archive, params,
                                          rng, &rejected);
  REQUIRE(picked.has_value());
  CHECK(picked->via_restart);
  CHECK(rejected.size() >= 1);
  CHECK(rejected.size() <= 4);
  CHECK(archive.size() == 1 + rejected.size());
  for (const auto& step : rejected) {
    CHECK(step.value >= 1.0);  // rejected values, all worse than curr
    CHECK_FALSE(step.via_restart);
  }
}

TEST_CASE("counting rejected offspring still spends exactly the step budget") {
  const CallableObjective f(16, [](const BitGenotype& g) {
    return static_cast<double>((g.bits() * 40503u) & 0xFFFFu);
  });
  EngineParams params;
  params.max_steps = 80;
  params.count_rejected = true;
  RunTrace trace;
  const RunOutcome out =
      run_nfl(k_flip_spec(16, 1), f, params, RngStream(15), &trace);
  CHECK(out.distinct_visited == 80);
  CHECK(trace.steps.size() == 80);
  double min_seen = kPenaltyValue;
  for (const auto& step : trace.steps) min_seen = std::min(min_seen, step.value);
  CHECK(out.best_value == min_seen);
}

TEST_CASE("accept-all runs are identical under both accounting modes") {
  const CallableObjective f(16, [](const BitGenotype& g) {
    return static_cast<double>((g.bits() * 2654435761u) & 0xFFFFu);
  });
  const AlgorithmSpec algo = k_flip_spec(16, 2, Acceptance::kAcceptAll);
  EngineParams strict, literal;
  strict.count_rejected = true;
  RunTrace ts, tl;
  const RunOutcome a = run_nfl(algo, f, strict, RngStream(16), &ts);
  const RunOutcome b = run_nfl(algo, f, literal, RngStream(16), &tl);
  CHECK(a.best_value == b.best_value);
  CHECK(a.distinct_visited == b.distinct_visited);
  REQUIRE(ts.steps.size() == tl.steps.size());
  for (std::size_t i = 0; i < ts.steps.size(); ++i)
    REQUIRE(ts.steps[i].value == tl.steps[i].value);
}

TEST_CASE("engine validates parameters and dimensions") {
  const ConstantObjective f(16, 0.0);
  EngineParams params;
  params.max_steps = 0;
  CHECK_THROWS_AS(run_nfl(k_flip_spec(16, 1), f, params, RngStream(1)),
                  std::invalid_argument);
  params.max_steps = 10;
  params.max_mutations = 0;
  CHECK_THROWS_AS(run_nfl(k_flip_spec(16, 1), f, params, RngStream(1)),
                  std::invalid_argument);
  EngineParams good;
  CHECK_THROWS_AS(run_nfl(k_flip_spec(8, 1), f, good, RngStream(1)),
                  std::invalid_argument);
}
