#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <stdexcept>

#include "nfl/duel.hpp"
#include "nfl/rng.hpp"
#include "nfl/table_function.hpp"

using namespace nfl;

namespace {

AlgorithmSpec small_b(int k, int length = 16) {
  AlgorithmSpec spec = b_preset(k);
  spec.encoding_length = length;
  return spec;
}

}  // namespace

TEST_CASE("duel options validation") {
  DuelOptions bad_runs;
  bad_runs.runs = 0;
  CHECK_THROWS_AS(validate(bad_runs), std::invalid_argument);
  DuelOptions bad_jobs;
  bad_jobs.jobs = 0;
  CHECK_THROWS_AS(validate(bad_jobs), std::invalid_argument);
  CHECK_NOTHROW(validate(DuelOptions{}));
}

TEST_CASE("constant zero objective duels to exactly zero") {
  const ConstantObjective f(16, 0.0);
  DuelOptions options;
  options.runs = 50;
  EngineParams engine;
  const DuelResult result =
      duel(f, b_preset(1), b_preset(16), options, engine, RngStream(1));
  CHECK(result.fitness == 0.0);
  CHECK(result.avg_a == 0.0);
  CHECK(result.avg_b == 0.0);
  CHECK(result.runs == 50);
  REQUIRE(result.best_a.size() == 50);
  REQUIRE(result.best_b.size() == 50);
  for (double v : result.best_a) REQUIRE(v == 0.0);
  for (double v : result.best_b) REQUIRE(v == 0.0);
}

TEST_CASE("swapping sides negates the fitness exactly") {
  RngStream table_rng(2);
  const TableFunction table = random_table(16, 8, table_rng);
  const TableObjective f(table);
  EngineParams engine_a;
  engine_a.max_steps = 60;
  EngineParams engine_b;
  engine_b.max_steps = 90;
  const RngStream seeds_a = RngStream(3).child(0);
  const RngStream seeds_b = RngStream(3).child(1);

  const DuelResult forward = duel_with_seed_streams(
      f, small_b(2), small_b(5), 40, engine_a, engine_b, seeds_a, seeds_b);
  const DuelResult backward = duel_with_seed_streams(
      f, small_b(5), small_b(2), 40, engine_b, engine_a, seeds_b, seeds_a);

  CHECK(backward.fitness == -forward.fitness);
  CHECK(backward.avg_a == forward.avg_b);
  CHECK(backward.avg_b == forward.avg_a);
  REQUIRE(backward.best_a == forward.best_b);
  REQUIRE(backward.best_b == forward.best_a);
  CHECK(forward.fitness == forward.avg_a - forward.avg_b);
}

TEST_CASE("paired self duel is exactly zero") {
  RngStream table_rng(4);
  const TableFunction table = random_table(16, 8, table_rng);
  const TableObjective f(table);
  DuelOptions options;
  options.runs = 30;
  options.paired_seeds = true;
  EngineParams engine;
  const DuelResult result =
      duel(f, b_preset(3), b_preset(3), options, engine, RngStream(5));
  CHECK(result.fitness == 0.0);
  REQUIRE(result.best_a == result.best_b);
}

TEST_CASE("unpaired self duel drifts away from zero") {
  RngStream table_rng(4);
  const TableFunction table = random_table(16, 8, table_rng);
  const TableObjective f(table);
  DuelOptions options;
  options.runs = 30;
  EngineParams engine;
  const DuelResult result =
      duel(f, b_preset(3), b_preset(3), options, engine, RngStream(5));
  CHECK(result.fitness != 0.0);  // independent seed sets, finite sample
}

TEST_CASE("exhaustive side always beats a single random probe") {
  // L=4 table with a unique minimum: 16 steps guarantee finding it, while a
  // single step is one uniform sample whose expectation is the table mean.
  TableFunction table{4, 8, {9,  40, 25, 77, 3,  120, 55, 200,
                             14, 60, 99, 31, 250, 8,   44, 170}};
  const TableObjective f(table);
  double table_mean = 0.0, table_var = 0.0;
  for (std::uint64_t v : table.values) table_mean += static_cast<double>(v);
  table_mean /= 16.0;
  for (std::uint64_t v : table.values) {
    const double d = static_cast<double>(v) - table_mean;
    table_var += d * d;
  }
  table_var /= 16.0;

  AlgorithmSpec probe = small_b(1, 4);
  EngineParams exhaustive;
  exhaustive.max_steps = 16;
  EngineParams single;
  single.max_steps = 1;
  DuelOptions options;
  options.runs = 2000;
  const DuelResult result =
      duel(f, probe, probe, options, exhaustive, single, RngStream(6));
  CHECK(result.avg_a == 3.0);  // every exhaustive run finds the unique min
  const double se = std::sqrt(table_var / options.runs);
  CHECK(std::abs(result.avg_b - table_mean) < 3.0 * se);
  CHECK(result.fitness == result.avg_a - result.avg_b);
  CHECK(result.fitness < 0.0);
}

TEST_CASE("duel results are independent of the jobs setting") {
  RngStream table_rng(7);
  const TableFunction table = random_table(16, 8, table_rng);
  const TableObjective f(table);
  EngineParams engine;
  DuelOptions serial;
  serial.runs = 25;
  DuelOptions parallel = serial;
  parallel.jobs = 4;
  const DuelResult r1 =
      duel(f, b_preset(4), b_preset(9), serial, engine, RngStream(8));
  const DuelResult r2 =
      duel(f, b_preset(4), b_preset(9), parallel, engine, RngStream(8));
  CHECK(r1.fitness == r2.fitness);
  CHECK(r1.avg_a == r2.avg_a);
  CHECK(r1.avg_b == r2.avg_b);
  REQUIRE(r1.best_a == r2.best_a);
  REQUIRE(r1.best_b == r2.best_b);
}

TEST_CASE("duels are reproducible from the seed") {
  RngStream table_rng(9);
  const TableFunction table = random_table(16, 8, table_rng);
  const TableObjective f(table);
  EngineParams engine;
  DuelOptions options;
  options.runs = 20;
  const DuelResult r1 =
      duel(f, b_preset(1), b_preset(2), options, engine, RngStream(10));
  const DuelResult r2 =
      duel(f, b_preset(1), b_preset(2), options, engine, RngStream(10));
  CHECK(r1.fitness == r2.fitness);
  REQUIRE(r1.best_a == r2.best_a);
  REQUIRE(r1.best_b == r2.best_b);
  const DuelResult r3 =
      duel(f, b_preset(1), b_preset(2), options, engine, RngStream(11));
  CHECK(r3.fitness != r1.fitness);
}

TEST_CASE("duel rejects mismatched encodings") {
  const ConstantObjective f16(16, 0.0);
  DuelOptions options;
  options.runs = 5;
  EngineParams engine;
  CHECK_THROWS_AS(duel(f16, *algorithm_preset("A1"), b_preset(1), options,
                       engine, RngStream(1)),
                  std::invalid_argument);
  CHECK_THROWS_AS(duel(f16, b_preset(1), *algorithm_preset("A1"), options,
                       engine, RngStream(1)),
                  std::invalid_argument);
}
