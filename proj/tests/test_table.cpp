#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <vector>

#include "nfl/rng.hpp"
#include "nfl/table_evolve.hpp"
#include "nfl/table_function.hpp"
#include "nfl/table_io.hpp"

using namespace nfl;

namespace {

std::filesystem::path temp_file(const char* name) {
  return std::filesystem::temp_directory_path() / name;
}

}  // namespace

TEST_CASE("value mask widths") {
  CHECK(TableFunction::value_mask(1) == 0x1ull);
  CHECK(TableFunction::value_mask(8) == 0xFFull);
  CHECK(TableFunction::value_mask(16) == 0xFFFFull);
  CHECK(TableFunction::value_mask(64) == ~0ull);
}

TEST_CASE("table validation enforces the invariants") {
  TableFunction good{2, 8, {0, 1, 2, 255}};
  CHECK_NOTHROW(validate(good));

  TableFunction wrong_size{2, 8, {0, 1, 2}};
  CHECK_THROWS_AS(validate(wrong_size), std::invalid_argument);

  TableFunction too_big{2, 8, {0, 1, 2, 256}};
  CHECK_THROWS_AS(validate(too_big), std::invalid_argument);

  TableFunction bad_n{0, 8, {}};
  CHECK_THROWS_AS(validate(bad_n), std::invalid_argument);
  TableFunction huge_n{31, 8, {}};
  CHECK_THROWS_AS(validate(huge_n), std::invalid_argument);
  TableFunction bad_m{2, 0, {0, 0, 0, 0}};
  CHECK_THROWS_AS(validate(bad_m), std::invalid_argument);
  TableFunction wide_m{2, 65, {0, 0, 0, 0}};
  CHECK_THROWS_AS(validate(wide_m), std::invalid_argument);
}

TEST_CASE("table evaluation looks up by unsigned index") {
  const TableFunction zeros = constant_table(16, 8, 0);
  CHECK(eval_table(zeros, BitGenotype(0x1234, 16)) == 0);

  TableFunction low_byte{16, 8, {}};
  low_byte.values.resize(1u << 16);
  for (std::size_t i = 0; i < low_byte.values.size(); ++i)
    low_byte.values[i] = i & 0xFF;
  CHECK(eval_table(low_byte, BitGenotype(0x0102, 16)) == 2);
  CHECK(eval_table(low_byte, BitGenotype(0xFF00, 16)) == 0);
  CHECK(eval_table(low_byte, BitGenotype(0x00FF, 16)) == 255);

  CHECK_THROWS_AS(eval_table(zeros, BitGenotype(0, 8)), std::invalid_argument);
}

TEST_CASE("random tables regenerate exactly from the seed") {
  RngStream rng(5);
  const TableFunction t = random_table(16, 8, rng);
  CHECK_NOTHROW(validate(t));
  // Entries are drawn in ascending index order, one word per entry.
  RngStream replay(5);
  for (std::size_t i = 0; i < t.values.size(); ++i)
    REQUIRE(t.values[i] == (replay.next_u64() & 0xFFull));
  RngStream again(5);
  CHECK(random_table(16, 8, again) == t);
}

TEST_CASE("random table entries are uniform") {
  RngStream rng(6);
  const TableFunction t = random_table(16, 8, rng);
  // Chi-square over the first 10^4 entries against uniform on [0,255]:
  // 255 degrees of freedom, 0.001 significance threshold 330.52.
  int counts[256] = {};
  for (std::size_t i = 0; i < 10000; ++i) ++counts[t.values[i]];
  const double expected = 10000.0 / 256.0;
  double chi2 = 0.0;
  for (int c : counts) {
    const double d = c - expected;
    chi2 += d * d / expected;
  }
  CHECK(chi2 < 330.5197);

  long long set_bits = 0;
  for (std::uint64_t v : t.values) set_bits += std::popcount(v);
  // Binomial(2^16 * 8, 1/2): mean 262144, 5 sigma ~ 1810.
  CHECK(std::abs(set_bits - 262144ll) < 1810);
}

TEST_CASE("constant tables hold one value") {
  const TableFunction t = constant_table(4, 8, 200);
  REQUIRE(t.values.size() == 16);
  for (std::uint64_t v : t.values) REQUIRE(v == 200);
  CHECK_THROWS_AS(constant_table(4, 8, 256), std::invalid_argument);
}

TEST_CASE("masked crossover picks bits by mask") {
  const TableFunction a = constant_table(2, 8, 0x00);
  const TableFunction b = constant_table(2, 8, 0xFF);
  const std::vector<std::uint64_t> from_a(4, 0x00), from_b(4, 0xFF),
      mixed(4, 0b10101010);
  CHECK(crossover_masked(a, b, from_a) == a);
  CHECK(crossover_masked(a, b, from_b) == b);
  const TableFunction mix = crossover_masked(a, b, mixed);
  for (std::uint64_t v : mix.values) REQUIRE(v == 0b10101010);
}

TEST_CASE("uniform crossover takes every bit from one parent") {
  RngStream rng(7);
  RngStream table_rng(8);
  const TableFunction a = random_table(4, 8, table_rng);
  const TableFunction b = random_table(4, 8, table_rng);
  for (int trial = 0; trial < 200; ++trial) {
    const TableFunction child = uniform_crossover(a, b, rng);
    CHECK_NOTHROW(validate(child));
    for (std::size_t i = 0; i < child.values.size(); ++i) {
      for (int bit = 0; bit < 8; ++bit) {
        const std::uint64_t c = (child.values[i] >> bit) & 1;
        const std::uint64_t pa = (a.values[i] >> bit) & 1;
        const std::uint64_t pb = (b.values[i] >> bit) & 1;
        REQUIRE((c == pa || c == pb));
      }
    }
  }
  const TableFunction same = uniform_crossover(a, a, rng);
  CHECK(same == a);
}

TEST_CASE("uniform crossover mixes both parents evenly") {
  RngStream rng(9);
  const TableFunction zeros = constant_table(16, 8, 0x00);
  const TableFunction ones = constant_table(16, 8, 0xFF);
  const TableFunction child = uniform_crossover(zeros, ones, rng);
  long long set_bits = 0;
  for (std::uint64_t v : child.values) set_bits += std::popcount(v);
  CHECK(std::abs(set_bits - 262144ll) < 1810);  // 5 sigma
}

TEST_CASE("uniform crossover rejects mismatched dimensions") {
  RngStream rng(10);
  const TableFunction a = constant_table(4, 8, 0);
  const TableFunction b = constant_table(5, 8, 0);
  const TableFunction c = constant_table(4, 7, 0);
  CHECK_THROWS_AS(uniform_crossover(a, b, rng), std::invalid_argument);
  CHECK_THROWS_AS(uniform_crossover(a, c, rng), std::invalid_argument);
}

TEST_CASE("table mutation rate edge cases") {
  RngStream rng(11);
  RngStream table_rng(12);
  const TableFunction t = random_table(6, 8, table_rng);
  CHECK(mutate_table(t, 0.0, rng) == t);
  const TableFunction complemented = mutate_table(t, 1.0, rng);
  for (std::size_t i = 0; i < t.values.size(); ++i)
    REQUIRE(complemented.values[i] == (~t.values[i] & 0xFFull));
  CHECK_THROWS_AS(mutate_table(t, -0.1, rng), std::invalid_argument);
  CHECK_THROWS_AS(mutate_table(t, 1.1, rng), std::invalid_argument);
}

TEST_CASE("table mutation flips a binomial number of bits") {
  RngStream rng(13);
  const TableFunction t = constant_table(16, 8, 0);
  long long flipped = 0;
  const int trials = 100;
  for (int i = 0; i < trials; ++i) {
    const TableFunction m = mutate_table(t, 0.01, rng);
    CHECK_NOTHROW(validate(m));
    for (std::uint64_t v : m.values) flipped += std::popcount(v);
  }
  const double mean = static_cast<double>(flipped) / trials;
  // Binomial(524288, 0.01): mean 5242.88, sd ~72.0, SE of the mean ~7.2.
  CHECK(std::abs(mean - 5242.88) < 3.0 * 7.21);
}

TEST_CASE("table objective views the table") {
  RngStream rng(14);
  const TableFunction t = random_table(8, 8, rng);
  const TableObjective obj(t);
  CHECK(obj.bit_length() == 8);
  for (std::uint32_t i = 0; i < 256; ++i)
    REQUIRE(obj.evaluate(BitGenotype(i, 8)) ==
            static_cast<double>(t.values[i]));
  TableFunction bad{2, 8, {0}};
  CHECK_THROWS_AS(TableObjective{bad}, std::invalid_argument);
}

TEST_CASE("crc32 reference vectors") {
  const std::uint8_t check[] = {'1', '2', '3', '4', '5', '6', '7', '8', '9'};
  CHECK(crc32(check) == 0xCBF43926u);
  CHECK(crc32({}) == 0x00000000u);
}

TEST_CASE("table serialization layout is bit-exact") {
  const TableFunction t{2, 8, {1, 2, 3, 255}};
  const std::vector<std::uint8_t> bytes = table_to_bytes(t);
  REQUIRE(bytes.size() == 15);
  CHECK(bytes[0] == 'N');
  CHECK(bytes[1] == 'F');
  CHECK(bytes[2] == 'L');
  CHECK(bytes[3] == 'F');
  CHECK(bytes[4] == 0x01);  // format version
  CHECK(bytes[5] == 2);     // n
  CHECK(bytes[6] == 8);     // m
  CHECK(bytes[7] == 1);
  CHECK(bytes[8] == 2);
  CHECK(bytes[9] == 3);
  CHECK(bytes[10] == 255);
  const std::uint32_t sum = crc32({bytes.data() + 7, 4});
  CHECK(bytes[11] == (sum & 0xFF));
  CHECK(bytes[12] == ((sum >> 8) & 0xFF));
  CHECK(bytes[13] == ((sum >> 16) & 0xFF));
  CHECK(bytes[14] == ((sum >> 24) & 0xFF));
}

TEST_CASE("wide outputs use multi-byte little-endian values") {
  const TableFunction t{1, 16, {0x0102, 0xFFEE}};
  const std::vector<std::uint8_t> bytes = table_to_bytes(t);
  REQUIRE(bytes.size() == 7 + 4 + 4);
  CHECK(bytes[7] == 0x02);
  CHECK(bytes[8] == 0x01);
  CHECK(bytes[9] == 0xEE);
  CHECK(bytes[10] == 0xFF);
  CHECK(table_from_bytes(bytes, "test") == t);
}

TEST_CASE("serialization round-trips through memory and disk") {
  RngStream rng(15);
  for (int i = 0; i < 20; ++i) {
    const int n = 1 + static_cast<int>(rng.uniform_below(8));
    const int m = 1 + static_cast<int>(rng.uniform_below(16));
    TableFunction t = random_table(n, m, rng);
    REQUIRE(table_from_bytes(table_to_bytes(t), "mem") == t);
  }
  const TableFunction t = random_table(10, 8, rng);
  const auto path = temp_file("nfl_test_roundtrip.nflf");
  save_table(t, path);
  CHECK(load_table(path) == t);
  std::filesystem::remove(path);
}

TEST_CASE("corrupted table files are rejected with the origin named") {
  RngStream rng(16);
  const TableFunction t = random_table(4, 8, rng);
  std::vector<std::uint8_t> bytes = table_to_bytes(t);

  std::vector<std::uint8_t> flipped = bytes;
  flipped[9] ^= 0x01;  // payload corruption breaks the checksum
  CHECK_THROWS_WITH_AS(table_from_bytes(flipped, "corrupt.nflf"),
                       doctest::Contains("corrupt.nflf"), std::runtime_error);
  CHECK_THROWS_WITH_AS(table_from_bytes(flipped, "corrupt.nflf"),
                       doctest::Contains("checksum"), std::runtime_error);

  std::vector<std::uint8_t> bad_magic = bytes;
  bad_magic[0] = 'X';
  CHECK_THROWS_WITH_AS(table_from_bytes(bad_magic, "f"),
                       doctest::Contains("magic"), std::runtime_error);

  std::vector<std::uint8_t> bad_version = bytes;
  bad_version[4] = 9;
  CHECK_THROWS_WITH_AS(table_from_bytes(bad_version, "f"),
                       doctest::Contains("version"), std::runtime_error);

  std::vector<std::uint8_t> truncated = bytes;
  truncated.pop_back();
  CHECK_THROWS_AS(table_from_bytes(truncated, "f"), std::runtime_error);

  CHECK_THROWS_AS(table_from_bytes({}, "f"), std::runtime_error);

  const auto missing = temp_file("nfl_test_missing.nflf");
  std::filesystem::remove(missing);
  CHECK_THROWS_AS(load_table(missing), std::runtime_error);
}

TEST_CASE("self duel table evolution is exactly zero with paired seeds") {
  TableEaParams ea;
  ea.population_size = 4;
  ea.generations = 2;
  ea.duel_runs = 10;
  ea.n = 8;
  ea.m = 8;
  ea.paired_duel_seeds = true;
  EngineParams engine;
  engine.max_steps = 30;
  const AlgorithmSpec b3 = b_preset(3);
  AlgorithmSpec small = b3;
  small.encoding_length = 8;
  const TableEvolveResult result =
      evolve_table_function(small, small, ea, engine, RngStream(21));
  CHECK(result.best_fitness == 0.0);
  for (double h : result.history) REQUIRE(h == 0.0);
}

TEST_CASE("table evolution produces a monotone history and a valid winner") {
  TableEaParams ea;
  ea.population_size = 5;
  ea.generations = 3;
  ea.duel_runs = 10;
  ea.n = 8;
  ea.m = 8;
  EngineParams engine;
  engine.max_steps = 40;
  AlgorithmSpec a = b_preset(8);
  a.encoding_length = 8;
  AlgorithmSpec b = b_preset(1);
  b.encoding_length = 8;
  const TableEvolveResult result =
      evolve_table_function(a, b, ea, engine, RngStream(22));
  REQUIRE(result.history.size() == 1 + 5 * 3);
  for (std::size_t i = 1; i < result.history.size(); ++i)
    REQUIRE(result.history[i] <= result.history[i - 1]);
  CHECK(result.best_fitness == result.history.back());
  CHECK_NOTHROW(validate(result.best));
  CHECK(result.best.n == 8);
  CHECK(result.best.m == 8);
}

TEST_CASE("table evolution is deterministic and independent of jobs") {
  TableEaParams ea;
  ea.population_size = 3;
  ea.generations = 2;
  ea.duel_runs = 6;
  ea.n = 8;
  EngineParams engine;
  engine.max_steps = 20;
  AlgorithmSpec a = b_preset(2);
  a.encoding_length = 8;
  AlgorithmSpec b = b_preset(5);
  b.encoding_length = 8;
  const TableEvolveResult r1 =
      evolve_table_function(a, b, ea, engine, RngStream(23), 1);
  const TableEvolveResult r2 =
      evolve_table_function(a, b, ea, engine, RngStream(23), 4);
  CHECK(r1.best_fitness == r2.best_fitness);
  CHECK(r1.best == r2.best);
  REQUIRE(r1.history == r2.history);
}

TEST_CASE("table evolution rejects mismatched encodings") {
  TableEaParams ea;
  ea.n = 8;
  EngineParams engine;
  CHECK_THROWS_AS(
      evolve_table_function(b_preset(1), b_preset(2), ea, engine, RngStream(1)),
      std::invalid_argument);
}

TEST_CASE("table ea parameter validation") {
  TableEaParams ea;
  CHECK_NOTHROW(validate(ea));
  ea.per_bit_mutation = 1.5;
  CHECK_THROWS_AS(validate(ea), std::invalid_argument);
  ea = TableEaParams{};
  ea.n = 0;
  CHECK_THROWS_AS(validate(ea), std::invalid_argument);
  ea = TableEaParams{};
  ea.duel_runs = 0;
  CHECK_THROWS_AS(validate(ea), std::invalid_argument);
  ea = TableEaParams{};
  ea.meta_runs = 0;
  CHECK_THROWS_AS(validate(ea), std::invalid_argument);
}
