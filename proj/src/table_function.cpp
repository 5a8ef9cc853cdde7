#include "nfl/table_function.hpp"

#include <stdexcept>

namespace nfl {

std::uint64_t TableFunction::value_mask(int m) {
  return m >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << m) - 1;
}

namespace {

void check_widths(int n, int m) {
  if (n < 1 || n > 30)
    throw std::invalid_argument("table input width must lie in [1, 30]");
  if (m < 1 || m > 64)
    throw std::invalid_argument("table output width must lie in [1, 64]");
}

}  // namespace

void validate(const TableFunction& t) {
  check_widths(t.n, t.m);
  if (t.values.size() != (std::size_t{1} << t.n))
    throw std::invalid_argument("table must hold exactly 2^n values");
  const std::uint64_t mask = TableFunction::value_mask(t.m);
  for (std::uint64_t v : t.values)
    if ((v & ~mask) != 0)
      throw std::invalid_argument("table entry exceeds m bits");
}

TableFunction random_table(int n, int m, RngStream& rng) {
  check_widths(n, m);
  TableFunction t{n, m, {}};
  const std::uint64_t mask = TableFunction::value_mask(m);
  t.values.resize(std::size_t{1} << n);
  for (std::uint64_t& v : t.values) v = rng.next_u64() & mask;
  return t;
}

TableFunction constant_table(int n, int m, std::uint64_t value) {
  check_widths(n, m);
  TableFunction t{n, m, {}};
  t.values.assign(std::size_t{1} << n, value);
  validate(t);
  return t;
}

std::uint64_t eval_table(const TableFunction& t, const BitGenotype& g) {
  if (g.length() != t.n)
    throw std::invalid_argument("genotype length does not match table input width");
  return t.values[g.bits()];
}

TableFunction crossover_masked(const TableFunction& a, const TableFunction& b,
                               std::span<const std::uint64_t> masks) {
  if (a.n != b.n || a.m != b.m)
    throw std::invalid_argument("crossover parents differ in dimensions");
  if (masks.size() != a.values.size())
    throw std::invalid_argument("one crossover mask per table entry required");
  const std::uint64_t value_mask = TableFunction::value_mask(a.m);
  TableFunction out{a.n, a.m, {}};
  out.values.resize(a.values.size());
  for (std::size_t i = 0; i < a.values.size(); ++i) {
    const std::uint64_t take_b = masks[i] & value_mask;
    out.values[i] = (a.values[i] & ~take_b) | (b.values[i] & take_b);
  }
  return out;
}

TableFunction uniform_crossover(const TableFunction& a, const TableFunction& b,
                                RngStream& rng) {
  if (a.n != b.n || a.m != b.m)
    throw std::invalid_argument("crossover parents differ in dimensions");
  std::vector<std::uint64_t> masks(a.values.size());
  for (std::uint64_t& mask : masks) mask = rng.next_u64();
  return crossover_masked(a, b, masks);
}

TableFunction mutate_table(const TableFunction& t, double p, RngStream& rng) {
  if (p < 0.0 || p > 1.0)
    throw std::invalid_argument("mutation probability must lie in [0, 1]");
  TableFunction out = t;
  if (p == 0.0) return out;
  for (std::uint64_t& v : out.values)
    for (int bit = 0; bit < t.m; ++bit)
      if (rng.bernoulli(p)) v ^= std::uint64_t{1} << bit;
  return out;
}

TableObjective::TableObjective(const TableFunction& table) : table_(&table) {
  validate(table);
}

}  // namespace nfl
