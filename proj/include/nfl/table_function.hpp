#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "nfl/bit_genotype.hpp"
#include "nfl/objective.hpp"
#include "nfl/rng.hpp"

namespace nfl {

/// Exhaustive lookup table {0,1}^n -> {0,1}^m. values[i] is the image of
/// the n-bit input with unsigned value i.
struct TableFunction {
  int n = 16;
  int m = 8;
  std::vector<std::uint64_t> values;

  /// Bitmask of an m-bit output value.
  static std::uint64_t value_mask(int m);

  friend bool operator==(const TableFunction&, const TableFunction&) = default;
};

/// Structural check: n in [1,30], m in [1,64], exactly 2^n entries, every
/// entry within m bits. Throws std::invalid_argument on violation.
void validate(const TableFunction& t);

TableFunction random_table(int n, int m, RngStream& rng);
TableFunction constant_table(int n, int m, std::uint64_t value);

/// values[index(g)]; g must have length n.
std::uint64_t eval_table(const TableFunction& t, const BitGenotype& g);

/// Offspring bit (i, b) comes from parent b when bit b of masks[i] is set,
/// from parent a otherwise. Deterministic core of uniform_crossover.
TableFunction crossover_masked(const TableFunction& a, const TableFunction& b,
                               std::span<const std::uint64_t> masks);

/// Each offspring bit copied from parent a or b with probability 1/2,
/// independently. Dimension mismatch throws std::invalid_argument.
TableFunction uniform_crossover(const TableFunction& a,
                                const TableFunction& b, RngStream& rng);

/// Each of the 2^n * m bits flips independently with probability p.
TableFunction mutate_table(const TableFunction& t, double p, RngStream& rng);

/// Non-owning objective view of a table; the table must outlive it.
class TableObjective final : public ObjectiveFunction {
 public:
  explicit TableObjective(const TableFunction& table);

  int bit_length() const override { return table_->n; }
  double evaluate(const BitGenotype& genotype) const override {
    return static_cast<double>(table_->values[genotype.bits()]);
  }

 private:
  const TableFunction* table_;
};

}  // namespace nfl
