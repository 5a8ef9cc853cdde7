#pragma once

#include <cmath>
#include <functional>
#include <utility>

#include "nfl/bit_genotype.hpp"

namespace nfl {

/// Minimization discards non-finite values by mapping them to this sentinel.
inline constexpr double kPenaltyValue = 1e300;

inline double finite_or_penalty(double v) {
  return std::isfinite(v) ? v : kPenaltyValue;
}

/// A test function over a fixed-length bit domain. Evaluation must be pure
/// (same genotype, same value), finite, and safe to call concurrently.
class ObjectiveFunction {
 public:
  virtual ~ObjectiveFunction() = default;
  virtual int bit_length() const = 0;
  virtual double evaluate(const BitGenotype& g) const = 0;
};

class ConstantObjective final : public ObjectiveFunction {
 public:
  ConstantObjective(int bit_length, double value)
      : bit_length_(bit_length), value_(value) {}
  int bit_length() const override { return bit_length_; }
  double evaluate(const BitGenotype&) const override { return value_; }

 private:
  int bit_length_;
  double value_;
};

/// Wraps an arbitrary callable; handy in tests.
class CallableObjective final : public ObjectiveFunction {
 public:
  CallableObjective(int bit_length, std::function<double(const BitGenotype&)> fn)
      : bit_length_(bit_length), fn_(std::move(fn)) {}
  int bit_length() const override { return bit_length_; }
  double evaluate(const BitGenotype& g) const override {
    return finite_or_penalty(fn_(g));
  }

 private:
  int bit_length_;
  std::function<double(const BitGenotype&)> fn_;
};

}  // namespace nfl
