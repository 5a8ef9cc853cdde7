#pragma once

#include <vector>

#include "nfl/gp_tree.hpp"
#include "nfl/objective.hpp"

namespace nfl {

/// A GP tree compiled to a postfix program over a 32-bit unit-interval
/// encoding. Evaluation is bit-identical to eval_tree on the source tree.
class TreeObjective final : public ObjectiveFunction {
 public:
  explicit TreeObjective(GpTree tree);

  int bit_length() const override { return 32; }
  double evaluate(const BitGenotype& genotype) const override;

  /// Program value at a raw x, non-finite results collapsed to the penalty
  /// sentinel. Exposed for tests and artifact rendering.
  double value_at(double x) const;

  const GpTree& tree() const { return tree_; }

 private:
  GpTree tree_;
  std::vector<GpNode> postfix_;
  int stack_need_ = 0;
};

}  // namespace nfl
