#include "nfl/tree_objective.hpp"

#include <cmath>
#include <utility>

#include "nfl/encoding.hpp"

namespace nfl {

namespace {

// Appends the postfix order of the subtree at i and reports the stack height
// its evaluation needs.
int to_postfix(const std::vector<GpNode>& nodes, std::size_t& i,
               std::vector<GpNode>& out) {
  const GpNode node = nodes[i];
  ++i;
  int need = 1;
  if (arity(node.op) == 1) {
    need = to_postfix(nodes, i, out);
  } else if (arity(node.op) == 2) {
    const int left = to_postfix(nodes, i, out);
    const int right = to_postfix(nodes, i, out);
    // The left result stays on the stack while the right side evaluates.
    need = std::max(left, right + 1);
  }
  out.push_back(node);
  return need;
}

}  // namespace

TreeObjective::TreeObjective(GpTree tree) : tree_(std::move(tree)) {
  validate(tree_);
  postfix_.reserve(tree_.nodes.size());
  std::size_t i = 0;
  stack_need_ = to_postfix(tree_.nodes, i, postfix_);
}

double TreeObjective::value_at(double x) const {
  double fixed[8] = {};
  std::vector<double> spill;
  double* stack = fixed;
  if (stack_need_ > 8) {
    spill.resize(static_cast<std::size_t>(stack_need_));
    stack = spill.data();
  }
  int top = 0;
  for (const GpNode& instr : postfix_) {
    switch (instr.op) {
      case GpOp::kAdd:
        --top;
        stack[top - 1] = stack[top - 1] + stack[top];
        break;
      case GpOp::kSub:
        --top;
        stack[top - 1] = stack[top - 1] - stack[top];
        break;
      case GpOp::kMul:
        --top;
        stack[top - 1] = stack[top - 1] * stack[top];
        break;
      case GpOp::kSin:
        stack[top - 1] = std::sin(stack[top - 1]);
        break;
      case GpOp::kExp:
        stack[top - 1] = std::exp(stack[top - 1]);
        break;
      case GpOp::kVar:
        stack[top++] = x;
        break;
      case GpOp::kConst:
        stack[top++] = instr.value;
        break;
    }
  }
  return finite_or_penalty(stack[0]);
}

double TreeObjective::evaluate(const BitGenotype& genotype) const {
  return value_at(decode_unit_interval(genotype));
}

}  // namespace nfl
