#include "nfl/gp_ops.hpp"

#include <stdexcept>

namespace nfl {

namespace {

constexpr GpOp kOperators[] = {GpOp::kAdd, GpOp::kSub, GpOp::kMul, GpOp::kSin,
                               GpOp::kExp};

GpNode random_terminal(RngStream& rng, bool ephemeral_constants) {
  if (ephemeral_constants && rng.bernoulli(0.5)) {
    const double span = kEphemeralHigh - kEphemeralLow;
    return {GpOp::kConst, kEphemeralLow + span * rng.uniform01()};
  }
  return {GpOp::kVar, 0.0};
}

void grow(int allowance, RngStream& rng, bool ephemeral_constants,
          std::vector<GpNode>& out) {
  if (allowance <= 1 || rng.bernoulli(kLeafProbability)) {
    out.push_back(random_terminal(rng, ephemeral_constants));
    return;
  }
  const GpOp op = kOperators[rng.uniform_below(std::size(kOperators))];
  out.push_back({op, 0.0});
  for (int k = 0; k < arity(op); ++k)
    grow(allowance - 1, rng, ephemeral_constants, out);
}

}  // namespace

GpTree random_tree(int max_depth, RngStream& rng, bool ephemeral_constants) {
  if (max_depth < 1)
    throw std::invalid_argument("max_depth must be at least 1");
  GpTree tree;
  grow(max_depth, rng, ephemeral_constants, tree.nodes);
  return tree;
}

GpTree graft_subtree(const GpTree& a, std::size_t ia, const GpTree& b,
                     std::size_t ib) {
  if (ia >= a.nodes.size() || ib >= b.nodes.size())
    throw std::invalid_argument("graft point out of range");
  const std::size_t end_a = subtree_end(a, ia);
  const std::size_t end_b = subtree_end(b, ib);
  GpTree out;
  out.nodes.reserve(a.nodes.size() - (end_a - ia) + (end_b - ib));
  out.nodes.assign(a.nodes.begin(), a.nodes.begin() + ia);
  out.nodes.insert(out.nodes.end(), b.nodes.begin() + ib,
                   b.nodes.begin() + end_b);
  out.nodes.insert(out.nodes.end(), a.nodes.begin() + end_a, a.nodes.end());
  return out;
}

GpTree subtree_crossover(const GpTree& a, const GpTree& b, RngStream& rng,
                         int max_depth) {
  validate(a);
  validate(b);
  for (int draw = 0; draw <= kCrossoverRedraws; ++draw) {
    const std::size_t ia = rng.uniform_below(a.nodes.size());
    const std::size_t ib = rng.uniform_below(b.nodes.size());
    GpTree offspring = graft_subtree(a, ia, b, ib);
    if (tree_depth(offspring) <= max_depth) return offspring;
  }
  return a;
}

GpTree mutate_tree(const GpTree& t, RngStream& rng, int max_depth,
                   bool ephemeral_constants) {
  validate(t);
  const std::size_t index = rng.uniform_below(t.nodes.size());
  const GpOp op = t.nodes[index].op;
  GpTree out = t;
  switch (op) {
    case GpOp::kAdd:
    case GpOp::kSub:
    case GpOp::kMul: {
      GpOp others[2];
      int count = 0;
      for (GpOp candidate : {GpOp::kAdd, GpOp::kSub, GpOp::kMul})
        if (candidate != op) others[count++] = candidate;
      out.nodes[index].op = others[rng.uniform_below(2)];
      return out;
    }
    case GpOp::kSin:
      out.nodes[index].op = GpOp::kExp;
      return out;
    case GpOp::kExp:
      out.nodes[index].op = GpOp::kSin;
      return out;
    case GpOp::kVar:
    case GpOp::kConst: {
      const int allowance = max_depth - node_depths(t)[index] + 1;
      GpTree replacement;
      grow(allowance, rng, ephemeral_constants, replacement.nodes);
      return graft_subtree(t, index, replacement, 0);
    }
  }
  throw std::invalid_argument("unknown tree operator");
}

}  // namespace nfl
