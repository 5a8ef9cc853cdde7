#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace nfl {

/// Tree node operators. kVar is the input terminal x; kConst is an
/// ephemeral constant terminal.
enum class GpOp : std::uint8_t { kAdd, kSub, kMul, kSin, kExp, kVar, kConst };

int arity(GpOp op);
std::string_view op_name(GpOp op);

struct GpNode {
  GpOp op = GpOp::kVar;
  double value = 0.0;  // constant payload; stays 0.0 for every other op
  friend bool operator==(const GpNode&, const GpNode&) = default;
};

/// Expression tree over {add, sub, mul} (binary) and {sin, exp} (unary),
/// stored as a preorder node sequence. Depth counts levels from the root:
/// a lone terminal has depth 1.
struct GpTree {
  std::vector<GpNode> nodes;
  friend bool operator==(const GpTree&, const GpTree&) = default;
};

/// One past the last node of the subtree rooted at index. Throws
/// std::invalid_argument if the sequence is truncated.
std::size_t subtree_end(const GpTree& t, std::size_t index);

/// Depth of every node, 1-based from the root.
std::vector<int> node_depths(const GpTree& t);

int tree_depth(const GpTree& t);

/// Height of the subtree rooted at index: 1 for a leaf.
int subtree_height(const GpTree& t, std::size_t index);

/// Structurally well formed: exactly one complete expression, finite
/// constant payloads, zero payloads elsewhere.
bool valid(const GpTree& t);
void validate(const GpTree& t);  // throws std::invalid_argument if invalid

/// Arithmetic value of the tree at x. A non-finite result collapses to the
/// penalty sentinel.
double eval_tree(const GpTree& t, double x);

/// Parenthesized prefix form, e.g. "(sub (mul c-6 (mul x (mul x x))) x)".
/// Constants print as c<decimal> with a shortest round-trip decimal.
std::string print_tree(const GpTree& t);

/// Inverse of print_tree; accepts exactly the printer's grammar. Throws
/// std::invalid_argument on malformed input.
GpTree parse_tree(std::string_view text);

}  // namespace nfl
