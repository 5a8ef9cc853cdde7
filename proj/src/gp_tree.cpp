#include "nfl/gp_tree.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "nfl/objective.hpp"
#include "nfl/text.hpp"

namespace nfl {

int arity(GpOp op) {
  switch (op) {
    case GpOp::kAdd:
    case GpOp::kSub:
    case GpOp::kMul:
      return 2;
    case GpOp::kSin:
    case GpOp::kExp:
      return 1;
    case GpOp::kVar:
    case GpOp::kConst:
      return 0;
  }
  throw std::invalid_argument("unknown tree operator");
}

std::string_view op_name(GpOp op) {
  switch (op) {
    case GpOp::kAdd: return "add";
    case GpOp::kSub: return "sub";
    case GpOp::kMul: return "mul";
    case GpOp::kSin: return "sin";
    case GpOp::kExp: return "exp";
    case GpOp::kVar: return "x";
    case GpOp::kConst: return "c";
  }
  throw std::invalid_argument("unknown tree operator");
}

std::size_t subtree_end(const GpTree& t, std::size_t index) {
  int pending = 1;
  std::size_t i = index;
  while (pending > 0) {
    if (i >= t.nodes.size())
      throw std::invalid_argument("truncated tree node sequence");
    pending += arity(t.nodes[i].op) - 1;
    ++i;
  }
  return i;
}

namespace {

void fill_depths(const std::vector<GpNode>& nodes, std::size_t& i, int depth,
                 std::vector<int>& out) {
  const int children = arity(nodes[i].op);
  out[i] = depth;
  ++i;
  for (int k = 0; k < children; ++k) fill_depths(nodes, i, depth + 1, out);
}

}  // namespace

std::vector<int> node_depths(const GpTree& t) {
  validate(t);
  std::vector<int> out(t.nodes.size(), 0);
  std::size_t i = 0;
  fill_depths(t.nodes, i, 1, out);
  return out;
}

int tree_depth(const GpTree& t) {
  const std::vector<int> depths = node_depths(t);
  return *std::max_element(depths.begin(), depths.end());
}

int subtree_height(const GpTree& t, std::size_t index) {
  const std::vector<int> depths = node_depths(t);
  if (index >= t.nodes.size())
    throw std::invalid_argument("subtree index out of range");
  const std::size_t end = subtree_end(t, index);
  const int root_depth = depths[index];
  int deepest = root_depth;
  for (std::size_t i = index; i < end; ++i) deepest = std::max(deepest, depths[i]);
  return deepest - root_depth + 1;
}

bool valid(const GpTree& t) {
  if (t.nodes.empty()) return false;
  int pending = 1;
  for (const GpNode& node : t.nodes) {
    if (pending == 0) return false;  // trailing nodes past the expression
    switch (node.op) {
      case GpOp::kAdd:
      case GpOp::kSub:
      case GpOp::kMul:
      case GpOp::kSin:
      case GpOp::kExp:
      case GpOp::kVar:
        if (node.value != 0.0) return false;
        break;
      case GpOp::kConst:
        if (!std::isfinite(node.value)) return false;
        break;
      default:
        return false;
    }
    pending += arity(node.op) - 1;
  }
  return pending == 0;
}

void validate(const GpTree& t) {
  if (!valid(t)) throw std::invalid_argument("malformed tree");
}

namespace {

double eval_at(const std::vector<GpNode>& nodes, std::size_t& i, double x) {
  const GpNode node = nodes[i];
  ++i;
  switch (node.op) {
    case GpOp::kAdd: {
      const double a = eval_at(nodes, i, x);
      const double b = eval_at(nodes, i, x);
      return a + b;
    }
    case GpOp::kSub: {
      const double a = eval_at(nodes, i, x);
      const double b = eval_at(nodes, i, x);
      return a - b;
    }
    case GpOp::kMul: {
      const double a = eval_at(nodes, i, x);
      const double b = eval_at(nodes, i, x);
      return a * b;
    }
    case GpOp::kSin:
      return std::sin(eval_at(nodes, i, x));
    case GpOp::kExp:
      return std::exp(eval_at(nodes, i, x));
    case GpOp::kVar:
      return x;
    case GpOp::kConst:
      return node.value;
  }
  throw std::invalid_argument("unknown tree operator");
}

}  // namespace

double eval_tree(const GpTree& t, double x) {
  std::size_t i = 0;
  return finite_or_penalty(eval_at(t.nodes, i, x));
}

namespace {

void print_at(const std::vector<GpNode>& nodes, std::size_t& i,
              std::string& out) {
  const GpNode node = nodes[i];
  ++i;
  if (node.op == GpOp::kVar) {
    out += 'x';
    return;
  }
  if (node.op == GpOp::kConst) {
    out += 'c';
    out += format_double(node.value);
    return;
  }
  out += '(';
  out += op_name(node.op);
  for (int k = 0; k < arity(node.op); ++k) {
    out += ' ';
    print_at(nodes, i, out);
  }
  out += ')';
}

struct Tokenizer {
  std::string_view text;
  std::size_t pos = 0;

  // Returns "(", ")", or an atom; empty view at end of input.
  std::string_view next() {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t' ||
                                 text[pos] == '\n' || text[pos] == '\r'))
      ++pos;
    if (pos == text.size()) return {};
    if (text[pos] == '(' || text[pos] == ')') return text.substr(pos++, 1);
    const std::size_t start = pos;
    while (pos < text.size() && text[pos] != '(' && text[pos] != ')' &&
           text[pos] != ' ' && text[pos] != '\t' && text[pos] != '\n' &&
           text[pos] != '\r')
      ++pos;
    return text.substr(start, pos - start);
  }
};

[[noreturn]] void parse_fail(std::string_view what) {
  throw std::invalid_argument("tree parse error: " + std::string(what));
}

GpOp operator_for(std::string_view token) {
  for (GpOp op : {GpOp::kAdd, GpOp::kSub, GpOp::kMul, GpOp::kSin, GpOp::kExp})
    if (token == op_name(op)) return op;
  parse_fail("unknown operator '" + std::string(token) + "'");
}

void parse_expr(Tokenizer& tok, std::vector<GpNode>& out) {
  const std::string_view token = tok.next();
  if (token.empty()) parse_fail("unexpected end of input");
  if (token == ")") parse_fail("unexpected ')'");
  if (token == "(") {
    const std::string_view head = tok.next();
    if (head.empty() || head == "(" || head == ")")
      parse_fail("expected an operator after '('");
    const GpOp op = operator_for(head);
    out.push_back({op, 0.0});
    for (int k = 0; k < arity(op); ++k) parse_expr(tok, out);
    if (tok.next() != ")") parse_fail("expected ')'");
    return;
  }
  if (token == "x") {
    out.push_back({GpOp::kVar, 0.0});
    return;
  }
  if (token.size() > 1 && token[0] == 'c') {
    out.push_back({GpOp::kConst, parse_double(token.substr(1))});
    return;
  }
  parse_fail("unexpected token '" + std::string(token) + "'");
}

}  // namespace

std::string print_tree(const GpTree& t) {
  validate(t);
  std::string out;
  std::size_t i = 0;
  print_at(t.nodes, i, out);
  return out;
}

GpTree parse_tree(std::string_view text) {
  Tokenizer tok{text};
  GpTree tree;
  parse_expr(tok, tree.nodes);
  if (!tok.next().empty()) parse_fail("trailing input after expression");
  validate(tree);
  return tree;
}

}  // namespace nfl
