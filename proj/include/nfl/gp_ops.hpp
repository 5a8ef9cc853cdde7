#pragma once

#include <cstddef>

#include "nfl/gp_tree.hpp"
#include "nfl/rng.hpp"

namespace nfl {

inline constexpr double kLeafProbability = 0.3;
inline constexpr double kEphemeralLow = -10.0;
inline constexpr double kEphemeralHigh = 10.0;
/// Redraws of the crossover point pair after the first violating draw.
inline constexpr int kCrossoverRedraws = 10;

/// Grow-method tree: each node below max_depth becomes a terminal with
/// probability kLeafProbability, otherwise a uniformly chosen operator.
/// Terminals are x, or 50/50 x versus a constant uniform in
/// [kEphemeralLow, kEphemeralHigh] when ephemeral_constants is set.
GpTree random_tree(int max_depth, RngStream& rng,
                   bool ephemeral_constants = true);

/// Copy of a with the subtree at ia replaced by b's subtree at ib.
/// Deterministic core of subtree_crossover; no depth bound applied.
GpTree graft_subtree(const GpTree& a, std::size_t ia, const GpTree& b,
                     std::size_t ib);

/// Uniformly chosen subtree of a copy of `a` replaced by a uniformly chosen
/// subtree of b. A result deeper than max_depth triggers a redraw of both
/// points, up to kCrossoverRedraws times; afterwards a copy of `a` is
/// returned unchanged.
GpTree subtree_crossover(const GpTree& a, const GpTree& b, RngStream& rng,
                         int max_depth = 6);

/// Exactly one uniformly chosen node changes: a binary operator becomes one
/// of the other two, sin and exp swap, and a leaf is replaced by a freshly
/// grown subtree within the remaining depth allowance.
GpTree mutate_tree(const GpTree& t, RngStream& rng, int max_depth = 6,
                   bool ephemeral_constants = true);

}  // namespace nfl
