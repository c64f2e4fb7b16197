#pragma once

#include "romancrit/graph.hpp"

namespace romancrit {

inline constexpr unsigned kMaxIsomorphismOrder = 12;

/// Backtracking search for an edge-preserving bijection. Throws TooLarge when
/// either order exceeds kMaxIsomorphismOrder.
bool is_isomorphic(const Graph& g, const Graph& h);

}  // namespace romancrit
