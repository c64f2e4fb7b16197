#pragma once

#include <cstdint>
#include <functional>

#include "romancrit/graph.hpp"

namespace romancrit {

inline constexpr unsigned kMaxEnumerationOrder = 7;
/// Upper limit even with the override: C(11,2) = 55 edge bits.
inline constexpr unsigned kMaxOverrideOrder = 11;

constexpr unsigned pair_count(unsigned n) noexcept { return n * (n - (n > 0 ? 1 : 0)) / 2; }

/// Bit k of `edge_mask` selects the k-th pair in graph6 order
/// (0,1),(0,2),(1,2),(0,3),...
Graph graph_from_edge_mask(unsigned n, std::uint64_t edge_mask);

using GraphConsumer = std::function<void(const Graph&)>;

/// Calls `consumer` once per labeled graph on n vertices, in ascending edge
/// mask order, and returns the number of graphs visited. Throws TooLarge above
/// kMaxEnumerationOrder unless `allow_large`.
std::uint64_t enumerate_labeled_graphs(unsigned n, const GraphConsumer& consumer,
                                       bool allow_large = false);

/// Visits edge masks in [begin, end). No order guard beyond kMaxOverrideOrder.
std::uint64_t enumerate_mask_range(unsigned n, std::uint64_t begin, std::uint64_t end,
                                   const GraphConsumer& consumer);

}  // namespace romancrit
