#include "romancrit/enumerate.hpp"

#include <array>

namespace romancrit {

Graph graph_from_edge_mask(unsigned n, std::uint64_t edge_mask) {
  if (n > kMaxOverrideOrder) throw Error(ErrorCode::TooLarge, "edge mask enumeration limited to order 11");
  std::array<Mask, kMaxOverrideOrder> rows{};
  unsigned k = 0;
  for (Vertex v = 1; v < n; ++v)
    for (Vertex u = 0; u < v; ++u, ++k)
      if ((edge_mask >> k) & 1U) {
        rows[u] |= bit(v);
        rows[v] |= bit(u);
      }
  return Graph::from_adjacency(n, std::span<const Mask>(rows.data(), n));
}

std::uint64_t enumerate_mask_range(unsigned n, std::uint64_t begin, std::uint64_t end,
                                   const GraphConsumer& consumer) {
  if (n > kMaxOverrideOrder) throw Error(ErrorCode::TooLarge, "enumeration limited to order 11");
  std::uint64_t count = 0;
  for (std::uint64_t m = begin; m < end; ++m, ++count) consumer(graph_from_edge_mask(n, m));
  return count;
}

std::uint64_t enumerate_labeled_graphs(unsigned n, const GraphConsumer& consumer, bool allow_large) {
  if (n > kMaxEnumerationOrder && !allow_large)
    throw Error(ErrorCode::TooLarge, "labeled enumeration above order 7 needs the large-order override");
  if (n > kMaxOverrideOrder) throw Error(ErrorCode::TooLarge, "enumeration limited to order 11");
  return enumerate_mask_range(n, 0, std::uint64_t{1} << pair_count(n), consumer);
}

}  // namespace romancrit
