#include "romancrit/isomorphism.hpp"

#include <algorithm>
#include <array>
#include <vector>

namespace romancrit {

namespace {

class Matcher {
 public:
  Matcher(const Graph& g, const Graph& h) : g_(g), h_(h) {
    const unsigned n = g.order();
    // Place each next vertex next to already-placed ones where possible, so
    // adjacency constraints bite early.
    std::vector<Vertex> sequence;
    Mask placed = 0;
    while (sequence.size() < n) {
      Vertex best = n;
      int best_links = -1;
      for (Vertex v = 0; v < n; ++v) {
        if (placed & bit(v)) continue;
        int links = std::popcount(g.neighbors(v) & placed);
        if (links > best_links ||
            (links == best_links && std::popcount(g.neighbors(v)) > std::popcount(g.neighbors(best)))) {
          best = v;
          best_links = links;
        }
      }
      sequence.push_back(best);
      placed |= bit(best);
    }
    order_ = std::move(sequence);
  }

  bool run() { return extend(0, 0); }

 private:
  bool extend(unsigned depth, Mask used) {
    if (depth == order_.size()) return true;
    const Vertex v = order_[depth];
    const unsigned deg = std::popcount(g_.neighbors(v));
    for (Vertex c = 0; c < h_.order(); ++c) {
      if (used & bit(c)) continue;
      if (static_cast<unsigned>(std::popcount(h_.neighbors(c))) != deg) continue;
      bool ok = true;
      for (unsigned i = 0; i < depth && ok; ++i) {
        const Vertex w = order_[i];
        ok = g_.adjacent(v, w) == h_.adjacent(c, image_[w]);
      }
      if (!ok) continue;
      image_[v] = c;
      if (extend(depth + 1, used | bit(c))) return true;
    }
    return false;
  }

  const Graph& g_;
  const Graph& h_;
  std::vector<Vertex> order_;
  std::array<Vertex, kMaxIsomorphismOrder> image_{};
};

}  // namespace

bool is_isomorphic(const Graph& g, const Graph& h) {
  if (g.order() > kMaxIsomorphismOrder || h.order() > kMaxIsomorphismOrder)
    throw Error(ErrorCode::TooLarge, "isomorphism test limited to order 12");
  if (g.order() != h.order() || g.edge_count() != h.edge_count()) return false;
  auto dg = g.degrees();
  auto dh = h.degrees();
  std::ranges::sort(dg);
  std::ranges::sort(dh);
  if (dg != dh) return false;
  return Matcher(g, h).run();
}

}  // namespace romancrit
