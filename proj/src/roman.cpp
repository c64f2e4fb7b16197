#include "romancrit/roman.hpp"

#include <algorithm>

namespace romancrit {

namespace {

// Visits every k-subset of {0..n-1} in ascending numeric order until `visit`
// returns false.
template <typename Visit>
void for_each_subset_of_size(unsigned n, unsigned k, Visit&& visit) {
  if (k > n) return;
  if (k == 0) {
    visit(Mask{0});
    return;
  }
  const Mask limit = full_mask(n);
  Mask s = full_mask(k);
  while (true) {
    if (!visit(s)) return;
    const Mask low = s & -s;
    const Mask ripple = s + low;
    if (ripple == 0) return;  // wrapped past bit 63
    s = (((ripple ^ s) >> 2) / low) | ripple;
    if (s & ~limit) return;
  }
}

Mask dominated_by(const Graph& g, Mask twos) {
  Mask dom = 0;
  for (Mask t = twos; t; t &= t - 1) dom |= g.closed(std::countr_zero(t));
  return dom;
}

struct Sweep {
  unsigned gamma = 0;
  Mask twos = 0;
};

Sweep sweep_minimum(const Graph& g) {
  const unsigned n = g.order();
  Sweep best{n, 0};
  for (unsigned k = 1; k <= n && 2 * k < best.gamma; ++k) {
    for_each_subset_of_size(n, k, [&](Mask s) {
      const unsigned w = 2 * k + n - std::popcount(dominated_by(g, s));
      if (w < best.gamma) best = {w, s};
      return true;
    });
  }
  return best;
}

}  // namespace

RomanAssignment::RomanAssignment(std::vector<std::uint8_t> labels) : labels_(std::move(labels)) {
  if (labels_.size() > kMaxOrder) throw Error(ErrorCode::TooLarge, "assignment longer than 64");
  for (std::uint8_t l : labels_)
    if (l > 2) throw Error(ErrorCode::InvalidArgument, "Roman labels must be 0, 1 or 2");
}

RomanAssignment RomanAssignment::from_partition(unsigned order, Mask ones, Mask twos) {
  if (order > kMaxOrder) throw Error(ErrorCode::TooLarge, "assignment longer than 64");
  if ((ones & twos) || ((ones | twos) & ~full_mask(order)))
    throw Error(ErrorCode::InvalidArgument, "V1 and V2 must be disjoint subsets of the vertex set");
  std::vector<std::uint8_t> labels(order, 0);
  for (Vertex v = 0; v < order; ++v) labels[v] = (ones >> v) & 1U ? 1 : ((twos >> v) & 1U ? 2 : 0);
  RomanAssignment a;
  a.labels_ = std::move(labels);
  return a;
}

Mask RomanAssignment::level_mask(unsigned label) const {
  Mask m = 0;
  for (Vertex v = 0; v < labels_.size(); ++v)
    if (labels_[v] == label) m |= bit(v);
  return m;
}

VertexSet RomanAssignment::level_set(unsigned label) const {
  return VertexSet(size(), level_mask(label));
}

std::string RomanAssignment::str() const {
  return "V0=" + level_set(0).str() + " V1=" + level_set(1).str() + " V2=" + level_set(2).str();
}

bool is_roman(const Graph& g, const RomanAssignment& a) {
  if (a.size() != g.order())
    throw Error(ErrorCode::LengthMismatch, "assignment has " + std::to_string(a.size()) +
                                               " labels for a graph of order " +
                                               std::to_string(g.order()));
  const Mask twos = a.level_mask(2);
  for (Mask zeros = a.level_mask(0); zeros; zeros &= zeros - 1)
    if ((g.neighbors(std::countr_zero(zeros)) & twos) == 0) return false;
  return true;
}

unsigned weight(const RomanAssignment& a) noexcept {
  unsigned w = 0;
  for (std::uint8_t l : a.labels()) w += l;
  return w;
}

GammaResult roman_number(const Graph& g) {
  const Sweep best = sweep_minimum(g);
  const Mask ones = g.vertices() & ~dominated_by(g, best.twos);
  return {best.gamma, RomanAssignment::from_partition(g.order(), ones, best.twos)};
}

unsigned gamma_value(const Graph& g) { return sweep_minimum(g).gamma; }

unsigned roman_number_oracle(const Graph& g) {
  const unsigned n = g.order();
  if (n > kMaxOracleOrder)
    throw Error(ErrorCode::TooLarge, "3^n oracle limited to order " + std::to_string(kMaxOracleOrder));
  const Mask all = full_mask(n);
  unsigned best = 2 * n + 1;
  for (Mask twos = 0; twos <= all; ++twos) {
    Mask covered = 0;  // vertices with a neighbor labeled 2
    for (Vertex v = 0; v < n; ++v)
      if ((g.neighbors(v) & twos) != 0) covered |= bit(v);
    const Mask rest = all & ~twos;
    // ones ranges over every submask of rest, zeros is the remainder.
    Mask ones = rest;
    while (true) {
      const Mask zeros = rest & ~ones;
      if ((zeros & ~covered) == 0) {
        const unsigned w = std::popcount(ones) + 2 * std::popcount(twos);
        best = std::min(best, w);
      }
      if (ones == 0) break;
      ones = (ones - 1) & rest;
    }
  }
  return best;
}

std::vector<PartitionMasks> minimal_partition_masks(const Graph& g) {
  const unsigned n = g.order();
  if (n > kMaxPartitionOrder)
    throw Error(ErrorCode::TooLarge,
                "partition enumeration limited to order " + std::to_string(kMaxPartitionOrder));
  const unsigned gamma = gamma_value(g);
  std::vector<PartitionMasks> out;
  for (unsigned k = 0; 2 * k <= gamma && k <= n; ++k) {
    for_each_subset_of_size(n, k, [&](Mask s) {
      const Mask dom = dominated_by(g, s);
      if (2 * k + n - std::popcount(dom) == gamma)
        out.push_back({dom & ~s, g.vertices() & ~dom, s});
      return true;
    });
  }
  std::ranges::sort(out, {}, &PartitionMasks::twos);
  return out;
}

std::vector<RomanAssignment> minimal_partitions(const Graph& g) {
  std::vector<RomanAssignment> out;
  for (const PartitionMasks& p : minimal_partition_masks(g))
    out.push_back(RomanAssignment::from_partition(g.order(), p.ones, p.twos));
  return out;
}

}  // namespace romancrit
