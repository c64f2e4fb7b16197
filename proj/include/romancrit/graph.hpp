#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "romancrit/error.hpp"

namespace romancrit {

using Vertex = unsigned;
using Mask = std::uint64_t;

inline constexpr unsigned kMaxOrder = 64;

inline constexpr Mask full_mask(unsigned n) noexcept {
  return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1;
}

inline constexpr Mask bit(Vertex v) noexcept { return Mask{1} << v; }

struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// A set of vertices of some graph of order `order()`, stored as a bitset.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(unsigned order, Mask bits);

  unsigned order() const noexcept { return order_; }
  Mask bits() const noexcept { return bits_; }
  unsigned size() const noexcept { return std::popcount(bits_); }
  bool empty() const noexcept { return bits_ == 0; }
  bool contains(Vertex v) const noexcept { return v < order_ && (bits_ >> v) & 1U; }

  /// Members in ascending order.
  std::vector<Vertex> members() const;
  /// Renders as "{0,2,5}".
  std::string str() const;

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  unsigned order_ = 0;
  Mask bits_ = 0;
};

/// Simple undirected graph on vertices 0..n-1 with bitset adjacency.
/// Immutable: every mutation returns a new graph.
class Graph {
 public:
  Graph() = default;

  /// Throws IndexOutOfRange, SelfLoop or TooLarge (n > 64).
  Graph(unsigned n, std::span<const Edge> edges);
  Graph(unsigned n, std::initializer_list<Edge> edges)
      : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  /// Builds from raw neighbor masks; symmetry and loop-freeness are checked.
  static Graph from_adjacency(unsigned n, std::span<const Mask> adjacency);

  unsigned order() const noexcept { return n_; }
  Mask vertices() const noexcept { return full_mask(n_); }

  /// Open neighborhood as a raw mask. No bounds check.
  Mask neighbors(Vertex v) const noexcept { return adj_[v]; }
  /// Closed neighborhood as a raw mask. No bounds check.
  Mask closed(Vertex v) const noexcept { return adj_[v] | bit(v); }
  bool adjacent(Vertex u, Vertex v) const noexcept { return (adj_[u] >> v) & 1U; }

  unsigned degree(Vertex v) const;
  VertexSet closed_neighborhood(Vertex v) const;
  std::size_t edge_count() const noexcept;
  /// Edges (u < v) sorted lexicographically.
  std::vector<Edge> edges() const;
  /// Unordered non-adjacent pairs (u < v), sorted lexicographically.
  std::vector<Edge> non_edges() const;
  std::vector<unsigned> degrees() const;

  Graph delete_vertex(Vertex v) const;
  Graph delete_edge(Vertex u, Vertex v) const;
  Graph add_edge(Vertex u, Vertex v) const;

  /// Induced subgraph on `keep`, re-indexed in ascending order.
  Graph induced(Mask keep) const;

  std::vector<VertexSet> connected_components() const;
  VertexSet cut_vertices() const;

  friend bool operator==(const Graph& a, const Graph& b) noexcept;

 private:
  void check_vertex(Vertex v) const;

  unsigned n_ = 0;
  std::array<Mask, kMaxOrder> adj_{};
};

}  // namespace romancrit
