#include "romancrit/graph.hpp"

#include <algorithm>

namespace romancrit {

namespace {

std::string vertex_message(Vertex v, unsigned n) {
  return "vertex " + std::to_string(v) + " out of range for order " + std::to_string(n);
}

// Reachability closure of `start` inside `within`.
Mask reach(const Graph& g, Mask start, Mask within) {
  Mask seen = start & within;
  Mask frontier = seen;
  while (frontier) {
    Mask next = 0;
    for (Mask f = frontier; f; f &= f - 1) next |= g.neighbors(std::countr_zero(f));
    next &= within & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

unsigned component_count(const Graph& g, Mask within) {
  unsigned count = 0;
  while (within) {
    within &= ~reach(g, within & -within, within);
    ++count;
  }
  return count;
}

}  // namespace

VertexSet::VertexSet(unsigned order, Mask bits) : order_(order), bits_(bits) {
  if (order > kMaxOrder) throw Error(ErrorCode::TooLarge, "vertex set order above 64");
  if (bits & ~full_mask(order))
    throw Error(ErrorCode::IndexOutOfRange, "vertex set member beyond order " + std::to_string(order));
}

std::vector<Vertex> VertexSet::members() const {
  std::vector<Vertex> out;
  out.reserve(size());
  for (Mask b = bits_; b; b &= b - 1) out.push_back(std::countr_zero(b));
  return out;
}

std::string VertexSet::str() const {
  std::string s = "{";
  bool first = true;
  for (Vertex v : members()) {
    if (!first) s += ',';
    s += std::to_string(v);
    first = false;
  }
  return s + "}";
}

Graph::Graph(unsigned n, std::span<const Edge> edges) : n_(n) {
  if (n > kMaxOrder) throw Error(ErrorCode::TooLarge, "graph order above 64");
  for (const Edge& e : edges) {
    if (e.u >= n) throw Error(ErrorCode::IndexOutOfRange, vertex_message(e.u, n));
    if (e.v >= n) throw Error(ErrorCode::IndexOutOfRange, vertex_message(e.v, n));
    if (e.u == e.v) throw Error(ErrorCode::SelfLoop, "self-loop at vertex " + std::to_string(e.u));
    adj_[e.u] |= bit(e.v);
    adj_[e.v] |= bit(e.u);
  }
}

Graph Graph::from_adjacency(unsigned n, std::span<const Mask> adjacency) {
  if (n > kMaxOrder) throw Error(ErrorCode::TooLarge, "graph order above 64");
  if (adjacency.size() != n)
    throw Error(ErrorCode::LengthMismatch, "adjacency row count differs from order");
  Graph g;
  g.n_ = n;
  for (Vertex v = 0; v < n; ++v) {
    Mask row = adjacency[v];
    if (row & ~full_mask(n)) throw Error(ErrorCode::IndexOutOfRange, "neighbor beyond order");
    if (row & bit(v)) throw Error(ErrorCode::SelfLoop, "self-loop at vertex " + std::to_string(v));
    g.adj_[v] = row;
  }
  for (Vertex v = 0; v < n; ++v)
    for (Mask row = g.adj_[v]; row; row &= row - 1)
      if (!g.adjacent(std::countr_zero(row), v))
        throw Error(ErrorCode::InvalidArgument, "adjacency is not symmetric");
  return g;
}

void Graph::check_vertex(Vertex v) const {
  if (v >= n_) throw Error(ErrorCode::IndexOutOfRange, vertex_message(v, n_));
}

unsigned Graph::degree(Vertex v) const {
  check_vertex(v);
  return std::popcount(adj_[v]);
}

VertexSet Graph::closed_neighborhood(Vertex v) const {
  check_vertex(v);
  return VertexSet(n_, closed(v));
}

std::size_t Graph::edge_count() const noexcept {
  std::size_t twice = 0;
  for (Vertex v = 0; v < n_; ++v) twice += std::popcount(adj_[v]);
  return twice / 2;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (Vertex u = 0; u < n_; ++u)
    for (Mask row = adj_[u] & ~full_mask(u + 1); row; row &= row - 1)
      out.push_back({u, static_cast<Vertex>(std::countr_zero(row))});
  return out;
}

std::vector<Edge> Graph::non_edges() const {
  std::vector<Edge> out;
  for (Vertex u = 0; u < n_; ++u)
    for (Mask row = ~adj_[u] & full_mask(n_) & ~full_mask(u + 1); row; row &= row - 1)
      out.push_back({u, static_cast<Vertex>(std::countr_zero(row))});
  return out;
}

std::vector<unsigned> Graph::degrees() const {
  std::vector<unsigned> out(n_);
  for (Vertex v = 0; v < n_; ++v) out[v] = std::popcount(adj_[v]);
  return out;
}

Graph Graph::induced(Mask keep) const {
  keep &= full_mask(n_);
  Graph h;
  h.n_ = std::popcount(keep);
  std::array<Vertex, kMaxOrder> index{};
  Vertex next = 0;
  for (Mask k = keep; k; k &= k - 1) index[std::countr_zero(k)] = next++;
  for (Mask k = keep; k; k &= k - 1) {
    Vertex old = std::countr_zero(k);
    Mask row = 0;
    for (Mask r = adj_[old] & keep; r; r &= r - 1) row |= bit(index[std::countr_zero(r)]);
    h.adj_[index[old]] = row;
  }
  return h;
}

Graph Graph::delete_vertex(Vertex v) const {
  check_vertex(v);
  return induced(full_mask(n_) & ~bit(v));
}

Graph Graph::delete_edge(Vertex u, Vertex v) const {
  check_vertex(u);
  check_vertex(v);
  if (u == v || !adjacent(u, v))
    throw Error(ErrorCode::NoSuchEdge,
                "no edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
  Graph h = *this;
  h.adj_[u] &= ~bit(v);
  h.adj_[v] &= ~bit(u);
  return h;
}

Graph Graph::add_edge(Vertex u, Vertex v) const {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw Error(ErrorCode::SelfLoop, "self-loop at vertex " + std::to_string(u));
  if (adjacent(u, v))
    throw Error(ErrorCode::EdgeExists,
                "edge {" + std::to_string(u) + "," + std::to_string(v) + "} already present");
  Graph h = *this;
  h.adj_[u] |= bit(v);
  h.adj_[v] |= bit(u);
  return h;
}

std::vector<VertexSet> Graph::connected_components() const {
  std::vector<VertexSet> out;
  Mask rest = full_mask(n_);
  while (rest) {
    Mask comp = reach(*this, rest & -rest, rest);
    out.emplace_back(n_, comp);
    rest &= ~comp;
  }
  return out;
}

VertexSet Graph::cut_vertices() const {
  const Mask all = full_mask(n_);
  Mask cuts = 0;
  for (Vertex v = 0; v < n_; ++v) {
    Mask comp = reach(*this, bit(v), all);
    // Components of g - v restricted to v's own component; the others are unchanged.
    if (component_count(*this, comp & ~bit(v)) > 1) cuts |= bit(v);
  }
  return VertexSet(n_, cuts);
}

bool operator==(const Graph& a, const Graph& b) noexcept {
  if (a.n_ != b.n_) return false;
  return std::equal(a.adj_.begin(), a.adj_.begin() + a.n_, b.adj_.begin());
}

}  // namespace romancrit
