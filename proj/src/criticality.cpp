#include "romancrit/criticality.hpp"

#include <algorithm>

#include "romancrit/roman.hpp"

namespace romancrit {

namespace {

void require_v_critical(const Graph& g) {
  if (!is_v_critical(g)) throw Error(ErrorCode::NotVCritical, "graph is not v-critical");
}

// True when the partition breaks once `e` is removed: one endpoint is 0 and
// the other endpoint is its only 2-labeled closed neighbor.
bool edge_is_sole_defender(const Graph& g, const PartitionMasks& p, Edge e) {
  auto sole = [&](Vertex zero, Vertex two) {
    return (p.zeros & bit(zero)) && (g.closed(zero) & p.twos) == bit(two);
  };
  return sole(e.u, e.v) || sole(e.v, e.u);
}

std::optional<Vertex> condition_vertex(const Graph& g, const std::vector<PartitionMasks>& parts,
                                       Edge e) {
  for (Vertex x = 0; x < g.order(); ++x) {
    const bool ok = std::ranges::all_of(parts, [&](const PartitionMasks& p) {
      return !(p.ones & bit(x)) || edge_is_sole_defender(g, p, e);
    });
    if (ok) return x;
  }
  return std::nullopt;
}

}  // namespace

bool is_nonelementary(const Graph& g) { return gamma_value(g) < g.order(); }

bool nonelementary_by_components(const Graph& g) {
  return std::ranges::any_of(g.connected_components(),
                             [](const VertexSet& c) { return c.size() >= 3; });
}

std::optional<Vertex> v_critical_failure(const Graph& g) {
  const unsigned gamma = gamma_value(g);
  for (Vertex v = 0; v < g.order(); ++v)
    if (gamma_value(g.delete_vertex(v)) + 1 != gamma) return v;
  return std::nullopt;
}

bool is_v_critical(const Graph& g) { return !v_critical_failure(g).has_value(); }

bool v_critical_by_partitions(const Graph& g) {
  Mask covered = 0;
  for (const PartitionMasks& p : minimal_partition_masks(g)) covered |= p.ones;
  return covered == g.vertices();
}

std::optional<Edge> saturation_failure(const Graph& g) {
  const unsigned gamma = gamma_value(g);
  for (const Edge& e : g.non_edges())
    if (gamma_value(g.add_edge(e.u, e.v)) + 1 != gamma) return e;
  return std::nullopt;
}

bool is_roman_saturated(const Graph& g) { return !saturation_failure(g).has_value(); }

bool saturated_by_partitions(const Graph& g) {
  const auto parts = minimal_partition_masks(g);
  for (const Edge& e : g.non_edges()) {
    const Mask pair = bit(e.u) | bit(e.v);
    const bool found = std::ranges::any_of(parts, [&](const PartitionMasks& p) {
      return std::popcount(p.ones & pair) == 1 && std::popcount(p.twos & pair) == 1;
    });
    if (!found) return false;
  }
  return true;
}

std::optional<Edge> edge_removal_gamma_failure(const Graph& g) {
  require_v_critical(g);
  const unsigned gamma = gamma_value(g);
  for (const Edge& e : g.edges())
    if (gamma_value(g.delete_edge(e.u, e.v)) != gamma) return e;
  return std::nullopt;
}

bool edge_removal_preserves_gamma(const Graph& g) {
  return !edge_removal_gamma_failure(g).has_value();
}

std::optional<Edge> e_critical_failure(const Graph& g) {
  require_v_critical(g);
  for (const Edge& e : g.edges())
    if (is_v_critical(g.delete_edge(e.u, e.v))) return e;
  return std::nullopt;
}

bool is_e_critical(const Graph& g) {
  return is_v_critical(g) && !e_critical_failure(g).has_value();
}

std::optional<Vertex> e_critical_condition_vertex(const Graph& g, Edge e) {
  require_v_critical(g);
  if (e.u >= g.order() || e.v >= g.order() || e.u == e.v || !g.adjacent(e.u, e.v))
    throw Error(ErrorCode::NoSuchEdge,
                "no edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "}");
  return condition_vertex(g, minimal_partition_masks(g), e);
}

bool e_critical_condition(const Graph& g) {
  require_v_critical(g);
  const auto parts = minimal_partition_masks(g);
  return std::ranges::all_of(g.edges(), [&](const Edge& e) {
    return condition_vertex(g, parts, e).has_value();
  });
}

CriticalityReport assess_criticality(const Graph& g) {
  CriticalityReport r;
  r.gamma = gamma_value(g);
  r.nonelementary = r.gamma < g.order();
  r.witnesses.v_critical_failure = v_critical_failure(g);
  r.v_critical = !r.witnesses.v_critical_failure;
  r.witnesses.saturation_failure = saturation_failure(g);
  r.saturated = !r.witnesses.saturation_failure;
  if (r.v_critical) {
    r.witnesses.e_critical_failure = e_critical_failure(g);
    r.e_critical = !r.witnesses.e_critical_failure;
  }
  return r;
}

}  // namespace romancrit
