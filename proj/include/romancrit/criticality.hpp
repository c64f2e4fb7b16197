#pragma once

#include <optional>

#include "romancrit/graph.hpp"

namespace romancrit {

// Predicates over arbitrary graphs. Each notion has a direct route (by
// recomputing gamma on modified graphs) and a route through the list of
// minimum-weight partitions, so the two can be compared.
//
// v-critical means every vertex deletion lowers gamma by exactly one.

bool is_nonelementary(const Graph& g);
bool nonelementary_by_components(const Graph& g);

/// Smallest vertex whose deletion does not lower gamma by exactly one.
std::optional<Vertex> v_critical_failure(const Graph& g);
bool is_v_critical(const Graph& g);
/// Union of V1 over all minimum partitions covers V.
bool v_critical_by_partitions(const Graph& g);

/// Smallest non-edge whose addition does not lower gamma by exactly one.
std::optional<Edge> saturation_failure(const Graph& g);
bool is_roman_saturated(const Graph& g);
/// Every non-edge has a minimum partition with one end in V1 and the other in V2.
bool saturated_by_partitions(const Graph& g);

/// Smallest edge whose removal changes gamma. Throws NotVCritical.
std::optional<Edge> edge_removal_gamma_failure(const Graph& g);
bool edge_removal_preserves_gamma(const Graph& g);

/// For a v-critical graph: smallest edge whose removal leaves a v-critical
/// graph. Returns nullopt when g is e-critical; throws NotVCritical.
std::optional<Edge> e_critical_failure(const Graph& g);
/// v-critical and no single edge removal keeps v-criticality.
bool is_e_critical(const Graph& g);

/// For every edge e there is a vertex x such that every minimum partition with
/// x in V1 has e = {v,w} with v in V0 and w the only V2 vertex in N[v].
/// Throws NotVCritical or TooLarge.
bool e_critical_condition(const Graph& g);
/// The vertex x found for `e`, or nullopt.
std::optional<Vertex> e_critical_condition_vertex(const Graph& g, Edge e);

struct CriticalityWitnesses {
  std::optional<Vertex> v_critical_failure;
  std::optional<Edge> saturation_failure;
  std::optional<Edge> e_critical_failure;
};

struct CriticalityReport {
  unsigned gamma = 0;
  bool nonelementary = false;
  bool v_critical = false;
  bool e_critical = false;
  bool saturated = false;
  CriticalityWitnesses witnesses;
};

/// Direct-definition report. Witnesses are the lexicographically smallest
/// failing vertex / non-edge / edge.
CriticalityReport assess_criticality(const Graph& g);

}  // namespace romancrit
