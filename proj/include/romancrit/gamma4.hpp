#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "romancrit/graph.hpp"

namespace romancrit {

// Characterizations that hold for graphs with Roman domination number 4.
// Every entry point recomputes gamma (and nonelementarity where needed) and
// throws PreconditionViolated when the hypothesis does not hold.

/// Vertices split by degree against n-3.
struct DegreeClasses {
  VertexSet high;   // degree == n-3
  VertexSet low;    // degree <  n-3
  VertexSet other;  // degree >  n-3
};

DegreeClasses degree_classes(const Graph& g);

/// Every vertex x has a non-neighbor of degree n-3.
bool vcrit4_by_degrees(const Graph& g);

struct NeighborhoodWitness {
  Vertex a = 0;
  Vertex b = 0;
  friend bool operator==(const NeighborhoodWitness&, const NeighborhoodWitness&) = default;
  friend auto operator<=>(const NeighborhoodWitness&, const NeighborhoodWitness&) = default;
};

/// All pairs (a,b) with a != x != b and N[a] = V \ {x,b}, ascending.
std::vector<NeighborhoodWitness> neighborhood_witnesses(const Graph& g, Vertex x);
/// Lexicographically smallest such pair.
std::optional<NeighborhoodWitness> neighborhood_witness(const Graph& g, Vertex x);
/// When every vertex has a witness: for each x and each of its witnesses
/// (a,b), some witness of a has its first vertex in {x,b}. Returns false if
/// some vertex has no witness at all.
bool witness_chase_holds(const Graph& g);

/// Any two vertices of degree < n-3 are adjacent.
bool saturated4_by_degrees(const Graph& g);

/// Requires v-critical as well. For every edge e there is a vertex y such that
/// each degree-(n-3) vertex outside N[y] is an endpoint of e.
bool ecrit4_by_degrees(const Graph& g);

struct HighClassBounds {
  bool at_least_half = false;           // 2|high| >= n
  bool at_least_three_quarters = false; // 4|high| >= 3n
};

HighClassBounds high_class_bounds(const Graph& g);

struct CutStructure {
  /// Each cut vertex leaves a singleton component behind.
  bool lemma_holds = false;
  /// Only evaluated when g is also e-critical and saturated: g is C5, or the
  /// low class is a single degree-1 vertex whose neighbor is a cut vertex.
  std::optional<bool> prop_holds;
};

/// Requires nonelementary, gamma 4 and v-critical.
CutStructure cut_vertex_structure(const Graph& g);

enum class Verdict {
  IsC5,
  IsDn,
  ElementaryG1,
  ElementaryG2,
  ElementaryG3,
  NotCritical,
  CriticalButUnclassified,
};

struct Classification {
  Verdict verdict = Verdict::NotCritical;
  unsigned order = 0;

  /// "IsC5", "IsDn(8)", "NotCritical", ...
  std::string str() const;
  friend bool operator==(const Classification&, const Classification&) = default;
};

/// Total function. CriticalButUnclassified marks a graph that meets every
/// hypothesis of the classification but matches none of its outcomes.
/// Propagates TooLarge from the isomorphism test for orders above 12.
Classification classify_critical4(const Graph& g);

struct Local8 {
  bool a = false;
  bool b = false;
  bool c = false;

  bool all() const noexcept { return a && b && c; }
  friend bool operator==(const Local8&, const Local8&) = default;
};

/// Quantifier evaluation over distinct vertex tuples. Requires gamma 4, n >= 8.
Local8 local8_conditions(const Graph& g);
/// Degree-count equivalents of the same three conditions.
Local8 local8_fast(const Graph& g);

}  // namespace romancrit
