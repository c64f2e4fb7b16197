#include "romancrit/gamma4.hpp"

#include <algorithm>

#include "romancrit/criticality.hpp"
#include "romancrit/families.hpp"
#include "romancrit/isomorphism.hpp"
#include "romancrit/roman.hpp"

namespace romancrit {

namespace {

[[noreturn]] void violated(const std::string& what) {
  throw Error(ErrorCode::PreconditionViolated, what);
}

void require_nonelementary_gamma4(const Graph& g) {
  const unsigned gamma = gamma_value(g);
  if (gamma != 4) violated("requires gamma_R = 4, got " + std::to_string(gamma));
  if (gamma >= g.order()) violated("requires a nonelementary graph");
}

void require_v_critical4(const Graph& g) {
  require_nonelementary_gamma4(g);
  if (!is_v_critical(g)) violated("requires a v-critical graph");
}

void require_local8(const Graph& g) {
  const unsigned gamma = gamma_value(g);
  if (gamma != 4) violated("requires gamma_R = 4, got " + std::to_string(gamma));
  if (g.order() < 8) violated("requires order >= 8");
}

// Mask of vertices other than v and not adjacent to v.
Mask non_neighbors(const Graph& g, Vertex v) { return g.vertices() & ~g.closed(v); }

Mask degree_mask(const Graph& g, auto&& keep) {
  Mask m = 0;
  const int target = static_cast<int>(g.order()) - 3;
  for (Vertex v = 0; v < g.order(); ++v)
    if (keep(static_cast<int>(std::popcount(g.neighbors(v))), target)) m |= bit(v);
  return m;
}

Mask high_mask(const Graph& g) {
  return degree_mask(g, [](int d, int t) { return d == t; });
}

Mask low_mask(const Graph& g) {
  return degree_mask(g, [](int d, int t) { return d < t; });
}

// Calls f on every k-element submask of `pool`; stops early when f returns
// false. Returns false iff stopped early.
template <typename F>
bool for_each_combination(Mask pool, unsigned k, Mask chosen, F&& f) {
  if (k == 0) return f(chosen);
  for (Mask p = pool; p; p &= p - 1) {
    const Mask low = p & -p;
    if (static_cast<unsigned>(std::popcount(p)) < k) break;
    if (!for_each_combination(p & ~low, k - 1, chosen | low, f)) return false;
  }
  return true;
}

template <typename F>
bool for_each_combination(Mask pool, unsigned k, F&& f) {
  return for_each_combination(pool, k, Mask{0}, f);
}

bool matches(const Graph& g, FamilyTag tag) {
  return is_isomorphic(g, gen_family({tag, g.order()}));
}

}  // namespace

DegreeClasses degree_classes(const Graph& g) {
  const unsigned n = g.order();
  const Mask high = high_mask(g);
  const Mask low = low_mask(g);
  return {VertexSet(n, high), VertexSet(n, low), VertexSet(n, g.vertices() & ~high & ~low)};
}

bool vcrit4_by_degrees(const Graph& g) {
  require_nonelementary_gamma4(g);
  const Mask high = high_mask(g);
  for (Vertex x = 0; x < g.order(); ++x)
    if ((non_neighbors(g, x) & high) == 0) return false;
  return true;
}

std::vector<NeighborhoodWitness> neighborhood_witnesses(const Graph& g, Vertex x) {
  require_nonelementary_gamma4(g);
  if (x >= g.order()) throw Error(ErrorCode::IndexOutOfRange, "vertex out of range");
  std::vector<NeighborhoodWitness> out;
  for (Vertex a = 0; a < g.order(); ++a) {
    if (a == x) continue;
    const Mask missing = non_neighbors(g, a);
    if (std::popcount(missing) == 2 && (missing & bit(x))) {
      const Vertex b = std::countr_zero(missing & ~bit(x));
      out.push_back({a, b});
    }
  }
  return out;
}

std::optional<NeighborhoodWitness> neighborhood_witness(const Graph& g, Vertex x) {
  auto all = neighborhood_witnesses(g, x);
  if (all.empty()) return std::nullopt;
  return all.front();
}

bool witness_chase_holds(const Graph& g) {
  const unsigned n = g.order();
  std::vector<std::vector<NeighborhoodWitness>> table(n);
  for (Vertex x = 0; x < n; ++x) {
    table[x] = neighborhood_witnesses(g, x);
    if (table[x].empty()) return false;
  }
  for (Vertex x = 0; x < n; ++x)
    for (const NeighborhoodWitness& w : table[x]) {
      const bool chased = std::ranges::any_of(table[w.a], [&](const NeighborhoodWitness& next) {
        return next.a == x || next.a == w.b;
      });
      if (!chased) return false;
    }
  return true;
}

bool saturated4_by_degrees(const Graph& g) {
  require_nonelementary_gamma4(g);
  const Mask low = low_mask(g);
  for (Mask l = low; l; l &= l - 1)
    if ((non_neighbors(g, std::countr_zero(l)) & low) != 0) return false;
  return true;
}

bool ecrit4_by_degrees(const Graph& g) {
  require_v_critical4(g);
  const Mask high = high_mask(g);
  for (const Edge& e : g.edges()) {
    const Mask ends = bit(e.u) | bit(e.v);
    bool found = false;
    for (Vertex y = 0; y < g.order() && !found; ++y)
      found = (high & non_neighbors(g, y) & ~ends) == 0;
    if (!found) return false;
  }
  return true;
}

HighClassBounds high_class_bounds(const Graph& g) {
  require_nonelementary_gamma4(g);
  const unsigned high = std::popcount(high_mask(g));
  const unsigned n = g.order();
  return {2 * high >= n, 4 * high >= 3 * n};
}

CutStructure cut_vertex_structure(const Graph& g) {
  require_v_critical4(g);
  CutStructure out;
  const VertexSet cuts = g.cut_vertices();

  out.lemma_holds = std::ranges::all_of(cuts.members(), [&](Vertex v) {
    return std::ranges::any_of(g.delete_vertex(v).connected_components(),
                               [](const VertexSet& c) { return c.size() == 1; });
  });

  if (is_e_critical(g) && is_roman_saturated(g)) {
    bool holds = g.order() == 5 && matches(g, FamilyTag::Cycle);
    const Mask low = low_mask(g);
    if (!holds && std::popcount(low) == 1) {
      const Vertex pendant = std::countr_zero(low);
      if (std::popcount(g.neighbors(pendant)) == 1)
        holds = cuts.contains(std::countr_zero(g.neighbors(pendant)));
    }
    out.prop_holds = holds;
  }
  return out;
}

std::string Classification::str() const {
  switch (verdict) {
    case Verdict::IsC5: return "IsC5";
    case Verdict::IsDn: return "IsDn(" + std::to_string(order) + ")";
    case Verdict::ElementaryG1: return "ElementaryG1";
    case Verdict::ElementaryG2: return "ElementaryG2";
    case Verdict::ElementaryG3: return "ElementaryG3";
    case Verdict::NotCritical: return "NotCritical";
    case Verdict::CriticalButUnclassified: return "CriticalButUnclassified";
  }
  return "?";
}

Classification classify_critical4(const Graph& g) {
  const unsigned n = g.order();
  if (gamma_value(g) != 4 || !is_v_critical(g)) return {Verdict::NotCritical, n};

  if (n == 4) {
    if (matches(g, FamilyTag::Elem1)) return {Verdict::ElementaryG1, n};
    if (matches(g, FamilyTag::Elem2)) return {Verdict::ElementaryG2, n};
    if (matches(g, FamilyTag::Elem3)) return {Verdict::ElementaryG3, n};
    return {Verdict::CriticalButUnclassified, n};
  }

  if (!is_e_critical(g) || !is_roman_saturated(g)) return {Verdict::NotCritical, n};
  if (n == 5 && matches(g, FamilyTag::Cycle)) return {Verdict::IsC5, n};
  if (n >= 6 && n % 2 == 0 && matches(g, FamilyTag::Dn)) return {Verdict::IsDn, n};
  return {Verdict::CriticalButUnclassified, n};
}

Local8 local8_conditions(const Graph& g) {
  require_local8(g);
  const Mask all = g.vertices();
  Local8 out;

  // a: some v1 with three distinct non-neighbors v2, v3, v4.
  for (Vertex v1 = 0; v1 < g.order() && !out.a; ++v1)
    out.a = !for_each_combination(non_neighbors(g, v1), 3, [](Mask) { return false; });

  // b: for every such (v1; v2..v4), every further v5..v7 and every v8 outside
  // them, v8 is adjacent to at least five of v1..v7.
  out.b = true;
  for (Vertex v1 = 0; v1 < g.order() && out.b; ++v1) {
    out.b = for_each_combination(non_neighbors(g, v1), 3, [&](Mask triple) {
      const Mask head = bit(v1) | triple;
      for (Mask rest = all & ~head; rest; rest &= rest - 1) {
        const Vertex v8 = std::countr_zero(rest);
        const bool ok = for_each_combination(all & ~head & ~bit(v8), 3, [&](Mask tail) {
          return std::popcount(g.neighbors(v8) & (head | tail)) >= 5;
        });
        if (!ok) return false;
      }
      return true;
    });
  }

  // c: for every such (v1; v2..v4) and every v5, v6 outside them, v1 is
  // adjacent to at most one of v5, v6.
  out.c = true;
  for (Vertex v1 = 0; v1 < g.order() && out.c; ++v1) {
    out.c = for_each_combination(non_neighbors(g, v1), 3, [&](Mask triple) {
      return for_each_combination(all & ~bit(v1) & ~triple, 2, [&](Mask pair) {
        return std::popcount(g.neighbors(v1) & pair) <= 1;
      });
    });
  }
  return out;
}

Local8 local8_fast(const Graph& g) {
  require_local8(g);
  const Mask low = low_mask(g);
  bool small = true;
  for (Mask l = low; l; l &= l - 1) small = small && std::popcount(g.neighbors(std::countr_zero(l))) <= 1;
  return {low != 0, std::popcount(low) <= 1, small};
}

}  // namespace romancrit
