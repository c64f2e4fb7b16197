#include "romancrit/claims.hpp"

#include <algorithm>
#include <array>
#include <sstream>

#include "romancrit/criticality.hpp"
#include "romancrit/families.hpp"
#include "romancrit/gamma4.hpp"
#include "romancrit/isomorphism.hpp"
#include "romancrit/roman.hpp"

namespace romancrit {

namespace {

struct CatalogEntry {
  ClaimId id;
  const char* name;
  const char* statement;
};

constexpr std::array<CatalogEntry, 19> kCatalog{{
    {ClaimId::CycleCriticality, "cycle-criticality",
     "C_n is v-critical iff n mod 3 is 1 or 2; gamma_R(C_{3k+1}) = 2k+1 and gamma_R(C_{3k+2}) = 2k+2"},
    {ClaimId::NonelementaryComponents, "nonelementary-components",
     "gamma_R(G) < n iff some connected component has at least 3 vertices"},
    {ClaimId::GammaLe3Degree, "gamma-le-3-degree",
     "for n >= 1: gamma_R(G) <= 3 iff some vertex has degree >= n-2"},
    {ClaimId::VcritPartitionLemma, "vcrit-partition-lemma",
     "G is v-critical iff every vertex lies in V1 of some minimum Roman partition"},
    {ClaimId::SaturatedPartitionProp, "saturated-partition-prop",
     "G is Roman saturated iff every non-adjacent pair is split V1/V2 by some minimum partition"},
    {ClaimId::EdgeRemovalGamma, "edge-removal-gamma",
     "if G is v-critical, removing any edge leaves gamma_R unchanged"},
    {ClaimId::EcritConditionProp, "ecrit-condition-prop",
     "for v-critical G: e-critical iff every edge has a vertex x such that every minimum partition "
     "with x in V1 makes the edge the sole V2 defender of its V0 endpoint"},
    {ClaimId::Elementary4List, "elementary4-list",
     "the elementary v-critical graphs with gamma_R = 4 are exactly 4K1, K2+2K1 and 2K2"},
    {ClaimId::CaracLemma, "carac-lemma",
     "nonelementary, gamma_R = 4: v-critical iff every x has a, b with a != x != b and "
     "N[a] = V minus {x, b}; then a's own witness lies in {x, b}"},
    {ClaimId::Carac2Theorem, "carac2-theorem",
     "nonelementary, gamma_R = 4: v-critical iff every x has a non-neighbor of degree n-3"},
    {ClaimId::HalfBound, "half-bound",
     "nonelementary v-critical, gamma_R = 4: at least n/2 vertices have degree n-3"},
    {ClaimId::ThreequarterBound, "threequarter-bound",
     "nonelementary v-critical saturated, gamma_R = 4: at least 3n/4 vertices have degree n-3"},
    {ClaimId::CutvertexLemma, "cutvertex-lemma",
     "nonelementary v-critical, gamma_R = 4: deleting any cut vertex leaves a singleton component"},
    {ClaimId::Saturated4Degrees, "saturated4-degrees",
     "nonelementary, gamma_R = 4: saturated iff all vertices of degree < n-3 are pairwise adjacent"},
    {ClaimId::Ecrit4Degrees, "ecrit4-degrees",
     "nonelementary v-critical, gamma_R = 4: e-critical iff every edge e has a vertex y such that "
     "every degree-(n-3) vertex outside N[y] is an endpoint of e"},
    {ClaimId::CutStructureProp, "cut-structure-prop",
     "nonelementary v-, e-critical, saturated, gamma_R = 4: G is C5, or exactly one vertex has "
     "degree < n-3, it has degree 1 and its neighbor is a cut vertex"},
    {ClaimId::ClassificationTheorem, "classification-theorem",
     "nonelementary v-, e-critical, saturated, gamma_R = 4: n = 5 gives C5; n > 5 gives n even "
     "and G isomorphic to D_n"},
    {ClaimId::Local8Theorem, "local8-theorem",
     "gamma_R = 4, n >= 8: the three local tuple conditions hold iff n is even and G is "
     "isomorphic to D_n; each condition matches its degree-count form"},
    {ClaimId::DnProperties, "dn-properties",
     "every D_n (n even >= 6) has gamma_R = 4, is nonelementary, v-critical, e-critical and "
     "saturated, and the pendant's neighbor is a cut vertex"},
}};

const CatalogEntry& entry(ClaimId id) {
  return *std::ranges::find(kCatalog, id, &CatalogEntry::id);
}

// Lazily computed direct-definition facts about one graph.
class Facts {
 public:
  explicit Facts(const Graph& g) : g_(g) {}

  unsigned gamma() {
    if (!gamma_) gamma_ = gamma_value(g_);
    return *gamma_;
  }
  bool nonelementary() { return gamma() < g_.order(); }
  bool nonelementary_gamma4() { return gamma() == 4 && nonelementary(); }
  bool v_critical() {
    if (!v_critical_) v_critical_ = is_v_critical(g_);
    return *v_critical_;
  }
  bool saturated() {
    if (!saturated_) saturated_ = is_roman_saturated(g_);
    return *saturated_;
  }
  bool e_critical() {
    if (!e_critical_) e_critical_ = v_critical() && !e_critical_failure(g_);
    return *e_critical_;
  }
  bool fully_critical4() {
    return nonelementary_gamma4() && v_critical() && e_critical() && saturated();
  }

 private:
  const Graph& g_;
  std::optional<unsigned> gamma_;
  std::optional<bool> v_critical_;
  std::optional<bool> saturated_;
  std::optional<bool> e_critical_;
};

const char* yes_no(bool b) { return b ? "true" : "false"; }

std::string degree_profile(const Graph& g) {
  std::ostringstream os;
  os << "degrees=(";
  const auto d = g.degrees();
  for (std::size_t i = 0; i < d.size(); ++i) os << (i ? "," : "") << d[i];
  os << ")";
  return os.str();
}

std::string mismatch(const char* characterization, bool claimed, const char* definition,
                     bool actual) {
  return std::string("violation: ") + characterization + "=" + yes_no(claimed) + " but " +
         definition + "=" + yes_no(actual);
}

// Before reporting a violation, recheck the hypothesis facts through the
// second route. Any disagreement replaces the violation.
std::optional<std::string> reverify(const Graph& g, Facts& facts) {
  std::ostringstream os;
  if (g.order() <= kMaxOracleOrder && roman_number_oracle(g) != facts.gamma())
    os << " gamma(sweep)=" << facts.gamma() << " gamma(oracle)=" << roman_number_oracle(g);
  if (g.order() <= kMaxPartitionOrder) {
    if (v_critical_by_partitions(g) != facts.v_critical())
      os << " v-critical(direct)=" << yes_no(facts.v_critical()) << " v-critical(partitions)="
         << yes_no(!facts.v_critical());
    if (saturated_by_partitions(g) != facts.saturated())
      os << " saturated(direct)=" << yes_no(facts.saturated()) << " saturated(partitions)="
         << yes_no(!facts.saturated());
    if (facts.v_critical() && e_critical_condition(g) != facts.e_critical())
      os << " e-critical(direct)=" << yes_no(facts.e_critical()) << " e-critical(partitions)="
         << yes_no(!facts.e_critical());
  }
  if (os.str().empty()) return std::nullopt;
  return "path-disagreement:" + os.str();
}

ClaimCheck violation(const Graph& g, Facts& facts, std::string text) {
  if (auto disagreement = reverify(g, facts)) return {true, std::move(disagreement)};
  return {true, std::move(text)};
}

bool is_cycle_graph(const Graph& g) {
  if (g.order() < 3) return false;
  const auto d = g.degrees();
  return std::ranges::all_of(d, [](unsigned x) { return x == 2; }) &&
         g.connected_components().size() == 1;
}

bool looks_like_dn(const Graph& g) {
  const unsigned n = g.order();
  if (n < 6 || n % 2 != 0 || n > kMaxIsomorphismOrder) return false;
  auto d = g.degrees();
  std::ranges::sort(d);
  if (d[0] != 1) return false;
  if (!std::all_of(d.begin() + 1, d.end(), [n](unsigned x) { return x == n - 3; })) return false;
  return is_isomorphic(g, gen_family({FamilyTag::Dn, n}));
}

ClaimCheck check_unguarded(ClaimId id, const Graph& g) {
  Facts facts(g);
  const unsigned n = g.order();

  switch (id) {
    case ClaimId::CycleCriticality: {
      if (!is_cycle_graph(g)) return {};
      const bool expect_critical = n % 3 != 0;
      std::string problems;
      if (facts.v_critical() != expect_critical)
        problems += std::string(" v-critical=") + yes_no(facts.v_critical()) + " expected " +
                    yes_no(expect_critical);
      if (n % 3 != 0) {
        const unsigned k = n / 3;
        const unsigned expected = n % 3 == 1 ? 2 * k + 1 : 2 * k + 2;
        if (facts.gamma() != expected)
          problems += " gamma=" + std::to_string(facts.gamma()) + " expected " + std::to_string(expected);
      }
      if (problems.empty()) return {true, {}};
      return violation(g, facts, "violation:" + problems);
    }

    case ClaimId::NonelementaryComponents: {
      const bool by_components = nonelementary_by_components(g);
      if (by_components == facts.nonelementary()) return {true, {}};
      return violation(g, facts, mismatch("components>=3", by_components, "nonelementary",
                                          facts.nonelementary()));
    }

    case ClaimId::GammaLe3Degree: {
      if (n == 0) return {};
      const auto d = g.degrees();
      const bool has_hub = std::ranges::any_of(d, [n](unsigned x) { return x + 2 >= n; });
      const bool small = facts.gamma() <= 3;
      if (has_hub == small) return {true, {}};
      return violation(g, facts, mismatch("degree>=n-2", has_hub, "gamma<=3", small) +
                                     " gamma=" + std::to_string(facts.gamma()));
    }

    case ClaimId::VcritPartitionLemma: {
      const bool by_parts = v_critical_by_partitions(g);
      if (by_parts == facts.v_critical()) return {true, {}};
      return {true, mismatch("V1-cover", by_parts, "v-critical", facts.v_critical())};
    }

    case ClaimId::SaturatedPartitionProp: {
      const bool by_parts = saturated_by_partitions(g);
      if (by_parts == facts.saturated()) return {true, {}};
      return {true, mismatch("V1/V2-split", by_parts, "saturated", facts.saturated())};
    }

    case ClaimId::EdgeRemovalGamma: {
      if (!facts.v_critical()) return {};
      const auto failure = edge_removal_gamma_failure(g);
      if (!failure) return {true, {}};
      return violation(g, facts, "violation: removing edge {" + std::to_string(failure->u) + "," +
                                     std::to_string(failure->v) + "} changes gamma");
    }

    case ClaimId::EcritConditionProp: {
      if (!facts.v_critical()) return {};
      const bool condition = e_critical_condition(g);
      if (condition == facts.e_critical()) return {true, {}};
      return {true, mismatch("partition-condition", condition, "e-critical", facts.e_critical())};
    }

    case ClaimId::Elementary4List: {
      if (facts.gamma() != 4 || facts.nonelementary() || !facts.v_critical()) return {};
      const Classification c = classify_critical4(g);
      if (c.verdict == Verdict::ElementaryG1 || c.verdict == Verdict::ElementaryG2 ||
          c.verdict == Verdict::ElementaryG3)
        return {true, {}};
      return violation(g, facts, "violation: elementary v-critical gamma=4 graph not in list, " +
                                     degree_profile(g));
    }

    case ClaimId::CaracLemma: {
      if (!facts.nonelementary_gamma4()) return {};
      bool all_witnessed = true;
      for (Vertex x = 0; x < n && all_witnessed; ++x)
        all_witnessed = neighborhood_witness(g, x).has_value();
      if (all_witnessed != facts.v_critical())
        return violation(g, facts, mismatch("witness-pairs", all_witnessed, "v-critical",
                                            facts.v_critical()));
      if (all_witnessed && !witness_chase_holds(g))
        return violation(g, facts, "violation: witness chase fails");
      return {true, {}};
    }

    case ClaimId::Carac2Theorem: {
      if (!facts.nonelementary_gamma4()) return {};
      const bool by_degrees = vcrit4_by_degrees(g);
      if (by_degrees == facts.v_critical()) return {true, {}};
      return violation(g, facts, mismatch("degree-rule", by_degrees, "v-critical", facts.v_critical()));
    }

    case ClaimId::HalfBound:
    case ClaimId::ThreequarterBound: {
      if (!facts.nonelementary_gamma4() || !facts.v_critical()) return {};
      const bool quarter = id == ClaimId::ThreequarterBound;
      if (quarter && !facts.saturated()) return {};
      const HighClassBounds b = high_class_bounds(g);
      if (quarter ? b.at_least_three_quarters : b.at_least_half) return {true, {}};
      return violation(g, facts, "violation: |high|=" +
                                     std::to_string(degree_classes(g).high.size()) + " n=" +
                                     std::to_string(n));
    }

    case ClaimId::CutvertexLemma: {
      if (!facts.nonelementary_gamma4() || !facts.v_critical()) return {};
      if (cut_vertex_structure(g).lemma_holds) return {true, {}};
      return violation(g, facts, "violation: cut vertices " + g.cut_vertices().str() +
                                     " without a singleton component");
    }

    case ClaimId::Saturated4Degrees: {
      if (!facts.nonelementary_gamma4()) return {};
      const bool by_degrees = saturated4_by_degrees(g);
      if (by_degrees == facts.saturated()) return {true, {}};
      return violation(g, facts, mismatch("low-class-clique", by_degrees, "saturated", facts.saturated()));
    }

    case ClaimId::Ecrit4Degrees: {
      if (!facts.nonelementary_gamma4() || !facts.v_critical()) return {};
      const bool by_degrees = ecrit4_by_degrees(g);
      if (by_degrees == facts.e_critical()) return {true, {}};
      return violation(g, facts, mismatch("degree-rule", by_degrees, "e-critical", facts.e_critical()));
    }

    case ClaimId::CutStructureProp: {
      if (!facts.fully_critical4()) return {};
      if (cut_vertex_structure(g).prop_holds.value_or(false)) return {true, {}};
      return violation(g, facts, "violation: neither C5 nor a single degree-1 low vertex at a cut "
                                 "vertex; low=" + degree_classes(g).low.str() + " cut=" +
                                     g.cut_vertices().str() + " " + degree_profile(g));
    }

    case ClaimId::ClassificationTheorem: {
      if (!facts.fully_critical4()) return {};
      const Classification c = classify_critical4(g);
      if (c.verdict == Verdict::IsC5 || c.verdict == Verdict::IsDn) return {true, {}};
      return violation(g, facts, "violation: classified " + c.str() + " n=" + std::to_string(n) +
                                     " " + degree_profile(g));
    }

    case ClaimId::Local8Theorem: {
      if (n < 8 || facts.gamma() != 4) return {};
      const Local8 literal = local8_conditions(g);
      const Local8 fast = local8_fast(g);
      auto triple = [](const Local8& l) {
        return std::string("(") + yes_no(l.a) + "," + yes_no(l.b) + "," + yes_no(l.c) + ")";
      };
      if (literal != fast)
        return {true, "violation: tuple conditions " + triple(literal) + " but degree forms " + triple(fast)};
      const bool dn = n % 2 == 0 && is_isomorphic(g, gen_family({FamilyTag::Dn, n}));
      if (literal.all() == dn) return {true, {}};
      return violation(g, facts, mismatch("local-conditions", literal.all(), "isomorphic-to-Dn", dn) +
                                     " " + degree_profile(g));
    }

    case ClaimId::DnProperties: {
      if (!looks_like_dn(g)) return {};
      std::string problems;
      if (facts.gamma() != 4) problems += " gamma=" + std::to_string(facts.gamma());
      if (!facts.nonelementary()) problems += " elementary";
      if (!facts.v_critical()) problems += " not-v-critical";
      if (!facts.e_critical()) problems += " not-e-critical";
      if (!facts.saturated()) problems += " not-saturated";
      const auto d = g.degrees();
      const Vertex pendant = static_cast<Vertex>(std::ranges::find(d, 1u) - d.begin());
      const Vertex anchor = std::countr_zero(g.neighbors(pendant));
      if (!g.cut_vertices().contains(anchor)) problems += " pendant-neighbor-not-cut";
      if (problems.empty()) return {true, {}};
      return violation(g, facts, "violation:" + problems);
    }
  }
  return {};
}

}  // namespace

std::span<const ClaimId> all_claims() noexcept {
  static const auto ids = [] {
    std::array<ClaimId, kCatalog.size()> out{};
    for (std::size_t i = 0; i < kCatalog.size(); ++i) out[i] = kCatalog[i].id;
    return out;
  }();
  return ids;
}

const char* to_string(ClaimId id) noexcept { return entry(id).name; }

const char* claim_statement(ClaimId id) noexcept { return entry(id).statement; }

ClaimId claim_from_string(std::string_view name) {
  for (const CatalogEntry& e : kCatalog)
    if (name == e.name) return e.id;
  throw Error(ErrorCode::UnknownClaim, "unknown claim '" + std::string(name) + "'");
}

ClaimCheck check_claim(ClaimId id, const Graph& g) {
  try {
    return check_unguarded(id, g);
  } catch (const Error& e) {
    return {true, std::string("solver-error: ") + to_string(e.code()) + ": " + e.what()};
  }
}

}  // namespace romancrit
