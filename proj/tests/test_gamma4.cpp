#include <doctest.h>

#include <random>

#include "romancrit/criticality.hpp"
#include "romancrit/enumerate.hpp"
#include "romancrit/families.hpp"
#include "romancrit/gamma4.hpp"
#include "romancrit/graph6.hpp"
#include "romancrit/isomorphism.hpp"
#include "romancrit/roman.hpp"
#include "support.hpp"

using namespace romancrit;
using namespace romancrit::testing;

namespace {

Graph fam(FamilyTag tag, unsigned n) { return gen_family({tag, n}); }

template <class F>
void expect_precondition(F&& f) {
  try {
    f();
    FAIL("expected PreconditionViolated");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::PreconditionViolated);
  }
}

// K_{2m} minus a perfect matching, plus one isolated vertex.
Graph cocktail_plus_isolated(unsigned m) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < 2 * m; ++u)
    for (Vertex v = u + 1; v < 2 * m; ++v)
      if (v != u + 1 || u % 2 == 1) edges.push_back({u, v});
  return Graph(2 * m + 1, edges);
}

}  // namespace

TEST_CASE("degree classes") {
  const DegreeClasses x6 = degree_classes(fam(FamilyTag::Xn, 6));
  CHECK(x6.high.size() == 6);
  CHECK(x6.low.size() == 0);

  const DegreeClasses d6 = degree_classes(fam(FamilyTag::Dn, 6));
  CHECK(d6.high.members() == std::vector<Vertex>{0, 1, 2, 3, 4});
  CHECK(d6.low.members() == std::vector<Vertex>{5});

  const DegreeClasses k4 = degree_classes(fam(FamilyTag::Complete, 4));
  CHECK(k4.other.size() == 4);
}

TEST_CASE("vcrit4_by_degrees") {
  CHECK(vcrit4_by_degrees(fam(FamilyTag::Cycle, 5)));
  CHECK_FALSE(vcrit4_by_degrees(fam(FamilyTag::Cycle, 6)));
  CHECK(vcrit4_by_degrees(fam(FamilyTag::Dn, 8)));
  expect_precondition([] { (void)vcrit4_by_degrees(fam(FamilyTag::Cycle, 7)); });
  expect_precondition([] { (void)vcrit4_by_degrees(Graph(4, {})); });
}

TEST_CASE("neighborhood witnesses") {
  const Graph c5 = fam(FamilyTag::Cycle, 5);
  CHECK(neighborhood_witness(c5, 0) == NeighborhoodWitness{2, 4});
  const auto all = neighborhood_witnesses(c5, 0);
  CHECK(all == std::vector<NeighborhoodWitness>{{2, 4}, {3, 1}});
  CHECK_FALSE(neighborhood_witness(fam(FamilyTag::Cycle, 6), 0).has_value());
  CHECK(neighborhood_witness(fam(FamilyTag::Xn, 6), 0) == NeighborhoodWitness{2, 4});
  CHECK(witness_chase_holds(c5));
  CHECK(witness_chase_holds(fam(FamilyTag::Xn, 6)));
  CHECK_FALSE(witness_chase_holds(fam(FamilyTag::Cycle, 6)));
}

TEST_CASE("saturated4_by_degrees") {
  CHECK(saturated4_by_degrees(fam(FamilyTag::Xn, 6)));
  CHECK(saturated4_by_degrees(fam(FamilyTag::Dn, 6)));
  CHECK_FALSE(saturated4_by_degrees(fam(FamilyTag::Cycle, 6)));
}

TEST_CASE("ecrit4_by_degrees") {
  CHECK(ecrit4_by_degrees(fam(FamilyTag::Cycle, 5)));
  CHECK_FALSE(ecrit4_by_degrees(fam(FamilyTag::Xn, 6)));
  const Graph d6 = fam(FamilyTag::Dn, 6);
  CHECK(ecrit4_by_degrees(d6));
  // Vertex 0 misses only the high vertex 4 among high vertices.
  const Mask high = degree_classes(d6).high.bits();
  CHECK((high & ~d6.closed(0)) == bit(4));
  expect_precondition([] { (void)ecrit4_by_degrees(fam(FamilyTag::Cycle, 6)); });
}

TEST_CASE("high class bounds") {
  for (const Graph& g : {fam(FamilyTag::Cycle, 5), fam(FamilyTag::Dn, 8), fam(FamilyTag::Xn, 6)}) {
    const HighClassBounds b = high_class_bounds(g);
    CHECK(b.at_least_half);
    CHECK(b.at_least_three_quarters);
  }
  CHECK(degree_classes(fam(FamilyTag::Dn, 8)).high.size() == 7);
}

TEST_CASE("cut vertex structure") {
  const CutStructure c5 = cut_vertex_structure(fam(FamilyTag::Cycle, 5));
  CHECK(c5.lemma_holds);
  CHECK(c5.prop_holds == true);
  const CutStructure d6 = cut_vertex_structure(fam(FamilyTag::Dn, 6));
  CHECK(d6.lemma_holds);
  CHECK(d6.prop_holds == true);
  CHECK_FALSE(cut_vertex_structure(fam(FamilyTag::Xn, 6)).prop_holds.has_value());
}

TEST_CASE("classify examples") {
  CHECK(classify_critical4(fam(FamilyTag::Cycle, 5)).verdict == Verdict::IsC5);
  const Classification d10 = classify_critical4(fam(FamilyTag::Dn, 10));
  CHECK(d10.verdict == Verdict::IsDn);
  CHECK(d10.str() == "IsDn(10)");
  CHECK(classify_critical4(fam(FamilyTag::Cycle, 6)).verdict == Verdict::NotCritical);
  CHECK(classify_critical4(fam(FamilyTag::Elem1, 4)).verdict == Verdict::ElementaryG1);
  CHECK(classify_critical4(fam(FamilyTag::Elem2, 4)).verdict == Verdict::ElementaryG2);
  CHECK(classify_critical4(fam(FamilyTag::Elem3, 4)).verdict == Verdict::ElementaryG3);
  CHECK(classify_critical4(fam(FamilyTag::Xn, 6)).verdict == Verdict::NotCritical);
  CHECK(classify_critical4(fam(FamilyTag::Complete, 4)).str() == "NotCritical");
}

TEST_CASE("classify is invariant under relabeling") {
  std::mt19937_64 rng(41);
  for (unsigned n : {5u, 6u, 8u}) {
    const Graph base = n == 5 ? fam(FamilyTag::Cycle, 5) : fam(FamilyTag::Dn, n);
    std::vector<unsigned> perm(n);
    std::iota(perm.begin(), perm.end(), 0u);
    for (int i = 0; i < 10; ++i) {
      std::shuffle(perm.begin(), perm.end(), rng);
      CHECK(classify_critical4(relabel(base, perm)) == classify_critical4(base));
    }
  }
}

TEST_CASE("a cycle on four vertices plus an isolated vertex meets every hypothesis") {
  const Graph g = cocktail_plus_isolated(2);
  CHECK(emit_graph6(g).size() == 3);
  CHECK(gamma_value(g) == 4);
  CHECK(is_v_critical(g));
  CHECK(is_e_critical(g));
  CHECK(is_roman_saturated(g));
  CHECK(classify_critical4(g).verdict == Verdict::CriticalButUnclassified);
  CHECK(cut_vertex_structure(g).prop_holds == false);
}

TEST_CASE("local8 on the D family") {
  for (unsigned n : {8u, 10u, 12u}) {
    const Graph d = fam(FamilyTag::Dn, n);
    CHECK(local8_conditions(d) == Local8{true, true, true});
    CHECK(local8_fast(d) == Local8{true, true, true});
  }
}

TEST_CASE("local8 on X8") {
  const Graph x8 = fam(FamilyTag::Xn, 8);
  REQUIRE(gamma_value(x8) == 4);
  CHECK(local8_conditions(x8) == Local8{false, true, true});
  CHECK(local8_fast(x8) == Local8{false, true, true});
}

TEST_CASE("local8 preconditions") {
  expect_precondition([] { (void)local8_fast(fam(FamilyTag::Cycle, 8)); });
  expect_precondition([] { (void)local8_conditions(fam(FamilyTag::Cycle, 5)); });
  expect_precondition([] { (void)local8_conditions(fam(FamilyTag::Dn, 6)); });
}

TEST_CASE("subdividing the pendant edge of D8 keeps gamma at 4") {
  const Graph d8 = fam(FamilyTag::Dn, 8);
  std::vector<Edge> edges;
  for (const Edge& e : d8.edges())
    if (!(e == Edge{6, 7})) edges.push_back(e);
  edges.push_back({6, 8});
  edges.push_back({7, 8});
  const Graph subdivided(9, edges);
  CHECK(gamma_value(subdivided) == 4);
  CHECK(brute_gamma(subdivided) == 4);
  CHECK_FALSE(local8_conditions(subdivided).all());
  CHECK_FALSE(local8_fast(subdivided).all());
}

TEST_CASE("local8 fast and literal forms agree on gamma-4 perturbations of D8") {
  const Graph d8 = fam(FamilyTag::Dn, 8);
  int checked = 0;
  auto check = [&](const Graph& g) {
    if (gamma_value(g) != 4) return;
    ++checked;
    const Local8 slow = local8_conditions(g);
    CHECK(slow == local8_fast(g));
    CHECK(slow.all() == is_isomorphic(g, d8));
  };
  for (const Edge& e : d8.edges()) check(d8.delete_edge(e.u, e.v));
  for (const Edge& e : d8.non_edges()) check(d8.add_edge(e.u, e.v));
  CHECK(checked > 0);
}

TEST_CASE("local8 fast and literal conjunctions agree on random gamma-4 graphs") {
  std::mt19937_64 rng(42);
  int checked = 0;
  for (int i = 0; i < 4000 && checked < 300; ++i) {
    std::uniform_real_distribution<double> density(0.55, 0.9);
    const Graph g = random_graph(rng, 8 + static_cast<unsigned>(rng() % 3), density(rng));
    if (gamma_value(g) != 4) continue;
    ++checked;
    const Local8 slow = local8_conditions(g);
    const Local8 fast = local8_fast(g);
    CHECK(slow.all() == fast.all());
    CHECK(slow.a == fast.a);
    CHECK(slow.c == fast.c);
  }
  CHECK(checked >= 100);
}

TEST_CASE("local8 condition b differs from its degree form with two non-adjacent low vertices") {
  // Degrees (5,4,5,4,5,5,5,5); vertices 1 and 3 are non-adjacent, so each is
  // always among the other's three chosen non-neighbors and never plays v8.
  const Graph g = parse_graph6("GtZh}s");
  REQUIRE(gamma_value(g) == 4);
  CHECK_FALSE(g.adjacent(1, 3));
  CHECK(degree_classes(g).low.members() == std::vector<Vertex>{1, 3});
  CHECK(local8_conditions(g) == Local8{true, true, false});
  CHECK(local8_fast(g) == Local8{true, false, false});
}

TEST_CASE("local8 holds on an odd-order graph") {
  // K8 minus a perfect matching, plus an isolated vertex: order 9.
  const Graph g = cocktail_plus_isolated(4);
  REQUIRE(gamma_value(g) == 4);
  CHECK(local8_conditions(g).all());
  CHECK(g.order() % 2 == 1);
}

TEST_CASE("degree characterizations agree with definitions on all graphs up to order 6") {
  for (unsigned n = 5; n <= 6; ++n)
    enumerate_labeled_graphs(n, [](const Graph& g) {
      if (gamma_value(g) != 4) return;
      const bool v = is_v_critical(g);
      CHECK(vcrit4_by_degrees(g) == v);
      CHECK(saturated4_by_degrees(g) == is_roman_saturated(g));
      if (v) {
        CHECK(ecrit4_by_degrees(g) == is_e_critical(g));
        const HighClassBounds b = high_class_bounds(g);
        CHECK(b.at_least_half);
        if (is_roman_saturated(g)) CHECK(b.at_least_three_quarters);
        CHECK(cut_vertex_structure(g).lemma_holds);
        CHECK(witness_chase_holds(g));
      }
    });
}
