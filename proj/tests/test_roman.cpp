#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "romancrit/enumerate.hpp"
#include "romancrit/families.hpp"
#include "romancrit/roman.hpp"
#include "support.hpp"

using namespace romancrit;
using namespace romancrit::testing;

namespace {

Graph fam(FamilyTag tag, unsigned n) { return gen_family({tag, n}); }

RomanAssignment labels(std::initializer_list<std::uint8_t> l) {
  return RomanAssignment(std::vector<std::uint8_t>(l));
}

}  // namespace

TEST_CASE("is_roman") {
  const Graph c5 = fam(FamilyTag::Cycle, 5);
  CHECK(is_roman(c5, labels({2, 0, 1, 1, 0})));
  CHECK_FALSE(is_roman(c5, labels({2, 0, 0, 1, 1})));
  CHECK(is_roman(c5, labels({1, 1, 1, 1, 1})));
  CHECK(is_roman(fam(FamilyTag::Dn, 6), RomanAssignment(std::vector<std::uint8_t>(6, 1))));
  CHECK_FALSE(is_roman(Graph(2, {}), labels({2, 0})));
  try {
    (void)is_roman(c5, labels({1, 1}));
    FAIL("expected LengthMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::LengthMismatch);
  }
  CHECK_THROWS_AS(labels({0, 3}), Error);
}

TEST_CASE("weight") {
  CHECK(weight(labels({0, 0, 0, 0})) == 0);
  const RomanAssignment p = RomanAssignment::from_partition(2, bit(0), bit(1));
  CHECK(p.level_set(1).members() == std::vector<Vertex>{0});
  CHECK(weight(p) == 3);
  CHECK(weight(labels({2, 0, 1, 1, 0})) == 4);
}

TEST_CASE("roman_number on named graphs") {
  for (unsigned n = 2; n <= 10; ++n) CHECK(roman_number(fam(FamilyTag::Complete, n)).gamma == 2);
  CHECK(roman_number(fam(FamilyTag::Cycle, 7)).gamma == 5);
  CHECK(roman_number(fam(FamilyTag::Cycle, 8)).gamma == 6);
  CHECK(roman_number(fam(FamilyTag::Cycle, 5)).gamma == 4);
  CHECK(roman_number(fam(FamilyTag::Dn, 6)).gamma == 4);
  CHECK(roman_number(fam(FamilyTag::Xn, 6)).gamma == 4);
  for (unsigned n = 0; n <= 10; ++n) CHECK(roman_number(Graph(n, {})).gamma == n);

  const GammaResult zero = roman_number(Graph());
  CHECK(zero.gamma == 0);
  CHECK(zero.witness.size() == 0);
}

TEST_CASE("roman_number witness is the smallest optimal S") {
  CHECK(roman_number(fam(FamilyTag::Cycle, 5)).witness == labels({2, 0, 1, 1, 0}));
  CHECK(roman_number(fam(FamilyTag::Complete, 3)).witness == labels({2, 0, 0}));
  // K2: S = {} already has weight 2, which no larger S beats.
  CHECK(roman_number(fam(FamilyTag::Complete, 2)).witness == labels({1, 1}));
  // P4 = 0-1-2-3: optimum 3 is first reached at S = {1}.
  CHECK(roman_number(fam(FamilyTag::Path, 4)).witness == labels({0, 2, 0, 1}));
}

TEST_CASE("roman_number witness is valid on random graphs") {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 500; ++i) {
    const Graph g = random_graph_between(rng, 0, 20);
    const GammaResult r = roman_number(g);
    CHECK(is_roman(g, r.witness));
    CHECK(weight(r.witness) == r.gamma);
    CHECK(gamma_value(g) == r.gamma);
  }
}

TEST_CASE("roman_number handles large sparse-gamma graphs") {
  // A star on 64 vertices: one hub dominates everything.
  std::vector<Edge> star;
  for (Vertex v = 1; v < 64; ++v) star.push_back({0, v});
  CHECK(roman_number(Graph(64, star)).gamma == 2);
  CHECK(roman_number(fam(FamilyTag::Cycle, 30)).gamma == 20);
}

TEST_CASE("oracle examples and guard") {
  CHECK(roman_number_oracle(fam(FamilyTag::Path, 4)) == 3);
  CHECK(roman_number_oracle(fam(FamilyTag::Cycle, 6)) == 4);
  CHECK(roman_number_oracle(Graph(1, {})) == 1);
  CHECK(roman_number_oracle(Graph()) == 0);
  try {
    (void)roman_number_oracle(Graph(13, {}));
    FAIL("expected TooLarge");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::TooLarge);
  }
}

TEST_CASE("oracle agrees with recursive brute force") {
  std::mt19937_64 rng(22);
  for (int i = 0; i < 200; ++i) {
    const Graph g = random_graph_between(rng, 0, 8);
    CHECK(roman_number_oracle(g) == brute_gamma(g));
  }
}

TEST_CASE("minimal_partitions examples") {
  const auto k2 = minimal_partitions(fam(FamilyTag::Complete, 2));
  REQUIRE(k2.size() == 3);
  CHECK(k2[0] == labels({1, 1}));
  CHECK(k2[1] == labels({2, 0}));
  CHECK(k2[2] == labels({0, 2}));

  const Graph c5 = fam(FamilyTag::Cycle, 5);
  const auto c5_parts = minimal_partitions(c5);
  CHECK_FALSE(c5_parts.empty());
  for (const RomanAssignment& a : c5_parts) {
    const unsigned twos = a.level_set(2).size();
    CHECK((twos == 1 || twos == 2));
    CHECK(is_roman(c5, a));
    CHECK(weight(a) == 4);
  }

  const auto single = minimal_partitions(Graph(1, {}));
  REQUIRE(single.size() == 1);
  CHECK(single[0] == labels({1}));

  try {
    (void)minimal_partitions(Graph(25, {}));
    FAIL("expected TooLarge");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::TooLarge);
  }
}

TEST_CASE("minimal_partitions is ordered by V2 mask") {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 100; ++i) {
    const auto parts = minimal_partition_masks(random_graph_between(rng, 1, 12));
    CHECK(std::is_sorted(parts.begin(), parts.end(),
                         [](const PartitionMasks& a, const PartitionMasks& b) { return a.twos < b.twos; }));
  }
}

TEST_CASE("minimal_partitions equals every minimum labeling (3^n enumeration)") {
  std::mt19937_64 rng(24);
  for (unsigned n = 1; n <= 9; ++n) {
    int mismatched = 0;
    for (int i = 0; i < 500; ++i) {
      std::uniform_real_distribution<double> density(0.1, 0.9);
      const Graph g = random_graph(rng, n, density(rng));
      std::set<std::vector<int>> expected;
      for (const auto& l : brute_minimum_labelings(g)) {
        expected.insert(l);
        // No 1-labeled vertex is dominated by a 2.
        for (unsigned v = 0; v < n; ++v)
          if (l[v] == 1)
            for (unsigned u = 0; u < n; ++u) CHECK_FALSE((g.adjacent(u, v) && l[u] == 2));
      }
      std::set<std::vector<int>> produced;
      for (const RomanAssignment& a : minimal_partitions(g))
        produced.insert(std::vector<int>(a.labels().begin(), a.labels().end()));
      mismatched += produced != expected;
    }
    CHECK_MESSAGE(mismatched == 0, "order " << n);
  }
}

TEST_CASE("edge removal never lowers gamma") {
  std::mt19937_64 rng(25);
  for (int i = 0; i < 500; ++i) {
    const Graph g = random_graph_between(rng, 1, 12);
    std::vector<Edge> kept;
    for (const Edge& e : g.edges())
      if (rng() % 3 != 0) kept.push_back(e);
    CHECK(gamma_value(g) <= gamma_value(Graph(g.order(), kept)));
  }
}

TEST_CASE("cycle formulas") {
  for (unsigned k = 1; k <= 6; ++k) {
    CHECK(gamma_value(fam(FamilyTag::Cycle, 3 * k + 1)) == 2 * k + 1);
    CHECK(gamma_value(fam(FamilyTag::Cycle, 3 * k + 2)) == 2 * k + 2);
  }
}

TEST_CASE("vertex deletion lowers gamma by at most one") {
  std::mt19937_64 rng(26);
  for (int i = 0; i < 300; ++i) {
    const Graph g = random_graph_between(rng, 1, 12);
    const unsigned gamma = gamma_value(g);
    for (Vertex v = 0; v < g.order(); ++v) {
      const unsigned after = gamma_value(g.delete_vertex(v));
      CHECK(after + 1 >= gamma);
    }
  }
}

TEST_CASE("gamma <= 3 versus a vertex of degree >= n-2") {
  // Holds for every labeled graph up to order 6 except the edgeless graph on
  // three vertices, where gamma = 3 yet every degree is 0 < n-2.
  std::vector<Graph> exceptions;
  for (unsigned n = 1; n <= 6; ++n)
    enumerate_labeled_graphs(n, [&](const Graph& g) {
      const auto d = g.degrees();
      const bool hub = std::any_of(d.begin(), d.end(), [n](unsigned x) { return x + 2 >= n; });
      if (hub != (gamma_value(g) <= 3)) exceptions.push_back(g);
    });
  REQUIRE(exceptions.size() == 1);
  CHECK(exceptions[0] == Graph(3, {}));
}
