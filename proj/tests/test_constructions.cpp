#include <gtest/gtest.h>

#include "fanfree/canonical.hpp"
#include "fanfree/constructions.hpp"
#include "fanfree/matching.hpp"
#include "fanfree/triangles.hpp"
#include "oracles.hpp"

using namespace fanfree;

namespace {

DegreeSequence near_regular(int k) {
  std::vector<int> d(static_cast<std::size_t>(2 * k - 1), k - 1);
  d.back() = k - 2;
  return DegreeSequence(d);
}

}  // namespace

TEST(Build, FixedSizeGraphs) {
  const Graph h4 = build({ConstructionKind::Hk, 0, 4});
  EXPECT_EQ(h4.order(), 7);
  EXPECT_EQ(h4.size(), 10);
  EXPECT_EQ(oracle::triangles(h4), 3);
  EXPECT_EQ(degree_sequence(h4), near_regular(4));

  const Graph h6p = build({ConstructionKind::HkPrime, 0, 6});
  EXPECT_EQ(h6p.order(), 11);
  EXPECT_EQ(oracle::triangles(h6p), 2);

  for (int k : {4, 6, 8, 10}) {
    const Graph hk = build({ConstructionKind::Hk, 0, k});
    const Graph hkp = build({ConstructionKind::HkPrime, 0, k});
    EXPECT_EQ(degree_sequence(hk), near_regular(k));
    EXPECT_EQ(degree_sequence(hkp), near_regular(k));
    const std::int64_t h = k / 2;
    EXPECT_EQ(oracle::triangles(hkp), (h - 2) * (h - 1));
    EXPECT_EQ(oracle::triangles(hk), 2 * binom(k - 1, 3) + (h - 1) * (h - 1));
    EXPECT_EQ(canonical_form(hk), canonical_form(hk_via_complement(k))) << k;
    EXPECT_EQ(canonical_form(build({ConstructionKind::Gl, 0, k})), canonical_form(hkp)) << k;
  }
}

TEST(Build, ExtremalFamilies) {
  const Graph odd = build({ConstructionKind::OddExtremal, 10, 3});
  EXPECT_EQ(oracle::triangles(odd), 26);
  EXPECT_FALSE(oracle::has_fan(odd, 3));
  // Cliques first, apex set last.
  EXPECT_EQ(odd.degree(0), 2 + 4);
  EXPECT_EQ(odd.degree(9), 6);
  EXPECT_TRUE(odd.neighbors(9).is_subset_of(VertexSet::range(6)));

  const Graph even = build({ConstructionKind::EvenExtremal, 20, 4});
  EXPECT_EQ(oracle::triangles(even), 133);
  EXPECT_EQ(graph6_encode(even), graph6_encode(build({ConstructionKind::EvenExtremal, 20, 4})));
}

TEST(Build, RejectsBadParameters) {
  EXPECT_THROW(build({ConstructionKind::OddExtremal, 10, 4}), input_error);
  EXPECT_THROW(build({ConstructionKind::OddExtremal, 5, 3}), input_error);
  EXPECT_THROW(build({ConstructionKind::EvenExtremal, 20, 5}), input_error);
  EXPECT_THROW(build({ConstructionKind::Hk, 0, 2}), input_error);
  EXPECT_THROW(build({ConstructionKind::Hk, 8, 4}), input_error);
  EXPECT_THROW(build({ConstructionKind::K4Packing, 10, 3}), input_error);
  EXPECT_EQ(parse_construction_kind("hkprime"), ConstructionKind::HkPrime);
  EXPECT_FALSE(parse_construction_kind("nope"));
}

TEST(Build, K4Packing) {
  for (int n = 3; n <= 40; ++n) {
    const Graph g = build({ConstructionKind::K4Packing, n, 2});
    EXPECT_EQ(triangle_count(g), ex_k3_fan(n, 2).value);
    EXPECT_TRUE(is_fan_free(g, 2));
  }
}

TEST(Build, AllConstructionsFanFree) {
  for (int k : {3, 5})
    for (int n = 2 * k; n <= 60; ++n) EXPECT_TRUE(is_fan_free(build({ConstructionKind::OddExtremal, n, k}), k));
  for (int k : {4, 6, 8})
    for (int n = 2 * k - 1; n <= 60; ++n)
      EXPECT_TRUE(is_fan_free(build({ConstructionKind::EvenExtremal, n, k}), k));
  for (int k : {4, 6, 8})
    for (auto kind : {ConstructionKind::Hk, ConstructionKind::HkPrime, ConstructionKind::Gl})
      EXPECT_TRUE(is_fan_free(build({kind, 0, k}), k));
}

TEST(Formula, Values) {
  EXPECT_EQ(ex_k3_fan(10, 3).value, 26);
  EXPECT_EQ(ex_k3_fan(20, 4).value, 133);
  EXPECT_EQ(ex_k3_fan(20, 4).valid_from, 256);
  EXPECT_EQ(ex_k3_fan(8, 2).value, 8);
  EXPECT_EQ(ex_k3_fan(30, 3).value, 146);
  EXPECT_EQ(ex_k3_fan(7, 2).value, 5);
  EXPECT_THROW(ex_k3_fan(5, 3), input_error);
  EXPECT_THROW(ex_k3_fan(10, 1), input_error);
}

TEST(Formula, EvenConstantHasTwoForms) {
  for (int k = 4; k <= 30; k += 2) {
    const std::int64_t h = k / 2;
    EXPECT_EQ((h - 1) * (h - 1), binom(h, 2) + binom(h - 1, 2));
  }
}

TEST(Formula, MatchesConstructionCounts) {
  for (int k : {3, 5, 7, 9})
    for (int n = 2 * k; n <= 80; ++n)
      EXPECT_EQ(triangle_count(build({ConstructionKind::OddExtremal, n, k})), ex_k3_fan(n, k).value);
  for (int k : {4, 6, 8, 10})
    for (int n = 2 * k; n <= 80; ++n)
      EXPECT_EQ(triangle_count(build({ConstructionKind::EvenExtremal, n, k})), ex_k3_fan(n, k).value);
}

TEST(Hypergraph, Values) {
  EXPECT_EQ(ex3_star(9, 2).value, 8);
  EXPECT_EQ(ex3_star(11, 2).value, 9);
  EXPECT_EQ(ex3_star(12, 2).value, 12);
  EXPECT_EQ(ex3_star(10, 2).value, 8);
  EXPECT_FALSE(ex3_star(30, 3).valid_from);
  for (int n = 20; n <= 100; ++n) EXPECT_GE(ex3_star(n, 4).value, ex_k3_fan(n, 4).value);
  for (int n = 3; n <= 100; ++n) EXPECT_GE(ex3_star(n, 2).value, ex_k3_fan(n, 2).value);
  for (int k : {3, 5, 7})
    for (int n = 2 * k; n <= 60; ++n) {
      const TripleSystem ts = lift(build({ConstructionKind::OddExtremal, n, k}));
      EXPECT_EQ(static_cast<std::int64_t>(ts.size()), ex3_star(n, k).value);
      EXPECT_FALSE(contains_star(ts, k));
    }
}

TEST(DegseqBounds, Values) {
  const auto k6 = degseq_triangle_bounds(6, 0);
  EXPECT_EQ(k6.min_bound, 2);
  EXPECT_EQ(k6.max_bound, 24);
  ASSERT_TRUE(k6.min_extremal && k6.max_extremal);
  EXPECT_EQ(triangle_count(*k6.min_extremal), 2);
  EXPECT_EQ(triangle_count(*k6.max_extremal), 24);
  EXPECT_EQ(degseq_triangle_bounds(4, 0).max_bound, 3);

  const auto s1 = degseq_triangle_bounds(6, 1);
  EXPECT_EQ(s1.shrink_bound, Rational(16));
  EXPECT_EQ(s1.max_bound, 16);
  EXPECT_FALSE(s1.min_bound);
  EXPECT_FALSE(s1.max_extremal);
  EXPECT_EQ(shrink_triangle_bound(4, 1), Rational(2));

  EXPECT_THROW(degseq_triangle_bounds(5, 0), input_error);
  EXPECT_THROW(degseq_triangle_bounds(6, 3), input_error);
}
