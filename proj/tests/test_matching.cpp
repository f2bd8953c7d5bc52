#include <gtest/gtest.h>

#include <random>

#include "fanfree/constructions.hpp"
#include "fanfree/graph6.hpp"
#include "fanfree/matching.hpp"
#include "oracles.hpp"

using namespace fanfree;

namespace {

VertexSet set_of(std::initializer_list<int> vs) {
  VertexSet s;
  for (int v : vs) s.set(v);
  return s;
}

Graph fan(int k) {
  GraphBuilder b(2 * k + 1);
  for (int i = 0; i < k; ++i) {
    b.add_edge(0, 2 * i + 1);
    b.add_edge(0, 2 * i + 2);
    b.add_edge(2 * i + 1, 2 * i + 2);
  }
  return std::move(b).build();
}

}  // namespace

TEST(Matching, Examples) {
  EXPECT_EQ(max_matching(graphs::cycle(5)).size, 2);
  for (int m = 1; m <= 8; ++m) EXPECT_EQ(max_matching(graphs::complete(2 * m)).size, m);
  EXPECT_EQ(max_matching(graphs::petersen()).size, 5);
  EXPECT_EQ(oracle::matching_number(graphs::petersen()), 5);
}

TEST(Matching, AgreesWithBruteForce) {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 1500; ++i) {
    const int n = static_cast<int>(rng() % 11);
    const Graph g = oracle::random_graph(n, 0.1 + 0.8 * static_cast<double>(i % 9) / 8, rng);
    const MatchingResult m = max_matching(g);
    ASSERT_EQ(m.size, oracle::matching_number(g)) << graph6_encode(g);
    ASSERT_EQ(static_cast<int>(m.matching.size()), m.size);
    VertexSet used;
    for (const Edge& e : m.matching) {
      EXPECT_TRUE(g.adjacent(e.u, e.v));
      EXPECT_FALSE(used.test(e.u) || used.test(e.v));
      used.set(e.u);
      used.set(e.v);
    }
  }
}

TEST(Matching, OddCyclesNeedBlossoms) {
  // Two triangles joined by a path: greedy orders can get stuck without contraction.
  const Graph g = Graph::from_edges(8, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 5}});
  EXPECT_EQ(matching_number(g), 4);
  for (int n = 3; n <= 25; n += 2) EXPECT_EQ(matching_number(graphs::cycle(n)), n / 2);
}

TEST(Matching, LimitAndSubset) {
  EXPECT_EQ(matching_number(graphs::complete(20), graphs::complete(20).vertices(), 3), 3);
  EXPECT_EQ(matching_number(graphs::complete(20), set_of({0, 1, 2, 3, 4})), 2);
}

TEST(TutteBerge, Examples) {
  const auto c5 = tutte_berge_check(graphs::cycle(5), VertexSet{});
  EXPECT_EQ(c5.value, Rational(2));
  EXPECT_TRUE(c5.is_minimizer);
  const auto k4 = tutte_berge_check(graphs::complete(4), VertexSet{});
  EXPECT_EQ(k4.value, Rational(2));
  EXPECT_TRUE(k4.is_minimizer);
  const auto star = tutte_berge_check(graphs::star(3), set_of({0}));
  EXPECT_EQ(star.value, Rational(1));
  EXPECT_TRUE(star.is_minimizer);
  EXPECT_FALSE(tutte_berge_check(graphs::star(3), VertexSet{}).is_minimizer);
}

TEST(TutteBerge, ExactMinimumEqualsMatchingNumber) {
  std::mt19937_64 rng(22);
  for (int i = 0; i < 200; ++i) {
    const Graph g = oracle::random_graph(static_cast<int>(rng() % 13), 0.3, rng);
    const MatchingResult m = max_matching(g, true);
    ASSERT_TRUE(m.certificate);
    EXPECT_EQ(tutte_berge_value(g, *m.certificate), Rational(m.size));
    // The bound holds for every X.
    VertexSet x;
    for (int v = 0; v < g.order(); ++v)
      if (rng() % 3 == 0) x.set(v);
    EXPECT_GE(tutte_berge_value(g, x), Rational(m.size));
  }
  EXPECT_THROW(tutte_berge_minimizer(Graph(kMaxExactTutteBerge + 1)), capacity_error);
}

TEST(Fans, CenterOrder) {
  const Graph wheel = join(graphs::empty(1), graphs::cycle(4));
  EXPECT_EQ(fan_center_order(wheel, 0), 2);
  for (int k = 1; k <= 6; ++k) {
    for (int v = 0; v < 2 * k; ++v) EXPECT_EQ(fan_center_order(graphs::complete(2 * k), v), k - 1);
    EXPECT_EQ(fan_center_order(graphs::complete(2 * k + 1), 0), k);
  }
}

TEST(Fans, Detection) {
  const auto w = contains_fan(fan(2), 2);
  ASSERT_TRUE(w);
  EXPECT_EQ(w->center, 0);
  EXPECT_TRUE(validate_fan(fan(2), *w, 2));
  EXPECT_FALSE(contains_fan(fan(2), 3));
  EXPECT_THROW(contains_fan(fan(2), 0), input_error);
  for (int k : {3, 5}) EXPECT_FALSE(contains_fan(build({ConstructionKind::OddExtremal, 4 * k, k}), k));
  for (int k : {4, 6}) EXPECT_FALSE(contains_fan(build({ConstructionKind::EvenExtremal, 4 * k, k}), k));
  // One more apex edge inside the core creates a fan.
  GraphBuilder b(build({ConstructionKind::OddExtremal, 10, 3}));
  b.add_edge(6, 7);
  EXPECT_TRUE(contains_fan(b.view(), 3));
}

TEST(Fans, DetectorAgreesWithDefinition) {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 300; ++i) {
    const Graph g = oracle::random_graph(4 + static_cast<int>(rng() % 9), 0.55, rng);
    for (int k = 1; k <= 4; ++k) {
      const auto w = contains_fan(g, k);
      bool some_center = false;
      for (int v = 0; v < g.order(); ++v) some_center = some_center || fan_center_order(g, v) >= k;
      EXPECT_EQ(w.has_value(), some_center);
      EXPECT_EQ(w.has_value(), oracle::has_fan(g, k));
      if (w) {
        EXPECT_TRUE(validate_fan(g, *w, k));
        EXPECT_TRUE(std::is_sorted(w->pairs.begin(), w->pairs.end()));
      }
    }
  }
}

TEST(Stars, Examples) {
  EXPECT_FALSE(contains_star(lift(graphs::complete(4)), 2));
  const TripleSystem two_k4 = lift(graphs::clique_packing(2, 4, 8));
  EXPECT_FALSE(contains_star(two_k4, 2));
  EXPECT_TRUE(contains_star(two_k4, 1));
  EXPECT_TRUE(contains_star(lift(graphs::complete(5)), 2));
}

TEST(Stars, FanFreeGraphsHaveStarFreeLifts) {
  std::mt19937_64 rng(24);
  int tested = 0;
  while (tested < 200) {
    const Graph g = oracle::random_graph(5 + static_cast<int>(rng() % 10), 0.5, rng);
    for (int k = 2; k <= 4; ++k) {
      if (!is_fan_free(g, k)) continue;
      ++tested;
      EXPECT_FALSE(contains_star(lift(g), k));
    }
  }
}
