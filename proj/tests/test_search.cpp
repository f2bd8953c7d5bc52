#include <gtest/gtest.h>

#include <map>
#include <set>

#include "fanfree/canonical.hpp"
#include "fanfree/constructions.hpp"
#include "fanfree/search.hpp"
#include "oracles.hpp"

using namespace fanfree;

namespace {

// Maximum triangles over all labeled F_k-free graphs on n vertices.
std::int64_t naive_extremal(int n, int k) {
  std::int64_t best = 0;
  oracle::for_each_labeled_graph(n, [&](const Graph& g) {
    const std::int64_t t = oracle::triangles(g);
    if (t > best && !oracle::has_fan(g, k)) best = t;
  });
  return best;
}

}  // namespace

TEST(Augmentation, VisitsEachClassOnce) {
  const std::vector<std::int64_t> known{1, 2, 4, 11, 34, 156, 1044, 12346};
  for (int n = 1; n <= 8; ++n) {
    std::set<std::string> seen;
    const std::int64_t count = enumerate_graphs(n, nullptr, [&](const Graph& g) {
      EXPECT_TRUE(seen.insert(canonical_form(g)).second);
    });
    EXPECT_EQ(count, known[n - 1]) << "n=" << n;
  }
}

TEST(Augmentation, MatchesNaiveBucketing) {
  for (int n = 1; n <= 6; ++n) {
    std::set<std::string> naive;
    oracle::for_each_labeled_graph(n, [&](const Graph& g) { naive.insert(canonical_form(g)); });
    std::set<std::string> generated;
    enumerate_graphs(n, nullptr, [&](const Graph& g) { generated.insert(canonical_form(g)); });
    EXPECT_EQ(generated, naive) << "n=" << n;
  }
}

TEST(Augmentation, FilteredGenerationFindsAllFanFreeClasses) {
  for (int n = 1; n <= 6; ++n) {
    std::set<std::string> naive;
    oracle::for_each_labeled_graph(n, [&](const Graph& g) {
      if (!oracle::has_fan(g, 2)) naive.insert(canonical_form(g));
    });
    std::set<std::string> generated;
    enumerate_graphs(n, [](const Graph& g, int w) { return detail::fan_free_after_adding(g, w, 2); },
                     [&](const Graph& g) { generated.insert(canonical_form(g)); });
    EXPECT_EQ(generated, naive) << "n=" << n;
  }
}

TEST(Augmentation, PrunedNodesStayPruned) {
  // Supergraphs of a graph containing F_k still contain it.
  std::mt19937_64 rng(41);
  AugmentationTree tree(7, nullptr);
  int checked = 0;
  for (int trial = 0; trial < 300 && checked < 100; ++trial) {
    const Graph g = oracle::random_graph(5 + static_cast<int>(rng() % 3), 0.7, rng);
    if (is_fan_free(g, 2)) continue;
    ++checked;
    GraphBuilder b(g.order() + 1);
    for (const Edge& e : g.edges()) b.add_edge(e.u, e.v);
    for (int v = 0; v < g.order(); ++v)
      if (rng() % 2) b.add_edge(v, g.order());
    EXPECT_FALSE(is_fan_free(b.view(), 2));
  }
  EXPECT_GT(checked, 0);
}

TEST(Exhaustive, KTwoSmallValues) {
  const std::map<int, std::int64_t> expected{{4, 4}, {5, 4}, {6, 4}, {7, 5}, {8, 8}};
  for (const auto& [n, value] : expected) {
    const SearchReport r = exhaustive_extremal(n, 2);
    EXPECT_EQ(r.best_value, value) << "n=" << n;
    EXPECT_TRUE(r.exact);
    EXPECT_LE(r.best_value, ex3_star(n, 2).value);
    for (const auto& w : r.witnesses) {
      const Graph g = graph6_decode(w);
      EXPECT_EQ(triangle_count(g), value);
      EXPECT_TRUE(is_fan_free(g, 2));
      EXPECT_EQ(canonical_form(g), w);
    }
    EXPECT_TRUE(std::is_sorted(r.witnesses.begin(), r.witnesses.end()));
  }
}

TEST(Exhaustive, NamedWitnesses) {
  auto has = [](const SearchReport& r, const Graph& g) {
    return std::count(r.witnesses.begin(), r.witnesses.end(), canonical_form(g)) == 1;
  };
  EXPECT_TRUE(has(exhaustive_extremal(5, 2), disjoint_union(graphs::complete(4), Graph(1))));
  EXPECT_TRUE(has(exhaustive_extremal(8, 2), graphs::clique_packing(2, 4, 8)));
  EXPECT_TRUE(has(exhaustive_extremal(7, 2), disjoint_union(graphs::complete(4), graphs::complete(3))));
}

TEST(Exhaustive, AgreesWithLabeledBruteForce) {
  for (int n = 3; n <= 6; ++n)
    for (int k = 2; k <= 3; ++k) EXPECT_EQ(exhaustive_extremal(n, k).best_value, naive_extremal(n, k)) << n << "," << k;
}

TEST(Exhaustive, NeverAboveHypergraphBound) {
  for (int n = 4; n <= 9; ++n) {
    const SearchReport r = exhaustive_extremal(n, 2);
    EXPECT_LE(r.best_value, ex3_star(n, 2).value);
    if (n % 4 == 0 || n % 4 == 1 || n % 4 == 3) EXPECT_EQ(r.best_value, ex_k3_fan(n, 2).value) << n;
  }
}

TEST(Exhaustive, ThreadCountDoesNotChangeReport) {
  const SearchReport one = exhaustive_extremal(8, 3, 0, 1);
  const SearchReport four = exhaustive_extremal(8, 3, 0, 4);
  EXPECT_EQ(one.best_value, four.best_value);
  EXPECT_EQ(one.witnesses, four.witnesses);
}

TEST(Exhaustive, BudgetGivesPartialReport) {
  const SearchReport r = exhaustive_extremal(8, 2, 50, 1);
  EXPECT_FALSE(r.exact);
  EXPECT_LE(r.explored, 50);
}

TEST(Exhaustive, RejectsBadInput) {
  EXPECT_THROW(exhaustive_extremal(5, 1), input_error);
  EXPECT_THROW(exhaustive_extremal(0, 2), input_error);
}

TEST(Degseq, Examples) {
  const DegseqStats k4 = degseq_enumerate(DegreeSequence({3, 3, 3, 3, 3, 3, 2}));
  EXPECT_EQ(k4.max_triangles, 3);
  EXPECT_EQ(k4.max_witnesses, std::vector<std::string>{canonical_form(build({ConstructionKind::Hk, 0, 4}))});
  EXPECT_EQ(k4.min_triangles, 0);
  EXPECT_EQ(std::count(k4.min_witnesses.begin(), k4.min_witnesses.end(),
                       canonical_form(build({ConstructionKind::HkPrime, 0, 4}))),
            1);

  const DegseqStats k3 = degseq_enumerate(DegreeSequence({2, 2, 2}));
  EXPECT_EQ(k3.graphs, 1);
  EXPECT_EQ(k3.min_triangles, 1);
  EXPECT_EQ(k3.max_triangles, 1);
  EXPECT_THROW(degseq_enumerate(DegreeSequence({3, 3, 1, 1})), input_error);
  EXPECT_THROW(degseq_enumerate(DegreeSequence(std::vector<int>(12, 2))), capacity_error);
}

TEST(Degseq, CountsMatchNaiveBucketing) {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 12; ++trial) {
    const int n = 4 + trial % 3;
    const DegreeSequence seq = degree_sequence(oracle::random_graph(n, 0.5, rng));
    std::set<std::string> naive;
    oracle::for_each_labeled_graph(n, [&](const Graph& g) {
      if (degree_sequence(g) == seq) naive.insert(canonical_form(g));
    });
    std::set<std::string> generated;
    const DegseqStats st = degseq_enumerate(seq, [&](const Graph& g) { generated.insert(canonical_form(g)); });
    EXPECT_EQ(generated, naive);
    EXPECT_EQ(st.graphs, static_cast<std::int64_t>(naive.size()));
  }
}

TEST(Degseq, SixUpperBound) {
  // k = 6, s = 0: max over (5^10,4) is attained only by H_6.
  const DegseqStats st = degseq_enumerate(near_regular_sequence(11, 6));
  EXPECT_EQ(st.max_triangles, degseq_triangle_bounds(6, 0).max_bound);
  EXPECT_EQ(st.max_witnesses, std::vector<std::string>{canonical_form(build({ConstructionKind::Hk, 0, 6}))});
  EXPECT_EQ(st.min_triangles, *degseq_triangle_bounds(6, 0).min_bound);
}

TEST(HillClimb, ReachesConstructionValues) {
  const SearchReport odd = hill_climb(30, 3, {20, 2000, 42});
  EXPECT_GE(odd.best_value, 146);
  const SearchReport even = hill_climb(20, 4, {20, 2000, 42});
  EXPECT_GE(even.best_value, 133);
  for (const SearchReport* r : {&odd, &even}) {
    EXPECT_FALSE(r->exact);
    for (const auto& w : r->witnesses) {
      const Graph g = graph6_decode(w);
      EXPECT_TRUE(is_fan_free(g, r->k));
      EXPECT_EQ(triangle_count(g), r->best_value);
    }
  }
}

TEST(HillClimb, Deterministic) {
  const SearchReport a = hill_climb(16, 3, {5, 3000, 7});
  const SearchReport b = hill_climb(16, 3, {5, 3000, 7});
  EXPECT_EQ(a.best_value, b.best_value);
  EXPECT_EQ(a.witnesses, b.witnesses);
  EXPECT_EQ(a.explored, b.explored);
  EXPECT_EQ(a.pruned, b.pruned);
}

TEST(HillClimb, RandomRestartsStayFanFree) {
  for (int k = 2; k <= 4; ++k) {
    const SearchReport r = hill_climb(14, k, {8, 4000, 1234});
    for (const auto& w : r.witnesses) EXPECT_TRUE(is_fan_free(graph6_decode(w), k));
  }
}
