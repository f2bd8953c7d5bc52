#include <gtest/gtest.h>

#include <random>
#include <set>

#include "fanfree/canonical.hpp"
#include "fanfree/constructions.hpp"
#include "fanfree/graph.hpp"
#include "fanfree/graph6.hpp"
#include "oracles.hpp"

using namespace fanfree;

namespace {

void expect_well_formed(const Graph& g) {
  for (int u = 0; u < g.order(); ++u) {
    EXPECT_FALSE(g.adjacent(u, u));
    for (int v : g.neighbors(u)) {
      EXPECT_LT(v, g.order());
      EXPECT_TRUE(g.adjacent(v, u));
    }
  }
}

std::vector<int> degrees_of(const DegreeSequence& d) { return d.degrees(); }

}  // namespace

TEST(Graph, FromEdgesBasics) {
  const Graph k3 = Graph::from_edges(3, {{0, 1}, {1, 2}, {0, 2}});
  EXPECT_EQ(k3.size(), 3);
  EXPECT_EQ(degrees_of(degree_sequence(k3)), (std::vector<int>{2, 2, 2}));
  EXPECT_EQ(Graph::from_edges(4, {}).size(), 0);
  EXPECT_EQ(Graph::from_edges(5, {{0, 1}, {0, 1}, {1, 2}}).size(), 2);
}

TEST(Graph, RejectsBadEdges) {
  EXPECT_THROW(Graph::from_edges(3, {{0, 3}}), input_error);
  EXPECT_THROW(Graph::from_edges(3, {{-1, 0}}), input_error);
  EXPECT_THROW(Graph::from_edges(3, {{1, 1}}), input_error);
  EXPECT_THROW(Graph(kMaxVertices + 1), capacity_error);
  EXPECT_NO_THROW(Graph(kMaxVertices));
}

TEST(Graph, RandomEdgeListsGiveSymmetricLoopFreeRows) {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 80);
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 3 * n; ++i) {
      const int a = static_cast<int>(rng() % n);
      const int b = static_cast<int>(rng() % n);
      if (a != b) edges.emplace_back(a, b);
    }
    const Graph g = Graph::from_edges(n, edges);
    expect_well_formed(g);
    expect_well_formed(complement(g));
    std::set<Edge> distinct;
    for (auto [a, b] : edges) distinct.emplace(a, b);
    EXPECT_EQ(g.size(), static_cast<std::int64_t>(distinct.size()));
  }
}

TEST(Graph, Complement) {
  EXPECT_EQ(complement(graphs::complete(4)), graphs::empty(4));
  EXPECT_EQ(canonical_form(complement(graphs::cycle(5))), canonical_form(graphs::cycle(5)));
  std::mt19937_64 rng(2);
  for (int i = 0; i < 50; ++i) {
    const Graph g = oracle::random_graph(1 + i, 0.4, rng);
    EXPECT_EQ(complement(complement(g)), g);
    std::vector<int> expected;
    for (int v = 0; v < g.order(); ++v) expected.push_back(g.order() - 1 - g.degree(v));
    EXPECT_EQ(degree_sequence(complement(g)), DegreeSequence(expected));
  }
}

TEST(Graph, Join) {
  const Graph c4 = join(graphs::empty(2), graphs::empty(2));
  EXPECT_EQ(canonical_form(c4), canonical_form(graphs::cycle(4)));
  const Graph wheel = join(graphs::empty(1), graphs::cycle(4));
  EXPECT_EQ(wheel.size(), 8);
  const Graph two_k2 = Graph::from_edges(4, {{0, 1}, {2, 3}});
  EXPECT_EQ(join(graphs::empty(3), two_k2).size(), 2 + 12);

  std::mt19937_64 rng(3);
  for (int i = 0; i < 30; ++i) {
    const Graph a = oracle::random_graph(i % 9, 0.5, rng);
    const Graph b = oracle::random_graph(i % 7 + 1, 0.3, rng);
    const Graph j = join(a, b);
    EXPECT_EQ(j.size(), a.size() + b.size() + static_cast<std::int64_t>(a.order()) * b.order());
    expect_well_formed(j);
  }
  EXPECT_THROW(join(graphs::empty(300), graphs::empty(300)), capacity_error);
}

TEST(Graph, DisjointUnion) {
  const Graph two_k3 = disjoint_union(graphs::complete(3), graphs::complete(3));
  EXPECT_EQ(two_k3.order(), 6);
  EXPECT_EQ(two_k3.size(), 6);
  EXPECT_EQ(oracle::triangles(two_k3), 2);
  const Graph p = graphs::petersen();
  EXPECT_EQ(disjoint_union(p, Graph(0)), p);
  const Graph two_k4 = disjoint_union(graphs::complete(4), graphs::complete(4));
  EXPECT_EQ(two_k4.order(), 8);
  EXPECT_EQ(two_k4.size(), 12);
  EXPECT_THROW(disjoint_union(graphs::empty(500), graphs::empty(13)), capacity_error);
}

TEST(Graph, Induced) {
  EXPECT_EQ(induced(graphs::complete(5), std::vector<int>{4, 1, 2}), graphs::complete(3));
  EXPECT_EQ(induced(graphs::petersen(), VertexSet{}).order(), 0);
  EXPECT_EQ(induced(graphs::cycle(6), std::vector<int>{0, 1, 2}), graphs::path(3));
  EXPECT_THROW(induced(graphs::cycle(6), std::vector<int>{0, 6}), input_error);
}

TEST(Graph, DegreeSequences) {
  EXPECT_EQ(degrees_of(degree_sequence(build({ConstructionKind::Hk, 0, 4}))),
            (std::vector<int>{3, 3, 3, 3, 3, 3, 2}));
  EXPECT_EQ(degrees_of(degree_sequence(graphs::complete(6))), std::vector<int>(6, 5));
  EXPECT_EQ(degrees_of(degree_sequence(graphs::star(4))), (std::vector<int>{4, 1, 1, 1, 1}));
  EXPECT_THROW(DegreeSequence({1, 1, 1}), input_error);
  EXPECT_THROW(DegreeSequence({3, 1, 1}), input_error);
  EXPECT_THROW(DegreeSequence({-1, 1}), input_error);
  EXPECT_EQ(erdos_gallai_violation(DegreeSequence({3, 3, 1, 1})), 2);
  EXPECT_FALSE(erdos_gallai_violation(DegreeSequence({3, 3, 3, 3})));
}

TEST(Graph, ErdosGallaiMatchesRealizability) {
  // Every sequence on 5 vertices is graphical iff some labeled graph realizes it.
  std::set<std::vector<int>> realized;
  oracle::for_each_labeled_graph(5, [&](const Graph& g) { realized.insert(degree_sequence(g).degrees()); });
  std::vector<int> d(5);
  for (int code = 0; code < 625; ++code) {
    int c = code;
    for (int& x : d) {
      x = c % 5;
      c /= 5;
    }
    std::vector<int> sorted = d;
    std::sort(sorted.rbegin(), sorted.rend());
    if (!std::is_sorted(d.rbegin(), d.rend())) continue;
    int sum = 0;
    for (int x : d) sum += x;
    if (sum % 2) continue;
    EXPECT_EQ(!erdos_gallai_violation(DegreeSequence(d)).has_value(), realized.count(sorted) == 1);
  }
}

TEST(Graph6, KnownEncodings) {
  EXPECT_EQ(graph6_encode(graphs::complete(3)), "Bw");
  EXPECT_EQ(graph6_encode(graphs::complete(4)), "C~");
  EXPECT_EQ(graph6_encode(Graph(0)), "?");
  EXPECT_EQ(graph6_encode(graphs::petersen()), "IheA@GUAo");
  EXPECT_EQ(graph6_decode("C~"), graphs::complete(4));
  EXPECT_EQ(graph6_decode(">>graph6<<Bw\n"), graphs::complete(3));
}

TEST(Graph6, RoundTripRandomGraphs) {
  std::mt19937_64 rng(4);
  for (int n = 0; n <= 60; ++n) {
    for (double p : {0.1, 0.5, 0.9}) {
      const Graph g = oracle::random_graph(n, p, rng);
      EXPECT_EQ(graph6_decode(graph6_encode(g)), g) << "n=" << n;
    }
  }
  const Graph big = oracle::random_graph(200, 0.2, rng);
  EXPECT_EQ(graph6_encode(big).substr(0, 4), std::string("~") + char(63 + 0) + char(63 + 3) + char(63 + 8));
  EXPECT_EQ(graph6_decode(graph6_encode(big)), big);
}

TEST(Graph6, MalformedInput) {
  EXPECT_THROW(graph6_decode(""), parse_error);
  EXPECT_THROW(graph6_decode("C~~"), parse_error);  // too long
  EXPECT_THROW(graph6_decode("C"), parse_error);    // too short
  EXPECT_THROW(graph6_decode("B "), parse_error);   // byte below 63
  EXPECT_THROW(graph6_decode("Bx"), parse_error);   // nonzero padding
  try {
    graph6_decode("Dz?!?");
    FAIL();
  } catch (const parse_error& e) {
    EXPECT_EQ(e.offset(), 3U);
  }
}

TEST(Canonical, InvariantUnderRelabeling) {
  std::mt19937_64 rng(5);
  std::vector<Graph> tests{graphs::petersen(), graphs::cycle(9), build({ConstructionKind::Hk, 0, 6}),
                           build({ConstructionKind::EvenExtremal, 12, 4}), graphs::clique_packing(3, 4, 13)};
  for (int i = 0; i < 6; ++i) tests.push_back(oracle::random_graph(6 + 3 * i, 0.35, rng));
  for (const Graph& g : tests) {
    const std::string c = canonical_form(g);
    for (int t = 0; t < 100; ++t) {
      const auto perm = oracle::random_permutation(g.order(), rng);
      ASSERT_EQ(canonical_form(relabel(g, perm)), c);
    }
  }
}

TEST(Canonical, SeparatesNonIsomorphic) {
  EXPECT_NE(canonical_form(graphs::path(4)), canonical_form(graphs::star(3)));
  const Graph c5a = graphs::cycle(5);
  const Graph c5b = Graph::from_edges(5, {{0, 2}, {2, 4}, {4, 1}, {1, 3}, {3, 0}});
  EXPECT_EQ(canonical_form(c5a), canonical_form(c5b));
}

TEST(Canonical, AgreesWithPermutationOracle) {
  // Two graphs share a canonical form iff the n! oracle says they are isomorphic.
  for (int n = 1; n <= 6; ++n) {
    std::map<std::string, std::string> ours_to_oracle;
    std::set<std::string> oracle_classes;
    oracle::for_each_labeled_graph(n, [&](const Graph& g) {
      const std::string ours = canonical_form(g);
      const std::string theirs = oracle::canonical(g);
      oracle_classes.insert(theirs);
      auto [it, inserted] = ours_to_oracle.emplace(ours, theirs);
      if (!inserted) ASSERT_EQ(it->second, theirs);
    });
    EXPECT_EQ(ours_to_oracle.size(), oracle_classes.size()) << "n=" << n;
  }
}

TEST(Canonical, ElevenGraphsOnFourVertices) {
  std::set<std::string> forms;
  oracle::for_each_labeled_graph(4, [&](const Graph& g) { forms.insert(canonical_form(g)); });
  EXPECT_EQ(forms.size(), 11U);
}

TEST(Canonical, OrbitsOfSmallGraphs) {
  const Graph p4 = graphs::path(4);
  EXPECT_TRUE(same_orbit(p4, 0, 3));
  EXPECT_TRUE(same_orbit(p4, 1, 2));
  EXPECT_FALSE(same_orbit(p4, 0, 1));
  const Graph pet = graphs::petersen();
  for (int v = 1; v < 10; ++v) EXPECT_TRUE(same_orbit(pet, 0, v));
  const Graph hk = build({ConstructionKind::Hk, 0, 4});
  int low = 0;  // the unique vertex of degree k-2 is alone in its orbit
  while (hk.degree(low) != 2) ++low;
  for (int v = 0; v < hk.order(); ++v)
    if (v != low) EXPECT_FALSE(same_orbit(hk, low, v));
}

TEST(Canonical, AutomorphismsAreValid) {
  std::mt19937_64 rng(6);
  std::vector<Graph> tests{graphs::petersen(), graphs::cycle(8), build({ConstructionKind::OddExtremal, 11, 3})};
  for (int i = 0; i < 10; ++i) tests.push_back(oracle::random_graph(10, 0.5, rng));
  for (const Graph& g : tests) {
    const CanonicalLabeling cl = canonical_labeling(g);
    for (const auto& gamma : cl.automorphisms) EXPECT_EQ(relabel(g, gamma), g);
    std::vector<int> perm(static_cast<std::size_t>(g.order()));
    for (int i = 0; i < g.order(); ++i) perm[cl.lab[i]] = i;
    EXPECT_EQ(relabel(g, perm), cl.graph);
  }
}
