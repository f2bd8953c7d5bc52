#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "fanfree/error.hpp"
#include "fanfree/vertex_set.hpp"

namespace fanfree {

/// Unordered vertex pair, normalized so that u < v.
struct Edge {
  int u = 0;
  int v = 0;

  constexpr Edge() = default;
  constexpr Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}

  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

class GraphBuilder;

/// Dense simple undirected graph on vertices 0..n-1 with bitset rows.
///
/// Values are immutable once built; use GraphBuilder to mutate.
class Graph {
public:
  Graph() = default;

  /// Edgeless graph on n vertices.
  explicit Graph(int n) : n_(n) {
    if (n < 0) throw input_error("negative vertex count");
    if (n > kMaxVertices)
      throw capacity_error("graph order " + std::to_string(n) + " exceeds " +
                           std::to_string(kMaxVertices));
    adj_.resize(static_cast<std::size_t>(n));
  }

  /// Duplicate pairs collapse to one edge.
  static Graph from_edges(int n, std::span<const std::pair<int, int>> edges);
  static Graph from_edges(int n, std::initializer_list<std::pair<int, int>> edges) {
    return from_edges(n, std::span<const std::pair<int, int>>(edges.begin(), edges.size()));
  }

  int order() const { return n_; }
  std::int64_t size() const {
    std::int64_t s = 0;
    for (const auto& row : adj_) s += row.count();
    return s / 2;
  }

  const VertexSet& neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
  bool adjacent(int u, int v) const { return neighbors(u).test(v); }
  int degree(int v) const { return neighbors(v).count(); }
  VertexSet vertices() const { return VertexSet::range(n_); }

  /// All edges in lexicographic order.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (int u = 0; u < n_; ++u)
      for (int v = neighbors(u).next(u + 1); v >= 0; v = neighbors(u).next(v + 1))
        out.emplace_back(u, v);
    return out;
  }

  friend bool operator==(const Graph&, const Graph&) = default;

private:
  friend class GraphBuilder;

  int n_ = 0;
  std::vector<VertexSet> adj_;
};

/// Mutable staging area for a Graph.
class GraphBuilder {
public:
  explicit GraphBuilder(int n) : g_(n) {}
  explicit GraphBuilder(Graph g) : g_(std::move(g)) {}

  int order() const { return g_.n_; }

  void add_edge(int u, int v) {
    check(u, v);
    g_.adj_[u].set(v);
    g_.adj_[v].set(u);
  }
  void remove_edge(int u, int v) {
    check(u, v);
    g_.adj_[u].reset(v);
    g_.adj_[v].reset(u);
  }
  bool adjacent(int u, int v) const { return g_.adjacent(u, v); }

  /// Read-only view of the current state.
  const Graph& view() const { return g_; }
  Graph build() && { return std::move(g_); }
  Graph build() const& { return g_; }

private:
  void check(int u, int v) const {
    if (u < 0 || v < 0 || u >= g_.n_ || v >= g_.n_)
      throw input_error("edge endpoint out of range: (" + std::to_string(u) + "," +
                        std::to_string(v) + ") with n=" + std::to_string(g_.n_));
    if (u == v) throw input_error("self-loop at vertex " + std::to_string(u));
  }

  Graph g_;
};

inline Graph Graph::from_edges(int n, std::span<const std::pair<int, int>> edges) {
  GraphBuilder b(n);
  for (auto [u, v] : edges) b.add_edge(u, v);
  return std::move(b).build();
}

inline Graph complement(const Graph& g) {
  const int n = g.order();
  GraphBuilder b(n);
  const VertexSet all = g.vertices();
  for (int u = 0; u < n; ++u) {
    VertexSet row = all - g.neighbors(u);
    row.reset(u);
    for (int v : row)
      if (v > u) b.add_edge(u, v);
  }
  return std::move(b).build();
}

/// Vertices of g1 keep their labels; g2's are shifted by g1.order().
inline Graph disjoint_union(const Graph& g1, const Graph& g2) {
  const int n1 = g1.order();
  GraphBuilder b(n1 + g2.order());
  for (const Edge& e : g1.edges()) b.add_edge(e.u, e.v);
  for (const Edge& e : g2.edges()) b.add_edge(n1 + e.u, n1 + e.v);
  return std::move(b).build();
}

/// Disjoint union plus every edge between the two sides.
inline Graph join(const Graph& g1, const Graph& g2) {
  const int n1 = g1.order();
  const int n2 = g2.order();
  GraphBuilder b(disjoint_union(g1, g2));
  for (int u = 0; u < n1; ++u)
    for (int v = 0; v < n2; ++v) b.add_edge(u, n1 + v);
  return std::move(b).build();
}

/// Subgraph induced on `s`, relabeled by increasing original index.
inline Graph induced(const Graph& g, const VertexSet& s) {
  if (!s.is_subset_of(g.vertices()))
    throw input_error("induced: vertex set not contained in [0," + std::to_string(g.order()) + ")");
  std::vector<int> index;
  for (int v : s) index.push_back(v);
  const int m = static_cast<int>(index.size());
  GraphBuilder b(m);
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (g.adjacent(index[i], index[j])) b.add_edge(i, j);
  return std::move(b).build();
}

inline Graph induced(const Graph& g, std::span<const int> vertices) {
  VertexSet s;
  for (int v : vertices) {
    if (v < 0 || v >= g.order())
      throw input_error("induced: vertex " + std::to_string(v) + " out of range");
    s.set(v);
  }
  return induced(g, s);
}

/// Relabel so that vertex v of g becomes perm[v].
inline Graph relabel(const Graph& g, std::span<const int> perm) {
  GraphBuilder b(g.order());
  for (const Edge& e : g.edges()) b.add_edge(perm[e.u], perm[e.v]);
  return std::move(b).build();
}

// ---------------------------------------------------------------------------
// Degree sequences

/// Multiset of vertex degrees, stored sorted non-increasing.
class DegreeSequence {
public:
  DegreeSequence() = default;

  explicit DegreeSequence(std::vector<int> degrees) : degrees_(std::move(degrees)) {
    std::sort(degrees_.begin(), degrees_.end(), std::greater<>());
    const int n = static_cast<int>(degrees_.size());
    long sum = 0;
    for (int d : degrees_) {
      if (d < 0) throw input_error("negative degree " + std::to_string(d));
      if (d > n - 1)
        throw input_error("degree " + std::to_string(d) + " exceeds n-1=" + std::to_string(n - 1));
      sum += d;
    }
    if (sum % 2 != 0) throw input_error("degree sum " + std::to_string(sum) + " is odd");
  }

  const std::vector<int>& degrees() const { return degrees_; }
  int size() const { return static_cast<int>(degrees_.size()); }
  int operator[](int i) const { return degrees_[static_cast<std::size_t>(i)]; }

  friend bool operator==(const DegreeSequence&, const DegreeSequence&) = default;

private:
  std::vector<int> degrees_;
};

inline DegreeSequence degree_sequence(const Graph& g) {
  std::vector<int> d(static_cast<std::size_t>(g.order()));
  for (int v = 0; v < g.order(); ++v) d[v] = g.degree(v);
  return DegreeSequence(std::move(d));
}

/// First r (1-based) whose Erdős–Gallai inequality
///   sum_{i<=r} d_i <= r(r-1) + sum_{i>r} min(d_i, r)
/// fails, or nullopt when the sequence is graphical.
inline std::optional<int> erdos_gallai_violation(const DegreeSequence& seq) {
  const auto& d = seq.degrees();
  const int n = seq.size();
  long prefix = 0;
  for (int r = 1; r <= n; ++r) {
    prefix += d[r - 1];
    long tail = 0;
    for (int i = r; i < n; ++i) tail += std::min(d[i], r);
    if (prefix > static_cast<long>(r) * (r - 1) + tail) return r;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Small named graphs

namespace graphs {

inline Graph empty(int n) { return Graph(n); }

inline Graph complete(int n) {
  GraphBuilder b(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) b.add_edge(u, v);
  return std::move(b).build();
}

inline Graph cycle(int n) {
  GraphBuilder b(n);
  for (int i = 0; i < n; ++i) b.add_edge(i, (i + 1) % n);
  return std::move(b).build();
}

/// Path on n vertices (n-1 edges).
inline Graph path(int n) {
  GraphBuilder b(n);
  for (int i = 0; i + 1 < n; ++i) b.add_edge(i, i + 1);
  return std::move(b).build();
}

/// K_{1,leaves}; vertex 0 is the center.
inline Graph star(int leaves) {
  GraphBuilder b(leaves + 1);
  for (int i = 1; i <= leaves; ++i) b.add_edge(0, i);
  return std::move(b).build();
}

inline Graph petersen() {
  GraphBuilder b(10);
  for (int i = 0; i < 5; ++i) {
    b.add_edge(i, (i + 1) % 5);
    b.add_edge(i, i + 5);
    b.add_edge(5 + i, 5 + (i + 2) % 5);
  }
  return std::move(b).build();
}

/// `copies` vertex-disjoint copies of K_m.
inline Graph clique_packing(int copies, int m, int n) {
  if (copies * m > n) throw input_error("clique packing does not fit in n vertices");
  GraphBuilder b(n);
  for (int c = 0; c < copies; ++c)
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j) b.add_edge(c * m + i, c * m + j);
  return std::move(b).build();
}

}  // namespace graphs

}  // namespace fanfree
