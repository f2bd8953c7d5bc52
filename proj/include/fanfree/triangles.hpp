#pragma once

#include <array>
#include <cstdint>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "fanfree/error.hpp"
#include "fanfree/graph.hpp"

namespace fanfree {

/// Vertex triple with a < b < c.
using Triple = std::array<int, 3>;

inline Triple make_triple(int a, int b, int c) {
  Triple t{a, b, c};
  std::sort(t.begin(), t.end());
  return t;
}

/// Triangles of a graph plus the codegree of every vertex pair.
class TriangleTable {
public:
  TriangleTable() = default;

  explicit TriangleTable(const Graph& g)
      : n_(g.order()), codegree_(static_cast<std::size_t>(n_) * n_, 0) {
    for (int u = 0; u < n_; ++u) {
      const VertexSet& nu = g.neighbors(u);
      for (int v = nu.next(u + 1); v >= 0; v = nu.next(v + 1)) {
        const VertexSet common = nu & g.neighbors(v);
        const int c = common.count();
        codegree_[idx(u, v)] = codegree_[idx(v, u)] = c;
        for (int w = common.next(v + 1); w >= 0; w = common.next(w + 1))
          triangles_.push_back({u, v, w});
      }
    }
  }

  std::int64_t triangle_count() const { return static_cast<std::int64_t>(triangles_.size()); }
  /// Lexicographic by (u, v, w).
  const std::vector<Triple>& triangles() const { return triangles_; }
  /// |N(u) ∩ N(v)| for an edge uv (0 for non-edges).
  int codegree(int u, int v) const { return codegree_[idx(u, v)]; }
  int order() const { return n_; }

private:
  std::size_t idx(int u, int v) const {
    return static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(v);
  }

  int n_ = 0;
  std::vector<Triple> triangles_;
  std::vector<std::uint16_t> codegree_;
};

inline TriangleTable count_triangles(const Graph& g) { return TriangleTable(g); }

/// Number of triangles through edge uv. Throws if uv is not an edge.
inline int codegree(const Graph& g, int u, int v) {
  if (u < 0 || v < 0 || u >= g.order() || v >= g.order())
    throw input_error("codegree: vertex out of range");
  if (!g.adjacent(u, v))
    throw input_error("codegree: " + std::to_string(u) + "-" + std::to_string(v) + " is not an edge");
  return g.neighbors(u).intersection_count(g.neighbors(v));
}

/// Triangle count without materializing the table.
inline std::int64_t triangle_count(const Graph& g) {
  std::int64_t t = 0;
  for (int u = 0; u < g.order(); ++u) {
    const VertexSet& nu = g.neighbors(u);
    for (int v = nu.next(u + 1); v >= 0; v = nu.next(v + 1)) {
      VertexSet common = nu & g.neighbors(v);
      for (int w = common.next(v + 1); w >= 0; w = common.next(w + 1)) ++t;
    }
  }
  return t;
}

// ---------------------------------------------------------------------------
// 3-uniform hypergraphs

/// Set of distinct 3-subsets of [0, n).
class TripleSystem {
public:
  TripleSystem() = default;
  explicit TripleSystem(int n) : n_(n) {
    if (n < 0 || n > kMaxVertices) throw capacity_error("triple system order out of range");
  }

  /// Returns false when the triple was already present.
  bool insert(int a, int b, int c) {
    if (a == b || b == c || a == c) throw input_error("triple has repeated vertex");
    for (int x : {a, b, c})
      if (x < 0 || x >= n_)
        throw input_error("triple vertex " + std::to_string(x) + " out of range");
    return triples_.insert(make_triple(a, b, c)).second;
  }

  int order() const { return n_; }
  std::size_t size() const { return triples_.size(); }
  const std::set<Triple>& triples() const { return triples_; }

  /// Graph on [0,n) with an edge {a,b} for every triple {v,a,b}.
  Graph link(int v) const {
    GraphBuilder b(n_);
    for (const Triple& t : triples_) {
      if (t[0] == v) b.add_edge(t[1], t[2]);
      else if (t[1] == v) b.add_edge(t[0], t[2]);
      else if (t[2] == v) b.add_edge(t[0], t[1]);
    }
    return std::move(b).build();
  }

  friend bool operator==(const TripleSystem&, const TripleSystem&) = default;

private:
  int n_ = 0;
  std::set<Triple> triples_;
};

/// Hypergraph whose hyperedges are the triangles of g.
inline TripleSystem lift(const Graph& g) {
  TripleSystem ts(g.order());
  const TriangleTable table(g);
  for (const Triple& t : table.triangles()) ts.insert(t[0], t[1], t[2]);
  return ts;
}

/// One "u v w" line per triple, sorted.
inline void write_triples(std::ostream& os, const TripleSystem& ts) {
  for (const Triple& t : ts.triples()) os << t[0] << ' ' << t[1] << ' ' << t[2] << '\n';
}

/// Reads the line-per-triple format. When n < 0 the order is max vertex + 1.
inline TripleSystem read_triples(std::istream& is, int n = -1) {
  std::vector<Triple> raw;
  std::string line;
  std::size_t lineno = 0;
  int maxv = -1;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream ls(line);
    int a, b, c;
    std::string extra;
    if (!(ls >> a >> b >> c) || (ls >> extra))
      throw parse_error("triples: expected three integers", lineno);
    if (a < 0 || b < 0 || c < 0) throw parse_error("triples: negative vertex", lineno);
    raw.push_back({a, b, c});
    maxv = std::max({maxv, a, b, c});
  }
  TripleSystem ts(n < 0 ? maxv + 1 : n);
  for (const Triple& t : raw) ts.insert(t[0], t[1], t[2]);
  return ts;
}

// ---------------------------------------------------------------------------
// Counting identities

struct GoodmanCheck {
  std::int64_t lhs = 0;
  std::int64_t rhs = 0;
  bool holds = false;
};

/// N(K3,G) + N(K3,complement) + 1/2 sum_v d(v)(n-1-d(v))  versus  C(n,3).
inline GoodmanCheck goodman_check(const Graph& g) {
  const std::int64_t n = g.order();
  std::int64_t mixed = 0;
  for (int v = 0; v < g.order(); ++v) {
    const std::int64_t d = g.degree(v);
    mixed += d * (n - 1 - d);
  }
  GoodmanCheck r;
  r.lhs = triangle_count(g) + triangle_count(complement(g)) + mixed / 2;
  r.rhs = n * (n - 1) * (n - 2) / 6;
  r.holds = (mixed % 2 == 0) && r.lhs == r.rhs;
  return r;
}

/// Number of vertex triples spanning exactly two edges.
inline std::int64_t cherry_count(const Graph& g) {
  std::int64_t twice = 0;
  for (int x = 0; x < g.order(); ++x) {
    const VertexSet& nx = g.neighbors(x);
    for (int y : nx) twice += (nx - g.neighbors(y)).count() - 1;  // minus y itself
  }
  return twice / 2;
}

}  // namespace fanfree
