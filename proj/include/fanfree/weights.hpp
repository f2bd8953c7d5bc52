#pragma once

// Triangle weight distribution for F_k-free graphs.
//
// Every edge uv is classified by its codegree d = |N(u) ∩ N(v)|:
//   Heavy   d >= 2k-1
//   Medium  k <= d <= 2k-2
//   Light   d <= k-1   (d = 0 is labeled Light and flagged; such edges lie in
//                       no triangle and never carry weight)
//
// Each triangle T spreads total weight 1 over its vertices. The weight a
// vertex receives is determined by the class of the edge opposite it, and
// the rule depends only on the multiset of the three edge classes:
//
//   classes      Basic                       Variant (differs only here)
//   no H or no L 1/3 each                    {M,L,L}: 1/2 opp. M, 1/4 opp. each L
//                                            {M,M,L}: 3/8 opp. each M, 1/4 opp. L
//   {H,L,L}      1 opp. H, 0 to the others
//   {H,H,L}      0 opp. L, 1/2 to the others
//   {H,M,L}      0 opp. L, 1/2 to the others
//
// f(u) is the total weight u receives and loss(u) = k(k-3/2) - f(u).

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fanfree/error.hpp"
#include "fanfree/graph.hpp"
#include "fanfree/matching.hpp"
#include "fanfree/rational.hpp"
#include "fanfree/triangles.hpp"

namespace fanfree {

enum class EdgeClass : std::uint8_t { Light, Medium, Heavy };

inline char to_char(EdgeClass c) {
  switch (c) {
    case EdgeClass::Light: return 'L';
    case EdgeClass::Medium: return 'M';
    case EdgeClass::Heavy: return 'H';
  }
  return '?';
}

enum class WeightScheme { Basic, Variant };

inline std::string_view to_string(WeightScheme s) {
  return s == WeightScheme::Basic ? "basic" : "variant";
}

class EdgeClassification {
public:
  EdgeClassification(const Graph& g, int k) : k_(k), n_(g.order()), table_(g) {
    if (k < 2) throw input_error("classify_edges: k must be >= 2, got " + std::to_string(k));
    cls_.assign(static_cast<std::size_t>(n_) * n_, EdgeClass::Light);
    heavy_.resize(static_cast<std::size_t>(n_));
    medium_.resize(static_cast<std::size_t>(n_));
    light_.resize(static_cast<std::size_t>(n_));
    for (const Edge& e : g.edges()) {
      edges_.push_back(e);
      const int d = table_.codegree(e.u, e.v);
      EdgeClass c = EdgeClass::Light;
      if (d >= 2 * k - 1) c = EdgeClass::Heavy;
      else if (d >= k) c = EdgeClass::Medium;
      if (d == 0) zero_codegree_.push_back(e);
      cls_[idx(e.u, e.v)] = cls_[idx(e.v, e.u)] = c;
      auto& bucket = c == EdgeClass::Heavy ? heavy_ : c == EdgeClass::Medium ? medium_ : light_;
      bucket[e.u].set(e.v);
      bucket[e.v].set(e.u);
    }
  }

  int k() const { return k_; }
  /// Class of edge uv; meaningless for non-edges.
  EdgeClass of(int u, int v) const { return cls_[idx(u, v)]; }
  const std::vector<Edge>& edges() const { return edges_; }
  /// Edges labeled Light only by convention (codegree 0).
  const std::vector<Edge>& zero_codegree() const { return zero_codegree_; }
  const TriangleTable& triangles() const { return table_; }

  const VertexSet& heavy(int u) const { return heavy_[u]; }
  const VertexSet& medium(int u) const { return medium_[u]; }
  const VertexSet& light(int u) const { return light_[u]; }

private:
  std::size_t idx(int u, int v) const {
    return static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(v);
  }

  int k_;
  int n_;
  TriangleTable table_;
  std::vector<EdgeClass> cls_;
  std::vector<Edge> edges_;
  std::vector<Edge> zero_codegree_;
  std::vector<VertexSet> heavy_, medium_, light_;
};

inline EdgeClassification classify_edges(const Graph& g, int k) { return EdgeClassification(g, k); }

/// Weights received by the three vertices of a triangle, given the class of
/// the edge opposite each vertex.
inline std::array<Rational, 3> triangle_weights(const std::array<EdgeClass, 3>& opposite,
                                                WeightScheme scheme) {
  int heavy = 0, medium = 0, light = 0;
  for (EdgeClass c : opposite) {
    heavy += c == EdgeClass::Heavy;
    medium += c == EdgeClass::Medium;
    light += c == EdgeClass::Light;
  }
  std::array<Rational, 3> w;
  if (heavy == 0 || light == 0) {
    if (scheme == WeightScheme::Variant && heavy == 0 && medium == 1 && light == 2) {
      for (int i = 0; i < 3; ++i)
        w[i] = opposite[i] == EdgeClass::Medium ? Rational(1, 2) : Rational(1, 4);
    } else if (scheme == WeightScheme::Variant && heavy == 0 && medium == 2 && light == 1) {
      for (int i = 0; i < 3; ++i)
        w[i] = opposite[i] == EdgeClass::Medium ? Rational(3, 8) : Rational(1, 4);
    } else {
      w.fill(Rational(1, 3));
    }
  } else if (heavy == 1 && light == 2) {
    for (int i = 0; i < 3; ++i) w[i] = opposite[i] == EdgeClass::Heavy ? Rational(1) : Rational(0);
  } else {
    for (int i = 0; i < 3; ++i) w[i] = opposite[i] == EdgeClass::Light ? Rational(0) : Rational(1, 2);
  }
  return w;
}

class WeightLedger {
public:
  WeightLedger(const EdgeClassification& cls, WeightScheme scheme)
      : scheme_(scheme), k_(cls.k()), triangles_(cls.triangles().triangles()) {
    const int n = cls.triangles().order();
    f_.assign(static_cast<std::size_t>(n), Rational(0));
    weights_.reserve(triangles_.size());
    for (const Triple& t : triangles_) {
      const auto w = triangle_weights(
          {cls.of(t[1], t[2]), cls.of(t[0], t[2]), cls.of(t[0], t[1])}, scheme);
      for (int i = 0; i < 3; ++i) f_[t[i]] += w[i];
      weights_.push_back(w);
    }
    const Rational target = tight_value(k_);
    loss_.reserve(f_.size());
    for (const Rational& f : f_) loss_.push_back(target - f);
  }

  /// k(k - 3/2), the largest possible f on an F_k-free graph (k even >= 4).
  static Rational tight_value(int k) { return Rational(k) * (Rational(k) - Rational(3, 2)); }

  WeightScheme scheme() const { return scheme_; }
  int k() const { return k_; }
  const std::vector<Triple>& triangles() const { return triangles_; }
  /// weights()[i][j] is what triangles()[i][j] receives from that triangle.
  const std::vector<std::array<Rational, 3>>& weights() const { return weights_; }
  const std::vector<Rational>& f() const { return f_; }
  const std::vector<Rational>& loss() const { return loss_; }

  /// Weight vertex x receives from triangle {a,b,c}, or nullopt if not a triangle.
  std::optional<Rational> weight(const Triple& t, int x) const {
    const Triple key = make_triple(t[0], t[1], t[2]);
    auto it = std::lower_bound(triangles_.begin(), triangles_.end(), key);
    if (it == triangles_.end() || *it != key) return std::nullopt;
    const auto& w = weights_[static_cast<std::size_t>(it - triangles_.begin())];
    for (int i = 0; i < 3; ++i)
      if (key[i] == x) return w[i];
    return std::nullopt;
  }

  Rational total() const {
    Rational s(0);
    for (const Rational& f : f_) s += f;
    return s;
  }

private:
  WeightScheme scheme_;
  int k_;
  std::vector<Triple> triangles_;
  std::vector<std::array<Rational, 3>> weights_;
  std::vector<Rational> f_;
  std::vector<Rational> loss_;
};

inline WeightLedger weigh(const Graph& g, int k, WeightScheme scheme) {
  return WeightLedger(classify_edges(g, k), scheme);
}

/// Total weight u receives from the triangles through edge uv.
inline Rational edge_weight_sum(const WeightLedger& ledger, const Graph& g, int u, int v) {
  if (u < 0 || v < 0 || u >= g.order() || v >= g.order() || !g.adjacent(u, v))
    throw input_error("edge_weight_sum: " + std::to_string(u) + "-" + std::to_string(v) +
                      " is not an edge");
  Rational s(0);
  for (int x : g.neighbors(u) & g.neighbors(v)) s += *ledger.weight({u, v, x}, u);
  return s;
}

// ---------------------------------------------------------------------------
// Structure of tight vertices

struct TightVertexProfile {
  int vertex = -1;
  /// Tutte–Berge minimizer inside N(vertex), smallest size first.
  VertexSet x;
  /// Components of G[N(vertex) - X], largest first (ties by smallest vertex).
  std::vector<VertexSet> components;
  /// Degrees inside the largest component.
  DegreeSequence big_component_degseq;
  bool all_inner_heavy = false;
  bool all_spokes_light = false;
  /// X is independent and each x in X has exactly k-1 neighbors in N(vertex).
  bool x_condition = false;
  /// Largest component has degrees (k-1,...,k-1,k-2) and the neighborhood is
  /// either C ∪ K_{k-1} with |C| = k+1, or C plus isolated vertices with
  /// |C| = 2k-1-2|X| >= k+1.
  bool component_condition = false;
  /// Inner edges heavy, spokes light, max inner degree k-1.
  bool edge_condition = false;

  bool passed() const { return x_condition && component_condition && edge_condition; }
};

namespace detail {

inline bool is_clique(const Graph& g, const VertexSet& s) {
  for (int v : s)
    if ((s - g.neighbors(v)).count() != 1) return false;  // only v itself
  return true;
}

}  // namespace detail

inline constexpr int kMaxTightNeighborhood = kMaxExactTutteBerge;

/// Recomputes the structure of a vertex with f(v) = k(k-3/2) from scratch.
/// Requires k even >= 4, g F_k-free and v tight under the basic weights.
inline TightVertexProfile tight_vertex_profile(const Graph& g, int k, int v,
                                               const EdgeClassification* cls_hint = nullptr,
                                               const WeightLedger* ledger_hint = nullptr) {
  if (k < 4 || k % 2 != 0)
    throw precondition_error("tight_vertex_profile: k must be even and >= 4, got " +
                             std::to_string(k));
  if (v < 0 || v >= g.order()) throw input_error("tight_vertex_profile: vertex out of range");
  std::optional<EdgeClassification> own_cls;
  if (!cls_hint) {
    if (auto w = contains_fan(g, k))
      throw precondition_error("tight_vertex_profile: graph contains F_" + std::to_string(k) +
                               " centered at " + std::to_string(w->center));
    own_cls.emplace(g, k);
    cls_hint = &*own_cls;
  }
  std::optional<WeightLedger> own_ledger;
  if (!ledger_hint) {
    own_ledger.emplace(*cls_hint, WeightScheme::Basic);
    ledger_hint = &*own_ledger;
  }
  if (ledger_hint->f()[v] != WeightLedger::tight_value(k))
    throw precondition_error("tight_vertex_profile: f(" + std::to_string(v) + ")=" +
                             to_fraction_string(ledger_hint->f()[v]) + " is not k(k-3/2)");
  const VertexSet nbhd = g.neighbors(v);
  if (nbhd.count() > kMaxTightNeighborhood)
    throw capacity_error("tight_vertex_profile: |N(v)|=" + std::to_string(nbhd.count()) +
                         " exceeds exact-search limit " + std::to_string(kMaxTightNeighborhood));

  TightVertexProfile p;
  p.vertex = v;
  std::vector<int> index(nbhd.begin(), nbhd.end());
  const VertexSet local_x = tutte_berge_minimizer(induced(g, nbhd));
  for (int i : local_x) p.x.set(index[i]);

  p.components = components(g, nbhd - p.x);
  std::stable_sort(p.components.begin(), p.components.end(),
                   [](const VertexSet& a, const VertexSet& b) { return a.count() > b.count(); });

  // (i)
  p.x_condition = true;
  for (int a : p.x) {
    if ((g.neighbors(a) & p.x).any()) p.x_condition = false;
    if ((g.neighbors(a) & nbhd).count() != k - 1) p.x_condition = false;
  }

  // (ii)
  if (!p.components.empty()) {
    const VertexSet& c1 = p.components.front();
    std::vector<int> deg;
    for (int a : c1) deg.push_back((g.neighbors(a) & c1).count());
    p.big_component_degseq = DegreeSequence(deg);
    const int size = c1.count();
    std::vector<int> want(static_cast<std::size_t>(size), k - 1);
    if (size > 0) want.back() = k - 2;
    const bool degrees_ok = size >= 1 && p.big_component_degseq.degrees() == want;
    const bool clique_case = p.x.none() && p.components.size() == 2 && size == k + 1 &&
                             p.components[1].count() == k - 1 &&
                             detail::is_clique(g, p.components[1]);
    bool singleton_case = size == 2 * k - 1 - 2 * p.x.count() && size >= k + 1;
    for (std::size_t i = 1; i < p.components.size(); ++i)
      singleton_case = singleton_case && p.components[i].count() == 1;
    p.component_condition = degrees_ok && (clique_case || singleton_case);
  }

  // (iii)
  p.all_inner_heavy = true;
  p.all_spokes_light = true;
  int max_inner = 0;
  for (int a : nbhd) {
    if (cls_hint->of(v, a) != EdgeClass::Light) p.all_spokes_light = false;
    const VertexSet inner = g.neighbors(a) & nbhd;
    max_inner = std::max(max_inner, inner.count());
    for (int b : inner)
      if (cls_hint->of(a, b) != EdgeClass::Heavy) p.all_inner_heavy = false;
  }
  p.edge_condition = p.all_inner_heavy && p.all_spokes_light && max_inner == k - 1;
  return p;
}

// ---------------------------------------------------------------------------
// Executable bounds

struct LemmaViolation {
  /// heavy_degree | heavy_medium_budget | edge_sum_basic | edge_sum_variant |
  /// vertex_weight_bound | tight_structure
  std::string check;
  int u = -1;
  int v = -1;
  std::string detail;
};

struct LemmaReport {
  int k = 0;
  std::int64_t checks = 0;
  std::vector<LemmaViolation> violations;
  /// Vertices with f = k(k-3/2) (k even >= 4 only).
  int tight_vertices = 0;
  /// Tight vertices whose neighborhood exceeded the exact-search limit.
  int unchecked_tight = 0;
  Rational max_f;
  bool vertex_bounds_applicable = false;

  bool passed() const { return violations.empty(); }
};

/// Evaluates every per-vertex and per-edge bound that holds on F_k-free
/// graphs and returns all violations (expected: none).
///
/// - |H(u)| <= k-1, with |H(u)| = k-1 forcing M(u) empty
/// - |H(u)| + |M(u)|/2 <= k - 1/2
/// - for each ordered edge (u,v): weight u receives from triangles on uv is
///   <= k-1 under both schemes; for the basic scheme and k >= 3 it is either
///   <= k-3/2 or exactly k-1 with uv light, codegree k-1, and every vx heavy
///   and ux light
/// - k even >= 4: f(u) <= k(k-3/2) - 1/2 unless f(u) = k(k-3/2), in which case
///   the tight-vertex structure holds
inline LemmaReport lemma_suite(const Graph& g, int k) {
  if (k < 2) throw input_error("lemma_suite: k must be >= 2");
  if (auto w = contains_fan(g, k))
    throw precondition_error("lemma_suite: graph contains F_" + std::to_string(k) +
                             " centered at " + std::to_string(w->center));
  const EdgeClassification cls(g, k);
  const WeightLedger basic(cls, WeightScheme::Basic);
  const WeightLedger variant(cls, WeightScheme::Variant);
  const TriangleTable& tri = cls.triangles();

  LemmaReport rep;
  rep.k = k;
  auto fail = [&](std::string check, int u, int v, std::string detail) {
    rep.violations.push_back({std::move(check), u, v, std::move(detail)});
  };

  const Rational km1(k - 1);
  for (int u = 0; u < g.order(); ++u) {
    const int h = cls.heavy(u).count();
    const int m = cls.medium(u).count();
    ++rep.checks;
    if (h > k - 1) fail("heavy_degree", u, -1, "|H(u)|=" + std::to_string(h));
    if (h == k - 1 && m > 0)
      fail("heavy_degree", u, -1, "|H(u)|=k-1 but |M(u)|=" + std::to_string(m));
    ++rep.checks;
    if (Rational(h) + Rational(m, 2) > Rational(k) - Rational(1, 2))
      fail("heavy_medium_budget", u, -1,
           "|H|+|M|/2=" + to_fraction_string(Rational(h) + Rational(m, 2)));
  }

  for (const Edge& e : cls.edges()) {
    for (auto [u, v] : {std::pair{e.u, e.v}, std::pair{e.v, e.u}}) {
      const Rational sb = edge_weight_sum(basic, g, u, v);
      ++rep.checks;
      if (sb > km1) {
        fail("edge_sum_basic", u, v, "sum=" + to_fraction_string(sb));
      } else if (k >= 3 && sb > km1 - Rational(1, 2)) {
        bool characterized = sb == km1 && cls.of(u, v) == EdgeClass::Light &&
                             tri.codegree(u, v) == k - 1;
        for (int x : g.neighbors(u) & g.neighbors(v))
          characterized = characterized && cls.of(v, x) == EdgeClass::Heavy &&
                          cls.of(u, x) == EdgeClass::Light;
        if (!characterized)
          fail("edge_sum_basic", u, v,
               "sum=" + to_fraction_string(sb) + " above k-3/2 without the equality structure");
      }
      const Rational sv = edge_weight_sum(variant, g, u, v);
      ++rep.checks;
      if (sv > km1) fail("edge_sum_variant", u, v, "sum=" + to_fraction_string(sv));
    }
  }

  rep.max_f = Rational(0);
  for (const Rational& f : basic.f()) rep.max_f = std::max(rep.max_f, f);

  rep.vertex_bounds_applicable = k >= 4 && k % 2 == 0;
  if (rep.vertex_bounds_applicable) {
    const Rational tight = WeightLedger::tight_value(k);
    for (int u = 0; u < g.order(); ++u) {
      const Rational& f = basic.f()[u];
      ++rep.checks;
      if (f > tight) {
        fail("vertex_weight_bound", u, -1, "f=" + to_fraction_string(f));
      } else if (f == tight) {
        ++rep.tight_vertices;
        if (g.degree(u) > kMaxTightNeighborhood) {
          ++rep.unchecked_tight;
          continue;
        }
        const TightVertexProfile p = tight_vertex_profile(g, k, u, &cls, &basic);
        ++rep.checks;
        if (!p.passed())
          fail("tight_structure", u, -1,
               std::string("x:") + (p.x_condition ? "ok" : "fail") +
                   " components:" + (p.component_condition ? "ok" : "fail") +
                   " edges:" + (p.edge_condition ? "ok" : "fail"));
      } else if (f > tight - Rational(1, 2)) {
        fail("vertex_weight_bound", u, -1,
             "f=" + to_fraction_string(f) + " strictly between k(k-3/2)-1/2 and k(k-3/2)");
      }
    }
  }
  return rep;
}

}  // namespace fanfree
