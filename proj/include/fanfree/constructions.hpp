#pragma once

// Named extremal graphs and closed-form extremal values.
//
// Vertex order is fixed per construction so graph6 output is reproducible:
// cliques (or the (2k-1)-vertex core) come first, the independent apex set
// last.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "fanfree/error.hpp"
#include "fanfree/graph.hpp"
#include "fanfree/rational.hpp"

namespace fanfree {

enum class ConstructionKind {
  OddExtremal,   ///< empty(n-2k) + 2K_k, k odd
  EvenExtremal,  ///< empty(n-2k+1) + H_k, k even
  Hk,            ///< triangle-maximal graph with degrees (k-1,...,k-1,k-2)
  HkPrime,       ///< triangle-minimal graph with the same degrees
  Gl,            ///< K_{k-1,k-1} minus a matching of size k/2-1, plus a hub on it
  K4Packing,     ///< floor(n/4) disjoint K_4 (+ a triangle when n = 3 mod 4)
};

struct ConstructionSpec {
  ConstructionKind kind = ConstructionKind::OddExtremal;
  /// Ignored (may be 0) for the fixed-size kinds Hk, HkPrime, Gl.
  int n = 0;
  int k = 0;
};

inline std::string_view to_string(ConstructionKind kind) {
  switch (kind) {
    case ConstructionKind::OddExtremal: return "odd";
    case ConstructionKind::EvenExtremal: return "even";
    case ConstructionKind::Hk: return "hk";
    case ConstructionKind::HkPrime: return "hkprime";
    case ConstructionKind::Gl: return "gl";
    case ConstructionKind::K4Packing: return "k4packing";
  }
  return "?";
}

inline std::optional<ConstructionKind> parse_construction_kind(std::string_view s) {
  for (auto kind : {ConstructionKind::OddExtremal, ConstructionKind::EvenExtremal,
                    ConstructionKind::Hk, ConstructionKind::HkPrime, ConstructionKind::Gl,
                    ConstructionKind::K4Packing})
    if (to_string(kind) == s) return kind;
  return std::nullopt;
}

namespace detail {

inline void require_even_k(int k, std::string_view what) {
  if (k < 4 || k % 2 != 0)
    throw input_error(std::string(what) + ": k must be even and >= 4, got " + std::to_string(k));
}

// Two cliques u_1..u_{k-1} (0..k-2) and v_1..v_{k-1} (k-1..2k-3), hub x = 2k-2;
// edges u_i v_i (i <= k/2-1), u_i x (i >= k/2), v_i x (i >= k/2+1).
inline Graph hk_from_cliques(int k) {
  const int m = k - 1;
  GraphBuilder b(2 * k - 1);
  const int x = 2 * k - 2;
  auto u = [](int i) { return i - 1; };
  auto v = [m](int i) { return m + i - 1; };
  for (int i = 1; i <= m; ++i)
    for (int j = i + 1; j <= m; ++j) {
      b.add_edge(u(i), u(j));
      b.add_edge(v(i), v(j));
    }
  for (int i = 1; i <= k / 2 - 1; ++i) b.add_edge(u(i), v(i));
  for (int i = k / 2; i <= m; ++i) b.add_edge(u(i), x);
  for (int i = k / 2 + 1; i <= m; ++i) b.add_edge(v(i), x);
  return std::move(b).build();
}

// K_{k-1,k-1} on X = 0..k-2, Y = k-1..2k-3 with x_i y_i (i <= k/2-1)
// subdivided once and all subdivision vertices identified into z = 2k-2.
inline Graph hk_prime_subdivided(int k) {
  const int m = k - 1;
  const int z = 2 * k - 2;
  GraphBuilder b(2 * k - 1);
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= m; ++j)
      if (!(i == j && i <= k / 2 - 1)) b.add_edge(i - 1, m + j - 1);
  for (int i = 1; i <= k / 2 - 1; ++i) {
    b.add_edge(z, i - 1);
    b.add_edge(z, m + i - 1);
  }
  return std::move(b).build();
}

}  // namespace detail

/// H_k as the complement of H'_k with the edge z y_{k/2} removed (same
/// vertex labels as H'_k). Isomorphic to build({Hk, .., k}).
inline Graph hk_via_complement(int k) {
  detail::require_even_k(k, "H_k");
  GraphBuilder b(complement(detail::hk_prime_subdivided(k)));
  b.remove_edge(2 * k - 2, (k - 1) + (k / 2) - 1);
  return std::move(b).build();
}

inline Graph build(const ConstructionSpec& spec) {
  const int n = spec.n;
  const int k = spec.k;
  auto fixed_size = [&](std::string_view what) {
    detail::require_even_k(k, what);
    if (n != 0 && n != 2 * k - 1)
      throw input_error(std::string(what) + " has exactly 2k-1=" + std::to_string(2 * k - 1) +
                        " vertices, requested n=" + std::to_string(n));
  };
  switch (spec.kind) {
    case ConstructionKind::OddExtremal: {
      if (k < 3 || k % 2 == 0)
        throw input_error("odd extremal: k must be odd and >= 3, got " + std::to_string(k));
      if (n < 2 * k)
        throw input_error("odd extremal: need n >= 2k=" + std::to_string(2 * k) + ", got " +
                          std::to_string(n));
      return join(graphs::clique_packing(2, k, 2 * k), graphs::empty(n - 2 * k));
    }
    case ConstructionKind::EvenExtremal: {
      detail::require_even_k(k, "even extremal");
      if (n < 2 * k - 1)
        throw input_error("even extremal: need n >= 2k-1=" + std::to_string(2 * k - 1) +
                          ", got " + std::to_string(n));
      return join(detail::hk_from_cliques(k), graphs::empty(n - 2 * k + 1));
    }
    case ConstructionKind::Hk:
      fixed_size("H_k");
      return detail::hk_from_cliques(k);
    case ConstructionKind::HkPrime:
      fixed_size("H'_k");
      return detail::hk_prime_subdivided(k);
    case ConstructionKind::Gl: {
      fixed_size("G_l");
      // Missing matching placed on the last k/2-1 index pairs.
      const int m = k - 1;
      const int z = 2 * k - 2;
      GraphBuilder b(2 * k - 1);
      auto missing = [&](int i) { return i > m - (k / 2 - 1); };
      for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= m; ++j)
          if (!(i == j && missing(i))) b.add_edge(i - 1, m + j - 1);
      for (int i = 1; i <= m; ++i)
        if (missing(i)) {
          b.add_edge(z, i - 1);
          b.add_edge(z, m + i - 1);
        }
      return std::move(b).build();
    }
    case ConstructionKind::K4Packing: {
      if (k != 2) throw input_error("K4 packing is the k=2 construction, got k=" + std::to_string(k));
      if (n < 3) throw input_error("K4 packing: need n >= 3");
      GraphBuilder b(graphs::clique_packing(n / 4, 4, n));
      if (n % 4 == 3) {
        const int base = n - 3;
        b.add_edge(base, base + 1);
        b.add_edge(base, base + 2);
        b.add_edge(base + 1, base + 2);
      }
      return std::move(b).build();
    }
  }
  throw input_error("unknown construction kind");
}

// ---------------------------------------------------------------------------
// Closed forms

struct FormulaResult {
  std::int64_t value = 0;
  /// Smallest n for which the value is asserted exact; nullopt means only
  /// "for n sufficiently large" is known.
  std::optional<std::int64_t> valid_from;
  std::string formula_id;

  friend bool operator==(const FormulaResult&, const FormulaResult&) = default;
};

inline std::int64_t binom(std::int64_t n, int r) {
  if (r < 0 || n < r) return 0;
  std::int64_t out = 1;
  for (int i = 1; i <= r; ++i) out = out * (n - r + i) / i;
  return out;
}

/// ex(n, K3, F_k): maximum number of triangles in an n-vertex F_k-free graph.
///   k = 2:     4 floor(n/4) (+1 when n = 3 mod 4), exact for n >= 3
///   k odd:     (n-2k) k(k-1) + 2 C(k,3)
///   k even:    (n-2k+1) k(k-3/2) + 2 C(k-1,3) + (k/2-1)^2
/// The k >= 3 values are exact from n = 4k^3 on.
inline FormulaResult ex_k3_fan(std::int64_t n, int k) {
  if (k < 2) throw input_error("ex_k3_fan: k must be >= 2, got " + std::to_string(k));
  FormulaResult r;
  if (k == 2) {
    if (n < 3) throw input_error("ex_k3_fan: k=2 needs n >= 3");
    r.value = 4 * (n / 4) + (n % 4 == 3 ? 1 : 0);
    r.valid_from = 3;
    r.formula_id = "ex_k3_fan/k2_k4_packing";
    return r;
  }
  if (n < 2 * k)
    throw input_error("ex_k3_fan: need n >= 2k=" + std::to_string(2 * k) + ", got " +
                      std::to_string(n));
  r.valid_from = 4LL * k * k * k;
  if (k % 2 == 1) {
    r.value = (n - 2 * k) * k * (k - 1) + 2 * binom(k, 3);
    r.formula_id = "ex_k3_fan/odd";
  } else {
    const std::int64_t half = k / 2 - 1;
    r.value = (n - 2 * k + 1) * (k * (2 * k - 3) / 2) + 2 * binom(k - 1, 3) + half * half;
    r.formula_id = "ex_k3_fan/even";
  }
  return r;
}

/// ex_3(n, star_k): maximum number of triples in an n-vertex 3-graph with no
/// k triples pairwise meeting in exactly one common vertex.
inline FormulaResult ex3_star(std::int64_t n, int k) {
  if (k < 2) throw input_error("ex3_star: k must be >= 2, got " + std::to_string(k));
  if (n < 3) throw input_error("ex3_star: need n >= 3");
  FormulaResult r;
  if (k == 2) {
    switch (n % 4) {
      case 0: r.value = n; break;
      case 1: r.value = n - 1; break;
      default: r.value = n - 2; break;
    }
    r.valid_from = 3;
    r.formula_id = "ex3_star/k2";
    return r;
  }
  if (k % 2 == 1) {
    if (n < 2 * k) throw input_error("ex3_star: odd k needs n >= 2k");
    r.value = (n - 2 * k) * k * (k - 1) + 2 * binom(k, 3);
    r.formula_id = "ex3_star/odd";
  } else {
    if (n < 2 * k - 1) throw input_error("ex3_star: even k needs n >= 2k-1");
    r.value = (n - 2 * k + 1) * (((2LL * k - 1) * (k - 1) - 1) / 2) + (2LL * k - 2) * binom(k - 1, 2) +
              binom(k - 2, 2) - (static_cast<std::int64_t>(k) - 2) * (k - 4) / 2 + k / 2;
    r.formula_id = "ex3_star/even";
  }
  return r;
}

/// Triangle-count bounds for graphs on 2k-1-2s vertices with degree
/// sequence (k-1, ..., k-1, k-2), k even.
struct DegseqTriangleBounds {
  int k = 0;
  int s = 0;
  /// Minimum possible count (s = 0 only), attained uniquely by H'_k.
  std::optional<std::int64_t> min_bound;
  /// Every graph other than H'_k has at least this many (s = 0 only).
  std::optional<std::int64_t> min_runner_up;
  /// Largest possible count; attained uniquely by H_k when s = 0.
  std::int64_t max_bound = 0;
  /// The shrinking-neighborhood bound as an exact rational (valid for any s).
  Rational shrink_bound;
  std::optional<Graph> min_extremal;
  std::optional<Graph> max_extremal;
};

/// (1/6)(2k-1-2s)((k-1)(k-2) - (k-1-2s)(2s+1)) + 1/2 - s
inline Rational shrink_triangle_bound(int k, int s) {
  const std::int64_t a = 2LL * k - 1 - 2LL * s;
  const std::int64_t b = (k - 1LL) * (k - 2) - (k - 1LL - 2 * s) * (2LL * s + 1);
  return Rational(a * b, 6) + Rational(1, 2) - Rational(s);
}

inline DegseqTriangleBounds degseq_triangle_bounds(int k, int s) {
  detail::require_even_k(k, "degseq_triangle_bounds");
  if (s < 0 || s > k / 2 - 1)
    throw input_error("degseq_triangle_bounds: need 0 <= s <= k/2-1, got s=" + std::to_string(s));
  DegseqTriangleBounds r;
  r.k = k;
  r.s = s;
  r.shrink_bound = shrink_triangle_bound(k, s);
  const std::int64_t half = k / 2;
  if (s == 0) {
    r.min_bound = (half - 2) * (half - 1);
    r.min_runner_up = (half - 1) * (half - 1) - 1;
    r.max_bound = 2 * binom(k - 1, 3) + (half - 1) * (half - 1);
    r.min_extremal = build({ConstructionKind::HkPrime, 0, k});
    r.max_extremal = build({ConstructionKind::Hk, 0, k});
  } else {
    r.max_bound = boost::rational_cast<std::int64_t>(r.shrink_bound);  // truncation == floor (>0)
  }
  return r;
}

}  // namespace fanfree
