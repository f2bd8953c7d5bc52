#pragma once

#include <cstdint>
#include <deque>
#include <limits>
#include <numeric>
#include <optional>
#include <vector>

#include "fanfree/error.hpp"
#include "fanfree/graph.hpp"
#include "fanfree/rational.hpp"
#include "fanfree/triangles.hpp"

namespace fanfree {

struct MatchingResult {
  int size = 0;
  /// Pairwise disjoint edges, sorted.
  std::vector<Edge> matching;
  /// A set X attaining the Tutte–Berge minimum, when requested.
  std::optional<VertexSet> certificate;
};

/// Largest vertex count for which exact minimization over all X is allowed.
inline constexpr int kMaxExactTutteBerge = 20;

namespace detail {

// Edmonds' blossom algorithm on the subgraph of g induced by `within`.
// Stops as soon as the matching reaches `limit` edges.
class Blossom {
public:
  Blossom(const Graph& g, const VertexSet& within)
      : g_(g), within_(within), n_(g.order()), match_(static_cast<std::size_t>(n_), -1),
        parent_(static_cast<std::size_t>(n_)), base_(static_cast<std::size_t>(n_)),
        used_(static_cast<std::size_t>(n_)), blossom_(static_cast<std::size_t>(n_)) {}

  int run(int limit) {
    int size = 0;
    // Greedy start.
    for (int v : within_) {
      if (size >= limit) return size;
      if (match_[v] != -1) continue;
      for (int w : adj(v)) {
        if (match_[w] == -1) {
          match_[v] = w;
          match_[w] = v;
          ++size;
          break;
        }
      }
    }
    for (int v : within_) {
      if (size >= limit) break;
      if (match_[v] != -1) continue;
      int t = augmenting_path(v);
      if (t == -1) continue;
      while (t != -1) {
        const int pv = parent_[t];
        const int ppv = match_[pv];
        match_[t] = pv;
        match_[pv] = t;
        t = ppv;
      }
      ++size;
    }
    return size;
  }

  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (int v : within_)
      if (match_[v] > v) out.emplace_back(v, match_[v]);
    return out;
  }

private:
  VertexSet adj(int v) const { return g_.neighbors(v) & within_; }

  int lca(int a, int b) {
    std::vector<char> seen(static_cast<std::size_t>(n_), 0);
    while (true) {
      a = base_[a];
      seen[a] = 1;
      if (match_[a] == -1) break;
      a = parent_[match_[a]];
    }
    while (true) {
      b = base_[b];
      if (seen[b]) return b;
      b = parent_[match_[b]];
    }
  }

  void mark_path(int v, int b, int child) {
    while (base_[v] != b) {
      blossom_[base_[v]] = blossom_[base_[match_[v]]] = 1;
      parent_[v] = child;
      child = match_[v];
      v = parent_[match_[v]];
    }
  }

  int augmenting_path(int root) {
    std::fill(used_.begin(), used_.end(), 0);
    std::fill(parent_.begin(), parent_.end(), -1);
    std::iota(base_.begin(), base_.end(), 0);
    used_[root] = 1;
    std::deque<int> queue{root};
    while (!queue.empty()) {
      const int v = queue.front();
      queue.pop_front();
      for (int to : adj(v)) {
        if (base_[v] == base_[to] || match_[v] == to) continue;
        if (to == root || (match_[to] != -1 && parent_[match_[to]] != -1)) {
          const int cur = lca(v, to);
          std::fill(blossom_.begin(), blossom_.end(), 0);
          mark_path(v, cur, to);
          mark_path(to, cur, v);
          for (int i : within_) {
            if (blossom_[base_[i]]) {
              base_[i] = cur;
              if (!used_[i]) {
                used_[i] = 1;
                queue.push_back(i);
              }
            }
          }
        } else if (parent_[to] == -1) {
          parent_[to] = v;
          if (match_[to] == -1) return to;
          used_[match_[to]] = 1;
          queue.push_back(match_[to]);
        }
      }
    }
    return -1;
  }

  const Graph& g_;
  VertexSet within_;
  int n_;
  std::vector<int> match_, parent_, base_;
  std::vector<char> used_, blossom_;
};

}  // namespace detail

/// ν of the subgraph induced by `within`, capped at `limit`.
inline int matching_number(const Graph& g, const VertexSet& within,
                           int limit = std::numeric_limits<int>::max()) {
  return detail::Blossom(g, within).run(limit);
}

inline int matching_number(const Graph& g) { return matching_number(g, g.vertices()); }

/// Sizes of the connected components of G[within].
inline std::vector<int> component_sizes(const Graph& g, VertexSet within) {
  std::vector<int> sizes;
  while (within.any()) {
    VertexSet comp;
    VertexSet frontier;
    frontier.set(within.first());
    while (frontier.any()) {
      comp |= frontier;
      VertexSet next;
      for (int v : frontier) next |= g.neighbors(v);
      next &= within;
      next -= comp;
      frontier = next;
    }
    sizes.push_back(comp.count());
    within -= comp;
  }
  return sizes;
}

/// Vertex sets of the connected components of G[within], ordered by smallest vertex.
inline std::vector<VertexSet> components(const Graph& g, VertexSet within) {
  std::vector<VertexSet> out;
  while (within.any()) {
    VertexSet comp;
    VertexSet frontier;
    frontier.set(within.first());
    while (frontier.any()) {
      comp |= frontier;
      VertexSet next;
      for (int v : frontier) next |= g.neighbors(v);
      next &= within;
      next -= comp;
      frontier = next;
    }
    out.push_back(comp);
    within -= comp;
  }
  return out;
}

/// Number of odd components of G[within].
inline int odd_components(const Graph& g, const VertexSet& within) {
  int odd = 0;
  for (int s : component_sizes(g, within)) odd += s % 2;
  return odd;
}

/// 1/2 (|G| - o(G - X) + |X|), an upper bound on ν(G) for every X.
inline Rational tutte_berge_value(const Graph& g, const VertexSet& x) {
  if (!x.is_subset_of(g.vertices())) throw input_error("tutte_berge: X not a vertex subset");
  const int odd = odd_components(g, g.vertices() - x);
  return Rational(g.order() - odd + x.count(), 2);
}

struct TutteBergeCheck {
  Rational value;
  bool is_minimizer = false;
};

inline TutteBergeCheck tutte_berge_check(const Graph& g, const VertexSet& x) {
  TutteBergeCheck r;
  r.value = tutte_berge_value(g, x);
  r.is_minimizer = r.value == Rational(matching_number(g));
  return r;
}

/// Exact minimizer of the Tutte–Berge expression over all X ⊆ V.
/// Ties prefer smaller |X|, then the lowest bitmask. Cost 2^n; n <= 20.
inline VertexSet tutte_berge_minimizer(const Graph& g) {
  const int n = g.order();
  if (n > kMaxExactTutteBerge)
    throw capacity_error("exact Tutte–Berge search limited to " +
                         std::to_string(kMaxExactTutteBerge) + " vertices, got " +
                         std::to_string(n));
  const VertexSet all = g.vertices();
  std::int64_t best_twice = std::numeric_limits<std::int64_t>::max();
  int best_size = 0;
  std::uint32_t best_mask = 0;
  for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
    VertexSet x;
    for (int v = 0; v < n; ++v)
      if (mask >> v & 1U) x.set(v);
    const int size = x.count();
    const std::int64_t twice = n - odd_components(g, all - x) + size;
    if (twice < best_twice || (twice == best_twice && size < best_size)) {
      best_twice = twice;
      best_size = size;
      best_mask = mask;
    }
  }
  VertexSet x;
  for (int v = 0; v < n; ++v)
    if (best_mask >> v & 1U) x.set(v);
  return x;
}

inline MatchingResult max_matching(const Graph& g, bool with_certificate = false) {
  detail::Blossom b(g, g.vertices());
  MatchingResult r;
  r.size = b.run(std::numeric_limits<int>::max());
  r.matching = b.edges();
  if (with_certificate) r.certificate = tutte_berge_minimizer(g);
  return r;
}

// ---------------------------------------------------------------------------
// Fans and stars

/// k triangles through `center` that pairwise share only the center.
struct FanWitness {
  int center = -1;
  std::vector<Edge> pairs;

  friend bool operator==(const FanWitness&, const FanWitness&) = default;
};

/// ν(G[N(v)]): the largest k with v the center of an F_k.
inline int fan_center_order(const Graph& g, int v, int limit = std::numeric_limits<int>::max()) {
  if (v < 0 || v >= g.order()) throw input_error("fan_center_order: vertex out of range");
  return matching_number(g, g.neighbors(v), limit);
}

/// Lexicographically least matching of size k inside G[within]; empty when ν < k.
inline std::vector<Edge> lex_least_matching(const Graph& g, const VertexSet& within, int k) {
  std::vector<Edge> chosen;
  if (matching_number(g, within, k) < k) return chosen;
  VertexSet free = within;
  for (int a : within) {
    for (int b = (g.neighbors(a) & within).next(a + 1); b >= 0;
         b = (g.neighbors(a) & within).next(b + 1)) {
      if (static_cast<int>(chosen.size()) == k) return chosen;
      if (!free.test(a) || !free.test(b)) continue;
      VertexSet rest = free;
      rest.reset(a);
      rest.reset(b);
      const int need = k - static_cast<int>(chosen.size()) - 1;
      if (matching_number(g, rest, need) >= need) {
        chosen.emplace_back(a, b);
        free = rest;
      }
    }
  }
  return chosen;
}

/// A copy of F_k, centered at the smallest possible vertex, or nullopt.
inline std::optional<FanWitness> contains_fan(const Graph& g, int k) {
  if (k < 1) throw input_error("contains_fan: k must be >= 1 (F_0 is degenerate)");
  for (int v = 0; v < g.order(); ++v) {
    if (g.degree(v) < 2 * k) continue;
    if (fan_center_order(g, v, k) >= k)
      return FanWitness{v, lex_least_matching(g, g.neighbors(v), k)};
  }
  return std::nullopt;
}

inline bool is_fan_free(const Graph& g, int k) { return !contains_fan(g, k).has_value(); }

/// True iff w is a genuine F_k in g.
inline bool validate_fan(const Graph& g, const FanWitness& w, int k) {
  if (static_cast<int>(w.pairs.size()) != k || w.center < 0 || w.center >= g.order()) return false;
  VertexSet used;
  used.set(w.center);
  for (const Edge& e : w.pairs) {
    if (used.test(e.u) || used.test(e.v)) return false;
    if (!g.adjacent(e.u, e.v) || !g.adjacent(w.center, e.u) || !g.adjacent(w.center, e.v))
      return false;
    used.set(e.u);
    used.set(e.v);
  }
  return true;
}

/// k triples through one vertex pairwise meeting only there (ν(link) >= k).
inline bool contains_star(const TripleSystem& ts, int k) {
  if (k < 1) throw input_error("contains_star: k must be >= 1");
  for (int v = 0; v < ts.order(); ++v) {
    const Graph l = ts.link(v);
    if (matching_number(l, l.vertices(), k) >= k) return true;
  }
  return false;
}

}  // namespace fanfree
