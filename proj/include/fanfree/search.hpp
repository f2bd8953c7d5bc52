#pragma once

// Exhaustive and heuristic search for F_k-free graphs with many triangles.
//
// Exhaustive generation uses vertex-by-vertex canonical augmentation: a
// child G+w of a parent G is accepted only if w lies in the automorphism
// orbit of the canonically last vertex of G+w, and children of one parent
// are deduplicated by canonical form. Every isomorphism class is then
// produced exactly once, from its unique canonical parent. Any child filter
// must be closed under vertex deletion (F_k-freeness, degree caps) so that
// canonical parents of accepted graphs are themselves accepted.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <mutex>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "fanfree/canonical.hpp"
#include "fanfree/constructions.hpp"
#include "fanfree/error.hpp"
#include "fanfree/graph.hpp"
#include "fanfree/graph6.hpp"
#include "fanfree/matching.hpp"
#include "fanfree/triangles.hpp"

namespace fanfree {

enum class SearchMode { Exhaustive, DegSeq, HillClimb };

inline std::string_view to_string(SearchMode m) {
  switch (m) {
    case SearchMode::Exhaustive: return "exhaustive";
    case SearchMode::DegSeq: return "degseq";
    case SearchMode::HillClimb: return "hill";
  }
  return "?";
}

struct SearchReport {
  int n = 0;
  int k = 0;
  SearchMode mode = SearchMode::Exhaustive;
  std::int64_t best_value = 0;
  /// Canonical graph6 strings, sorted and deduplicated.
  std::vector<std::string> witnesses;
  std::int64_t explored = 0;
  std::int64_t pruned = 0;
  double wall_time_ms = 0;
  bool exact = false;
};

/// Worker count: FANFREE_THREADS if set and positive, else hardware concurrency.
inline int default_thread_count() {
  if (const char* env = std::getenv("FANFREE_THREADS")) {
    const int t = std::atoi(env);
    if (t > 0) return t;
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

/// Largest exhaustive order with a documented exactness guarantee.
inline constexpr int kMaxExhaustiveOrder = 11;

// ---------------------------------------------------------------------------
// Canonical augmentation

namespace detail {

/// True iff new_vertex is in the automorphism orbit of the canonically last
/// vertex of g.
inline bool is_canonical_extension(const Graph& g, int new_vertex, std::string* canon) {
  const CanonicalLabeling cl = canonical_labeling(g);
  if (canon) *canon = graph6_encode(cl.graph);
  const int last = cl.lab.back();
  if (last == new_vertex) return true;
  if (g.degree(last) != g.degree(new_vertex)) return false;
  std::vector<int> parent(static_cast<std::size_t>(g.order()));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& gamma : cl.automorphisms)
    for (int v = 0; v < g.order(); ++v) parent[find(v)] = find(gamma[v]);
  if (find(last) == find(new_vertex)) return true;
  return same_orbit(g, last, new_vertex);
}

}  // namespace detail

/// Control returned by a node callback.
enum class Descend { Yes, No };

/// Generates graphs up to isomorphism by canonical augmentation.
///
/// `filter(child, new_vertex)` returns false to drop a child (must be closed
/// under vertex deletion). `on_node(graph, depth)` is called once per accepted
/// isomorphism class at every level and may stop descent below that node.
class AugmentationTree {
public:
  using Filter = std::function<bool(const Graph&, int)>;
  using OnNode = std::function<Descend(const Graph&)>;

  AugmentationTree(int target, Filter filter) : target_(target), filter_(std::move(filter)) {
    if (target < 1) throw input_error("augmentation: target order must be >= 1");
    if (target > 20) throw capacity_error("augmentation: orders above 20 are out of reach");
  }

  /// Canonical children of `parent` that pass the filter.
  std::vector<Graph> children(const Graph& parent, std::int64_t* rejected = nullptr) const {
    const int m = parent.order();
    std::vector<Graph> out;
    std::set<std::string> seen;
    for (std::uint32_t mask = 0; mask < (1U << m); ++mask) {
      GraphBuilder b(m + 1);
      for (const Edge& e : parent.edges()) b.add_edge(e.u, e.v);
      for (int v = 0; v < m; ++v)
        if (mask >> v & 1U) b.add_edge(v, m);
      Graph child = std::move(b).build();
      if (filter_ && !filter_(child, m)) {
        if (rejected) ++*rejected;
        continue;
      }
      std::string canon;
      if (!detail::is_canonical_extension(child, m, &canon)) continue;
      if (!seen.insert(canon).second) continue;
      out.push_back(std::move(child));
    }
    return out;
  }

  /// Depth-first walk from `root`; returns false if stopped early.
  bool walk(const Graph& root, const OnNode& on_node, std::int64_t* rejected,
            const std::atomic<bool>* stop = nullptr) const {
    if (stop && stop->load(std::memory_order_relaxed)) return false;
    if (on_node(root) == Descend::No || root.order() >= target_) return true;
    for (const Graph& child : children(root, rejected))
      if (!walk(child, on_node, rejected, stop)) return false;
    return true;
  }

  /// All accepted nodes of exactly `depth` vertices, in generation order.
  std::vector<Graph> frontier(int depth, const OnNode& on_node, std::int64_t* rejected) const {
    std::vector<Graph> level{Graph(1)};
    if (on_node(level.front()) == Descend::No) return {};
    for (int d = 1; d < depth; ++d) {
      std::vector<Graph> next;
      for (const Graph& g : level)
        for (Graph& c : children(g, rejected))
          if (on_node(c) == Descend::Yes) next.push_back(std::move(c));
      level = std::move(next);
    }
    return level;
  }

  int target() const { return target_; }

private:
  int target_;
  Filter filter_;
};

/// Visits every graph on n vertices up to isomorphism (filtered by `filter`).
template <class Visitor>
std::int64_t enumerate_graphs(int n, AugmentationTree::Filter filter, Visitor&& visit) {
  AugmentationTree tree(n, std::move(filter));
  std::int64_t count = 0;
  std::int64_t rejected = 0;
  tree.walk(
      Graph(1),
      [&](const Graph& g) {
        if (g.order() == n) {
          ++count;
          visit(g);
        }
        return Descend::Yes;
      },
      &rejected);
  return count;
}

// ---------------------------------------------------------------------------
// Exhaustive extremal search

namespace detail {

/// Max edges of a j-vertex graph whose matching number is at most k-1.
inline std::int64_t max_edges_matching_below(std::int64_t j, int k) {
  if (j <= 2 * k - 1) return j * (j - 1) / 2;
  const std::int64_t dense = binom(2 * k - 1, 2);
  const std::int64_t spread = binom(k - 1, 2) + (k - 1LL) * (j - k + 1);
  return std::max(dense, spread);
}

/// Best triangle count among known F_k-free constructions on n vertices.
inline std::int64_t construction_lower_bound(int n, int k) {
  std::int64_t best = 0;
  if (k == 2 && n >= 3) best = triangle_count(build({ConstructionKind::K4Packing, n, 2}));
  if (k >= 3 && k % 2 == 1 && n >= 2 * k)
    best = std::max(best, triangle_count(build({ConstructionKind::OddExtremal, n, k})));
  if (k >= 4 && k % 2 == 0 && n >= 2 * k - 1)
    best = std::max(best, triangle_count(build({ConstructionKind::EvenExtremal, n, k})));
  best = std::max(best, (n / (2 * k)) * binom(2 * k, 3));
  if (n < 2 * k) best = std::max(best, binom(n, 3));  // K_n is F_k-free below 2k+1
  return best;
}

inline bool fan_free_after_adding(const Graph& g, int w, int k) {
  if (fan_center_order(g, w, k) >= k) return false;
  for (int x : g.neighbors(w))
    if (fan_center_order(g, x, k) >= k) return false;
  return true;
}

}  // namespace detail

/// Maximum number of triangles over all F_k-free graphs on n vertices,
/// with every extremal graph up to isomorphism.
///
/// `budget` caps the number of canonical nodes visited (0 = unlimited);
/// exhausting it yields a partial report with exact = false.
inline SearchReport exhaustive_extremal(int n, int k, std::int64_t budget = 0, int threads = 0) {
  if (k < 2) throw input_error("exhaustive_extremal: k must be >= 2");
  if (n < 1) throw input_error("exhaustive_extremal: n must be >= 1");
  if (n > 20) throw capacity_error("exhaustive_extremal: n above 20 is out of reach");
  const auto start = std::chrono::steady_clock::now();
  if (threads <= 0) threads = default_thread_count();

  // Triangles still obtainable when vertices m..n-1 are added to an m-vertex graph.
  std::vector<std::int64_t> headroom(static_cast<std::size_t>(n + 1), 0);
  for (int m = n - 1; m >= 0; --m)
    headroom[m] = headroom[m + 1] + detail::max_edges_matching_below(m, k);

  std::atomic<std::int64_t> best{detail::construction_lower_bound(n, k)};
  std::atomic<std::int64_t> explored{0};
  std::atomic<std::int64_t> rejected{0};
  std::atomic<bool> stop{false};
  std::mutex merge_mutex;
  std::int64_t final_best = -1;
  std::set<std::string> witnesses;

  AugmentationTree tree(n, [k](const Graph& g, int w) { return detail::fan_free_after_adding(g, w, k); });

  struct Local {
    std::int64_t best = -1;
    std::set<std::string> witnesses;
    std::int64_t rejected = 0;
  };

  auto make_visitor = [&](Local& local) {
    return [&](const Graph& g) -> Descend {
      const std::int64_t e = explored.fetch_add(1, std::memory_order_relaxed) + 1;
      if (budget > 0 && e > budget) {
        stop.store(true);
        return Descend::No;
      }
      const std::int64_t t = triangle_count(g);
      if (t + headroom[g.order()] < best.load(std::memory_order_relaxed)) {
        ++local.rejected;
        return Descend::No;
      }
      if (g.order() == n) {
        std::int64_t cur = best.load();
        while (t > cur && !best.compare_exchange_weak(cur, t)) {
        }
        if (t > local.best) {
          local.best = t;
          local.witnesses.clear();
        }
        if (t == local.best) local.witnesses.insert(canonical_form(g));
      }
      return Descend::Yes;
    };
  };

  auto merge = [&](Local& local) {
    std::lock_guard lock(merge_mutex);
    rejected += local.rejected;
    if (local.best > final_best) {
      final_best = local.best;
      witnesses.clear();
    }
    if (local.best == final_best) witnesses.insert(local.witnesses.begin(), local.witnesses.end());
  };

  const int split = std::min(n, 5);
  if (threads == 1 || n <= split) {
    Local local;
    std::int64_t rej = 0;
    tree.walk(Graph(1), make_visitor(local), &rej, &stop);
    local.rejected += rej;
    merge(local);
  } else {
    Local head;
    std::int64_t rej = 0;
    std::vector<Graph> roots = tree.frontier(split, make_visitor(head), &rej);
    head.rejected += rej;
    merge(head);
    // Frontier nodes were already counted; their subtrees are walked below.
    explored -= static_cast<std::int64_t>(roots.size());
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) {
      pool.emplace_back([&] {
        Local local;
        std::int64_t r = 0;
        auto visitor = make_visitor(local);
        for (std::size_t i = next++; i < roots.size(); i = next++)
          if (!tree.walk(roots[i], visitor, &r, &stop)) break;
        local.rejected += r;
        merge(local);
      });
    }
    for (auto& th : pool) th.join();
  }

  SearchReport rep;
  rep.n = n;
  rep.k = k;
  rep.mode = SearchMode::Exhaustive;
  rep.best_value = std::max<std::int64_t>(final_best, 0);
  rep.witnesses.assign(witnesses.begin(), witnesses.end());
  rep.explored = std::min(explored.load(), budget > 0 ? budget : explored.load());
  rep.pruned = rejected.load();
  rep.exact = !stop.load();
  rep.wall_time_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

// ---------------------------------------------------------------------------
// Fixed degree sequence

struct DegseqStats {
  std::int64_t graphs = 0;
  std::int64_t min_triangles = 0;
  std::int64_t max_triangles = 0;
  std::vector<std::string> min_witnesses;
  std::vector<std::string> max_witnesses;
  std::int64_t explored = 0;
};

namespace detail {

// Can the current degrees still grow into the target multiset when each
// vertex gains at most `remaining` more edges? Greedy interval-to-point
// assignment: intervals [d, d+remaining] sorted by right end.
inline bool degrees_extendable(const Graph& g, const std::vector<int>& target_ascending,
                               int remaining) {
  std::vector<int> cur;
  for (int v = 0; v < g.order(); ++v) cur.push_back(g.degree(v));
  std::sort(cur.begin(), cur.end());
  std::vector<char> taken(target_ascending.size(), 0);
  for (int d : cur) {
    bool placed = false;
    for (std::size_t i = 0; i < target_ascending.size(); ++i) {
      if (taken[i] || target_ascending[i] < d) continue;
      if (target_ascending[i] > d + remaining) break;
      taken[i] = 1;
      placed = true;
      break;
    }
    if (!placed) return false;
  }
  return true;
}

}  // namespace detail

/// Visits every graph with exactly this degree sequence, once per
/// isomorphism class, and tracks triangle extremes. n <= 11.
template <class Visitor>
DegseqStats degseq_enumerate(const DegreeSequence& seq, Visitor&& visit) {
  if (auto r = erdos_gallai_violation(seq))
    throw input_error("degree sequence is not graphical: Erdős–Gallai inequality fails at r=" +
                      std::to_string(*r));
  const int n = seq.size();
  if (n > kMaxExhaustiveOrder)
    throw capacity_error("degseq_enumerate: exhaustive mode limited to " +
                         std::to_string(kMaxExhaustiveOrder) + " vertices");
  DegseqStats st;
  if (n == 0) return st;
  std::vector<int> asc = seq.degrees();
  std::sort(asc.begin(), asc.end());
  const int max_degree = asc.back();

  AugmentationTree tree(n, [&](const Graph& g, int w) {
    if (g.degree(w) > max_degree) return false;
    for (int x : g.neighbors(w))
      if (g.degree(x) > max_degree) return false;
    return detail::degrees_extendable(g, asc, n - g.order());
  });
  std::set<std::string> mins, maxs;
  bool first = true;
  std::int64_t rejected = 0;
  tree.walk(
      Graph(1),
      [&](const Graph& g) {
        ++st.explored;
        if (g.order() < n) return Descend::Yes;
        if (!(degree_sequence(g) == seq)) return Descend::No;
        ++st.graphs;
        const std::int64_t t = triangle_count(g);
        visit(g);
        if (first || t < st.min_triangles) {
          st.min_triangles = t;
          mins.clear();
        }
        if (first || t > st.max_triangles) {
          st.max_triangles = t;
          maxs.clear();
        }
        first = false;
        if (t == st.min_triangles) mins.insert(canonical_form(g));
        if (t == st.max_triangles) maxs.insert(canonical_form(g));
        return Descend::No;
      },
      &rejected);
  st.min_witnesses.assign(mins.begin(), mins.end());
  st.max_witnesses.assign(maxs.begin(), maxs.end());
  return st;
}

inline DegseqStats degseq_enumerate(const DegreeSequence& seq) {
  return degseq_enumerate(seq, [](const Graph&) {});
}

/// (k-1, ..., k-1, k-2) on n vertices.
inline DegreeSequence near_regular_sequence(int n, int k) {
  std::vector<int> d(static_cast<std::size_t>(n), k - 1);
  if (n > 0) d.back() = k - 2;
  return DegreeSequence(std::move(d));
}

/// Degree-sequence mode as a SearchReport: maximum triangles and its witnesses.
inline SearchReport degseq_search(int n, int k) {
  const auto start = std::chrono::steady_clock::now();
  const DegseqStats st = degseq_enumerate(near_regular_sequence(n, k));
  SearchReport rep;
  rep.n = n;
  rep.k = k;
  rep.mode = SearchMode::DegSeq;
  rep.best_value = st.max_triangles;
  rep.witnesses = st.max_witnesses;
  rep.explored = st.explored;
  rep.pruned = st.explored - st.graphs;
  rep.exact = true;
  rep.wall_time_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

// ---------------------------------------------------------------------------
// Hill climbing

struct HillClimbOptions {
  int restarts = 20;
  std::int64_t steps = 20000;
  std::uint64_t seed = 42;
};

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline double unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

/// F_k-free after adding uv: only u, v and their common neighbors changed.
inline bool edge_keeps_fan_free(const Graph& g, int u, int v, int k) {
  if (fan_center_order(g, u, k) >= k || fan_center_order(g, v, k) >= k) return false;
  for (int w : g.neighbors(u) & g.neighbors(v))
    if (fan_center_order(g, w, k) >= k) return false;
  return true;
}

inline Graph random_fan_free(int n, int k, std::mt19937_64& rng) {
  std::vector<Edge> pairs;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  for (std::size_t i = pairs.size(); i > 1; --i) std::swap(pairs[i - 1], pairs[rng() % i]);
  const std::size_t keep = pairs.empty() ? 0 : rng() % (pairs.size() + 1);
  GraphBuilder b(n);
  for (std::size_t i = 0; i < keep; ++i) {
    b.add_edge(pairs[i].u, pairs[i].v);
    if (!edge_keeps_fan_free(b.view(), pairs[i].u, pairs[i].v, k)) b.remove_edge(pairs[i].u, pairs[i].v);
  }
  return std::move(b).build();
}

}  // namespace detail

/// Restart seeds: 0 the extremal construction (when one exists for (n,k)),
/// 1 a K_{2k} packing, the rest random F_k-free graphs.
inline Graph hill_climb_seed(int n, int k, int restart, std::mt19937_64& rng) {
  if (restart == 0) {
    if (k == 2 && n >= 3) return build({ConstructionKind::K4Packing, n, 2});
    if (k % 2 == 1 && k >= 3 && n >= 2 * k) return build({ConstructionKind::OddExtremal, n, k});
    if (k % 2 == 0 && k >= 4 && n >= 2 * k - 1) return build({ConstructionKind::EvenExtremal, n, k});
  }
  if (restart <= 1) return graphs::clique_packing(n / (2 * k), 2 * k, n);
  return detail::random_fan_free(n, k, rng);
}

/// Randomized local search over F_k-free graphs maximizing triangles.
/// Moves toggle one vertex pair: additions are kept when they leave the graph
/// F_k-free; deletions of an edge in c triangles are accepted with
/// probability exp(-c / T), T decreasing linearly to 0. Deterministic in seed.
inline SearchReport hill_climb(int n, int k, const HillClimbOptions& opt = {}) {
  if (k < 2) throw input_error("hill_climb: k must be >= 2");
  if (n < 2) throw input_error("hill_climb: n must be >= 2");
  if (n > kMaxVertices) throw capacity_error("hill_climb: n exceeds vertex capacity");
  const auto start = std::chrono::steady_clock::now();
  SearchReport rep;
  rep.n = n;
  rep.k = k;
  rep.mode = SearchMode::HillClimb;
  rep.exact = false;
  std::int64_t global_best = -1;
  std::set<std::string> witnesses;

  for (int r = 0; r < std::max(1, opt.restarts); ++r) {
    std::mt19937_64 rng(detail::splitmix64(opt.seed ^ detail::splitmix64(static_cast<std::uint64_t>(r))));
    GraphBuilder b(hill_climb_seed(n, k, r, rng));
    std::int64_t tri = triangle_count(b.view());
    std::int64_t best = tri;
    Graph best_graph = b.view();
    for (std::int64_t step = 0; step < opt.steps; ++step) {
      ++rep.explored;
      const int u = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
      int v = static_cast<int>(rng() % static_cast<std::uint64_t>(n - 1));
      if (v >= u) ++v;
      const int c = b.view().neighbors(u).intersection_count(b.view().neighbors(v));
      if (!b.adjacent(u, v)) {
        b.add_edge(u, v);
        if (!detail::edge_keeps_fan_free(b.view(), u, v, k)) {
          b.remove_edge(u, v);
          ++rep.pruned;
          continue;
        }
        tri += c;
      } else {
        const double temperature = 1.0 - static_cast<double>(step) / static_cast<double>(opt.steps);
        const bool accept = c == 0 || (temperature > 0 && detail::unit(rng) < std::exp(-c / temperature));
        if (!accept) {
          ++rep.pruned;
          continue;
        }
        b.remove_edge(u, v);
        tri -= c;
      }
      if (tri > best) {
        best = tri;
        best_graph = b.view();
      }
    }
    if (best > global_best) {
      global_best = best;
      witnesses.clear();
    }
    if (best == global_best) {
      if (!is_fan_free(best_graph, k))
        throw std::logic_error("hill_climb: incremental fan check admitted an F_k");
      witnesses.insert(canonical_form(best_graph));
    }
  }
  rep.best_value = global_best;
  rep.witnesses.assign(witnesses.begin(), witnesses.end());
  rep.wall_time_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

}  // namespace fanfree
