#pragma once

// Canonical labeling by equitable-partition refinement plus backtracking
// over individualizations, with automorphism pruning.
//
// Guarantee: canonical_form(g) == canonical_form(h) iff g and h are
// isomorphic. Running time is comfortably interactive for n <= 16 (the
// size used by the exhaustive search); larger graphs work but the
// backtracking can grow for highly regular inputs.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "fanfree/graph.hpp"
#include "fanfree/graph6.hpp"

namespace fanfree {

struct CanonicalLabeling {
  /// lab[i] is the input vertex placed at canonical position i.
  std::vector<int> lab;
  /// The input relabeled so that lab[i] becomes i.
  Graph graph;
  /// Automorphisms discovered while searching, as vertex maps.
  std::vector<std::vector<int>> automorphisms;
};

namespace detail {

using Cells = std::vector<std::vector<int>>;

/// Refines an ordered partition to the coarsest equitable refinement.
/// Cells split by neighbor count into the splitter, lower counts first.
inline void refine(const Graph& g, Cells& cells) {
  std::vector<int> cnt(static_cast<std::size_t>(g.order()));
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t s = 0; s < cells.size() && !changed; ++s) {
      VertexSet splitter;
      for (int v : cells[s]) splitter.set(v);
      Cells next;
      next.reserve(cells.size() + 4);
      for (auto& c : cells) {
        if (c.size() == 1) {
          next.push_back(std::move(c));
          continue;
        }
        bool uniform = true;
        for (int x : c) {
          cnt[x] = g.neighbors(x).intersection_count(splitter);
          if (cnt[x] != cnt[c.front()]) uniform = false;
        }
        if (uniform) {
          next.push_back(std::move(c));
          continue;
        }
        std::map<int, std::vector<int>> parts;
        for (int x : c) parts[cnt[x]].push_back(x);
        for (auto& [_, part] : parts) next.push_back(std::move(part));
        changed = true;
      }
      cells = std::move(next);
    }
  }
}

class CanonSearch {
public:
  explicit CanonSearch(const Graph& g) : g_(g), n_(g.order()) {}

  void run(Cells cells) {
    refine(g_, cells);
    std::vector<int> path;
    dfs(cells, path);
  }

  std::vector<int> best_lab;
  std::vector<std::vector<int>> autos;

private:
  using Cert = std::vector<VertexSet>;

  Cert certificate(const std::vector<int>& lab) const {
    std::vector<int> pos(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i) pos[lab[i]] = i;
    Cert rows(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i)
      for (int w : g_.neighbors(lab[i])) rows[i].set(pos[w]);
    return rows;
  }

  static int compare(const Cert& a, const Cert& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
      const auto& wa = a[i].words();
      const auto& wb = b[i].words();
      for (int w = 0; w < VertexSet::kWords; ++w)
        if (wa[w] != wb[w]) return wa[w] < wb[w] ? -1 : 1;
    }
    return 0;
  }

  static int common_prefix(const std::vector<int>& a, const std::vector<int>& b) {
    std::size_t i = 0;
    while (i < a.size() && i < b.size() && a[i] == b[i]) ++i;
    return static_cast<int>(i);
  }

  void record_auto(const std::vector<int>& from, const std::vector<int>& to) {
    std::vector<int> gamma(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i) gamma[from[i]] = to[i];
    autos.push_back(std::move(gamma));
  }

  // Returns the level to resume at; equal to the current level means continue.
  int leaf(const Cells& cells, const std::vector<int>& path) {
    const int level = static_cast<int>(path.size());
    std::vector<int> lab;
    lab.reserve(static_cast<std::size_t>(n_));
    for (const auto& c : cells) lab.push_back(c.front());
    Cert cert = certificate(lab);
    if (!have_first_) {
      have_first_ = true;
      first_cert_ = cert;
      first_lab_ = lab;
      first_path_ = path;
      best_cert_ = std::move(cert);
      best_lab = std::move(lab);
      best_path_ = path;
      return level;
    }
    if (compare(cert, first_cert_) == 0) {
      record_auto(first_lab_, lab);
      return common_prefix(path, first_path_);
    }
    const int c = compare(cert, best_cert_);
    if (c == 0) {
      record_auto(best_lab, lab);
      return common_prefix(path, best_path_);
    }
    if (c > 0) {
      best_cert_ = std::move(cert);
      best_lab = std::move(lab);
      best_path_ = path;
    }
    return level;
  }

  int find(std::vector<int>& parent, int x) const {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }

  // Orbit representative map under discovered automorphisms fixing `path`.
  std::vector<int> stabilizer_orbits(const std::vector<int>& path) {
    std::vector<int> parent(static_cast<std::size_t>(n_));
    std::iota(parent.begin(), parent.end(), 0);
    for (const auto& gamma : autos) {
      bool fixes = std::all_of(path.begin(), path.end(), [&](int p) { return gamma[p] == p; });
      if (!fixes) continue;
      for (int v = 0; v < n_; ++v) {
        int a = find(parent, v);
        int b = find(parent, gamma[v]);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
    }
    for (int v = 0; v < n_; ++v) parent[v] = find(parent, v);
    return parent;
  }

  int dfs(const Cells& cells, std::vector<int>& path) {
    const int level = static_cast<int>(path.size());
    std::size_t target = cells.size();
    for (std::size_t i = 0; i < cells.size(); ++i)
      if (cells[i].size() > 1 && (target == cells.size() || cells[i].size() < cells[target].size()))
        target = i;
    if (target == cells.size()) return leaf(cells, path);

    std::vector<int> tried;
    std::size_t autos_seen = static_cast<std::size_t>(-1);
    std::vector<int> orbit;
    for (int v : cells[target]) {
      if (!tried.empty()) {
        if (autos_seen != autos.size()) {
          orbit = stabilizer_orbits(path);
          autos_seen = autos.size();
        }
        bool same = std::any_of(tried.begin(), tried.end(),
                                [&](int t) { return orbit[t] == orbit[v]; });
        if (same) continue;
      }
      tried.push_back(v);

      Cells child;
      child.reserve(cells.size() + 1);
      for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i != target) {
          child.push_back(cells[i]);
          continue;
        }
        child.push_back({v});
        std::vector<int> rest;
        for (int x : cells[i])
          if (x != v) rest.push_back(x);
        child.push_back(std::move(rest));
      }
      refine(g_, child);
      path.push_back(v);
      const int r = dfs(child, path);
      path.pop_back();
      if (r < level) return r;
    }
    return level;
  }

  const Graph& g_;
  int n_;
  bool have_first_ = false;
  Cert first_cert_, best_cert_;
  std::vector<int> first_lab_, first_path_, best_path_;
};

inline Cells initial_cells(int n, std::span<const int> colors) {
  if (colors.empty()) {
    std::vector<int> all(static_cast<std::size_t>(n));
    std::iota(all.begin(), all.end(), 0);
    return n == 0 ? Cells{} : Cells{std::move(all)};
  }
  if (static_cast<int>(colors.size()) != n) throw input_error("coloring size differs from order");
  std::map<int, std::vector<int>> byColor;
  for (int v = 0; v < n; ++v) byColor[colors[v]].push_back(v);
  Cells cells;
  for (auto& [_, c] : byColor) cells.push_back(std::move(c));
  return cells;
}

}  // namespace detail

/// Canonical labeling; `colors` (optional) fixes an ordered initial partition,
/// so the result is canonical among color-preserving relabelings.
inline CanonicalLabeling canonical_labeling(const Graph& g, std::span<const int> colors = {}) {
  detail::CanonSearch search(g);
  search.run(detail::initial_cells(g.order(), colors));
  CanonicalLabeling out;
  out.lab = std::move(search.best_lab);
  std::vector<int> pos(out.lab.size());
  for (std::size_t i = 0; i < out.lab.size(); ++i) pos[out.lab[i]] = static_cast<int>(i);
  out.graph = relabel(g, pos);
  out.automorphisms = std::move(search.autos);
  return out;
}

/// graph6 string of the canonical labeling.
inline std::string canonical_form(const Graph& g) { return graph6_encode(canonical_labeling(g).graph); }

inline std::string canonical_form(const Graph& g, std::span<const int> colors) {
  return graph6_encode(canonical_labeling(g, colors).graph);
}

/// True iff some automorphism of g maps a to b.
inline bool same_orbit(const Graph& g, int a, int b) {
  if (a == b) return true;
  if (g.degree(a) != g.degree(b)) return false;
  std::vector<int> ca(static_cast<std::size_t>(g.order()), 0);
  std::vector<int> cb = ca;
  ca[a] = 1;
  cb[b] = 1;
  return canonical_labeling(g, ca).graph == canonical_labeling(g, cb).graph;
}

}  // namespace fanfree
