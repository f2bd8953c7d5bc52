#pragma once

// The acceptance suite and corpus batch verification.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <istream>
#include <map>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "fanfree/constructions.hpp"
#include "fanfree/graph6.hpp"
#include "fanfree/matching.hpp"
#include "fanfree/report.hpp"
#include "fanfree/search.hpp"
#include "fanfree/triangles.hpp"
#include "fanfree/weights.hpp"

namespace fanfree {

namespace sample {

inline Graph gnp(int n, double p, std::mt19937_64& rng) {
  GraphBuilder b(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (static_cast<double>(rng() >> 11) * 0x1.0p-53 < p) b.add_edge(u, v);
  return std::move(b).build();
}

inline int uniform(std::mt19937_64& rng, int lo, int hi) {
  return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

inline double unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

/// G(n,p) with n and p drawn at random.
inline Graph random_graph(std::mt19937_64& rng, int n_min, int n_max) {
  return gnp(uniform(rng, n_min, n_max), unit(rng), rng);
}

/// Rejection-sampled F_k-free graph.
inline Graph random_fan_free(std::mt19937_64& rng, int k, int n_min, int n_max) {
  while (true) {
    Graph g = random_graph(rng, n_min, n_max);
    if (is_fan_free(g, k)) return g;
  }
}

}  // namespace sample

/// ν by exhaustive recursion: the lowest free vertex is either unmatched or
/// matched to one of its free neighbors.
inline int brute_force_matching_number(const Graph& g, VertexSet free) {
  if (free.none()) return 0;
  const int v = free.first();
  free.reset(v);
  int best = brute_force_matching_number(g, free);
  for (int w : g.neighbors(v) & free) {
    VertexSet rest = free;
    rest.reset(w);
    best = std::max(best, 1 + brute_force_matching_number(g, rest));
  }
  return best;
}

/// Extremal constructions checked against the closed form.
inline std::vector<ConstructionSpec> extremal_corpus() {
  std::vector<ConstructionSpec> out;
  for (int k : {3, 5, 7})
    for (int n = 2 * k + 1; n <= 60; ++n) out.push_back({ConstructionKind::OddExtremal, n, k});
  for (int k : {4, 6, 8})
    for (int n = 2 * k; n <= 60; ++n) out.push_back({ConstructionKind::EvenExtremal, n, k});
  return out;
}

/// Every construction family: the extremal corpus, the fixed (2k-1)-vertex
/// graphs for even k, and the k = 2 packings.
inline std::vector<ConstructionSpec> construction_corpus() {
  std::vector<ConstructionSpec> out = extremal_corpus();
  for (int k : {4, 6, 8})
    for (auto kind : {ConstructionKind::Hk, ConstructionKind::HkPrime, ConstructionKind::Gl})
      out.push_back({kind, 0, k});
  for (int n = 3; n <= 60; ++n) out.push_back({ConstructionKind::K4Packing, n, 2});
  return out;
}

/// Fixed-seed corpus of F_k-free graphs (k in {2,3,4}, n <= 14) plus constructions.
struct LemmaCorpusEntry {
  Graph g;
  int k;
};

inline std::vector<LemmaCorpusEntry> lemma_corpus(std::uint64_t seed = 20240611, int random_count = 500) {
  std::mt19937_64 rng(seed);
  std::vector<LemmaCorpusEntry> out;
  for (int i = 0; i < random_count; ++i) {
    const int k = 2 + i % 3;
    out.push_back({sample::random_fan_free(rng, k, 3, 14), k});
  }
  for (const auto& s : construction_corpus()) out.push_back({build(s), s.k});
  return out;
}

// ---------------------------------------------------------------------------

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

/// Values of the exhaustive k = 2 search, frozen from the oracle.
inline const std::map<int, std::int64_t>& k2_exhaustive_goldens() {
  static const std::map<int, std::int64_t> g{{4, 4}, {5, 4}, {6, 4}, {7, 5}, {8, 8}};
  return g;
}

namespace criteria {

inline CriterionResult construction_formula() {
  CriterionResult r{1, "construction triangle count equals closed form", false, {}, 0};
  int cases = 0;
  for (const auto& s : extremal_corpus()) {
    ++cases;
    const std::int64_t t = triangle_count(build(s));
    const std::int64_t f = ex_k3_fan(s.n, s.k).value;
    if (t != f) {
      r.detail = std::string(to_string(s.kind)) + " n=" + std::to_string(s.n) + " k=" +
                 std::to_string(s.k) + ": triangles=" + std::to_string(t) + " formula=" + std::to_string(f);
      return r;
    }
  }
  r.passed = true;
  r.detail = std::to_string(cases) + " (n,k) pairs";
  return r;
}

inline CriterionResult constructions_fan_free() {
  CriterionResult r{2, "constructions are F_k-free", false, {}, 0};
  int cases = 0;
  for (const auto& s : extremal_corpus()) {
    ++cases;
    if (auto w = contains_fan(build(s), s.k)) {
      r.detail = std::string(to_string(s.kind)) + " n=" + std::to_string(s.n) + " k=" +
                 std::to_string(s.k) + " has F_k at " + std::to_string(w->center);
      return r;
    }
  }
  r.passed = true;
  r.detail = std::to_string(cases) + " graphs";
  return r;
}

inline CriterionResult exhaustive_k2() {
  CriterionResult r{3, "exhaustive ex(n,K3,F2) for n=4..8", false, {}, 0};
  std::ostringstream os;
  r.passed = true;
  for (const auto& [n, golden] : k2_exhaustive_goldens()) {
    const SearchReport rep = exhaustive_extremal(n, 2);
    const std::int64_t packing = triangle_count(build({ConstructionKind::K4Packing, n, 2}));
    const std::int64_t hyper = ex3_star(n, 2).value;
    os << n << ":" << rep.best_value << " ";
    bool ok = rep.exact && rep.best_value == golden && rep.best_value <= hyper;
    if (n % 4 == 0) ok = ok && rep.best_value == packing;
    if (!ok) os << "(expected " << golden << ", hypergraph bound " << hyper << ") ";
    r.passed = r.passed && ok;
  }
  r.detail = os.str();
  return r;
}

inline CriterionResult degseq_k4() {
  CriterionResult r{4, "degree sequence (3^6,2) extremes at H_4 and H'_4", false, {}, 0};
  const DegseqStats st = degseq_enumerate(DegreeSequence({3, 3, 3, 3, 3, 3, 2}));
  const std::string hk = canonical_form(build({ConstructionKind::Hk, 0, 4}));
  const std::string hkp = canonical_form(build({ConstructionKind::HkPrime, 0, 4}));
  const bool max_ok = st.max_triangles == 3 && st.max_witnesses == std::vector<std::string>{hk};
  const bool min_ok = st.min_triangles == 0 &&
                      std::find(st.min_witnesses.begin(), st.min_witnesses.end(), hkp) != st.min_witnesses.end();
  r.passed = max_ok && min_ok;
  r.detail = std::to_string(st.graphs) + " graphs, min=" + std::to_string(st.min_triangles) + " (" +
             std::to_string(st.min_witnesses.size()) + " witnesses), max=" +
             std::to_string(st.max_triangles) + " (" + std::to_string(st.max_witnesses.size()) + " witnesses)";
  return r;
}

inline CriterionResult weight_conservation() {
  CriterionResult r{5, "sum of f(u) equals triangle count", false, {}, 0};
  std::mt19937_64 rng(77);
  std::vector<std::pair<Graph, int>> graphs;
  for (int i = 0; i < 500; ++i) graphs.emplace_back(sample::random_graph(rng, 1, 14), 2 + i % 7);
  for (const auto& s : construction_corpus()) graphs.emplace_back(build(s), s.k);
  int violations = 0;
  for (const auto& [g, k] : graphs) {
    const EdgeClassification cls(g, k);
    const Rational t(triangle_count(g));
    for (auto scheme : {WeightScheme::Basic, WeightScheme::Variant}) {
      const WeightLedger l(cls, scheme);
      Rational sum(0);
      for (const auto& f : l.f()) sum += f;
      if (sum != t) ++violations;
    }
  }
  r.passed = violations == 0;
  r.detail = std::to_string(graphs.size()) + " graphs x 2 schemes, " + std::to_string(violations) + " violations";
  return r;
}

inline CriterionResult lemma_bounds(const std::vector<LemmaCorpusEntry>& corpus) {
  CriterionResult r{6, "per-vertex, per-edge and tight-vertex bounds", false, {}, 0};
  std::int64_t checks = 0;
  int violations = 0;
  int tight = 0;
  int unchecked = 0;
  std::string first;
  for (const auto& [g, k] : corpus) {
    const LemmaReport rep = lemma_suite(g, k);
    checks += rep.checks;
    tight += rep.tight_vertices;
    unchecked += rep.unchecked_tight;
    for (const auto& v : rep.violations) {
      if (v.check == "edge_sum_variant") continue;  // criterion 7
      if (violations++ == 0)
        first = " first: " + v.check + " k=" + std::to_string(k) + " g6=" + graph6_encode(g) + " " + v.detail;
    }
  }
  r.passed = violations == 0 && unchecked == 0;
  r.detail = std::to_string(corpus.size()) + " graphs, " + std::to_string(checks) + " checks, " +
             std::to_string(tight) + " tight vertices, " + std::to_string(violations) + " violations" + first;
  return r;
}

inline CriterionResult variant_edge_bound(const std::vector<LemmaCorpusEntry>& corpus) {
  CriterionResult r{7, "variant scheme per-edge sum <= k-1", false, {}, 0};
  std::int64_t edges = 0;
  int violations = 0;
  for (const auto& [g, k] : corpus) {
    const WeightLedger l = weigh(g, k, WeightScheme::Variant);
    for (const Edge& e : g.edges()) {
      edges += 2;
      if (edge_weight_sum(l, g, e.u, e.v) > Rational(k - 1)) ++violations;
      if (edge_weight_sum(l, g, e.v, e.u) > Rational(k - 1)) ++violations;
    }
  }
  r.passed = violations == 0;
  r.detail = std::to_string(edges) + " ordered edges, " + std::to_string(violations) + " violations";
  return r;
}

inline CriterionResult counting_identities() {
  CriterionResult r{8, "Goodman and cherry identities", false, {}, 0};
  std::mt19937_64 rng(8);
  int failures = 0;
  for (int i = 0; i < 200; ++i) {
    const Graph g = sample::random_graph(rng, 0, 40);
    if (!goodman_check(g).holds) ++failures;
    std::int64_t pairs = 0;
    for (int v = 0; v < g.order(); ++v) pairs += binom(g.degree(v), 2);
    if (pairs != cherry_count(g) + 3 * triangle_count(g)) ++failures;
  }
  r.passed = failures == 0;
  r.detail = "200 graphs, " + std::to_string(failures) + " failures";
  return r;
}

inline CriterionResult hypergraph_consistency() {
  CriterionResult r{9, "lifts are star-free; graph bound below hypergraph bound", false, {}, 0};
  int cases = 0;
  for (const auto& s : construction_corpus()) {
    ++cases;
    const Graph g = build(s);
    const TripleSystem ts = lift(g);
    const std::string tag = std::string(to_string(s.kind)) + " n=" + std::to_string(g.order()) +
                            " k=" + std::to_string(s.k);
    if (contains_star(ts, s.k)) {
      r.detail = tag + ": lift contains a k-star";
      return r;
    }
    if (s.kind == ConstructionKind::OddExtremal &&
        static_cast<std::int64_t>(ts.size()) != ex3_star(s.n, s.k).value) {
      r.detail = tag + ": triple count " + std::to_string(ts.size()) + " != " +
                 std::to_string(ex3_star(s.n, s.k).value);
      return r;
    }
    if (s.n >= 2 * s.k && ex_k3_fan(s.n, s.k).value > ex3_star(s.n, s.k).value) {
      r.detail = tag + ": graph formula exceeds hypergraph formula";
      return r;
    }
  }
  r.passed = true;
  r.detail = std::to_string(cases) + " constructions";
  return r;
}

inline CriterionResult matching_oracle() {
  CriterionResult r{10, "blossom and Tutte-Berge agree with brute force", false, {}, 0};
  std::mt19937_64 rng(10);
  int bad_nu = 0;
  int bad_tb = 0;
  for (int i = 0; i < 1000; ++i) {
    const Graph g = sample::random_graph(rng, 0, 9);
    const MatchingResult m = max_matching(g);
    if (m.size != brute_force_matching_number(g, g.vertices()) ||
        static_cast<int>(m.matching.size()) != m.size)
      ++bad_nu;
  }
  for (int i = 0; i < 200; ++i) {
    const Graph g = sample::random_graph(rng, 0, 12);
    if (tutte_berge_value(g, tutte_berge_minimizer(g)) != Rational(matching_number(g))) ++bad_tb;
  }
  r.passed = bad_nu == 0 && bad_tb == 0;
  r.detail = "1000 matchings (" + std::to_string(bad_nu) + " wrong), 200 Tutte-Berge minima (" +
             std::to_string(bad_tb) + " wrong)";
  return r;
}

/// Renders a hill-climb report as the CLI does, minus the timing fields.
inline std::string hill_report_without_timing(int n, int k, const HillClimbOptions& opt) {
  RunManifest m;
  m.subcommand = "search";
  m.parameters = {{"mode", "hill"}, {"n", n}, {"k", k}, {"seed", opt.seed},
                  {"restarts", opt.restarts}, {"steps", opt.steps}};
  return strip_timing(m.finish(json(hill_climb(n, k, opt)))).dump();
}

/// `run` produces one report text; it is invoked twice and compared.
inline CriterionResult determinism(const std::function<std::string()>& run) {
  CriterionResult r{11, "seeded hill-climb reports are identical", false, {}, 0};
  const std::string a = run();
  const std::string b = run();
  r.passed = !a.empty() && a == b;
  r.detail = r.passed ? std::to_string(a.size()) + " bytes identical" : "reports differ";
  return r;
}

}  // namespace criteria

struct TimedCriterion {
  std::function<CriterionResult()> run;
  double limit_seconds;
};

/// Runs the whole suite; a criterion fails if it exceeds its time limit.
/// `hill_runner` overrides how the determinism criterion obtains a report.
inline std::vector<CriterionResult> run_acceptance(std::function<std::string()> hill_runner = {}) {
  if (!hill_runner)
    hill_runner = [] { return criteria::hill_report_without_timing(20, 4, {4, 4000, 42}); };
  std::vector<LemmaCorpusEntry> corpus;
  const std::vector<TimedCriterion> suite{
      {criteria::construction_formula, 5},
      {criteria::constructions_fan_free, 5},
      {criteria::exhaustive_k2, 120},
      {criteria::degseq_k4, 60},
      {criteria::weight_conservation, 600},
      {[&] {
         corpus = lemma_corpus();
         return criteria::lemma_bounds(corpus);
       },
       120},
      {[&] { return criteria::variant_edge_bound(corpus); }, 600},
      {criteria::counting_identities, 600},
      {criteria::hypergraph_consistency, 600},
      {criteria::matching_oracle, 600},
      {[&] { return criteria::determinism(hill_runner); }, 600},
  };
  std::vector<CriterionResult> out;
  for (const auto& c : suite) {
    const auto start = std::chrono::steady_clock::now();
    CriterionResult r;
    try {
      r = c.run();
    } catch (const std::exception& e) {
      r.passed = false;
      r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (r.seconds > c.limit_seconds) {
      r.passed = false;
      r.detail += " [over time limit of " + std::to_string(static_cast<int>(c.limit_seconds)) + "s]";
    }
    if (r.id == 0) r.id = static_cast<int>(out.size()) + 1;
    out.push_back(std::move(r));
  }
  return out;
}

inline void print_acceptance(std::ostream& os, const std::vector<CriterionResult>& results) {
  for (const auto& r : results) {
    char secs[32];
    std::snprintf(secs, sizeof secs, "%.2fs", r.seconds);
    os << (r.passed ? "PASS" : "FAIL") << "  [" << r.id << "] " << r.name << "  (" << secs << ")  "
       << r.detail << "\n";
  }
}

// ---------------------------------------------------------------------------
// Corpus verification

struct BatchSummary {
  int rows = 0;
  int errors = 0;
};

/// One CSV row per input line:
/// line,n,edges,triangles,fan_free,max_f,lemma_verdict,error
/// Malformed lines become error rows and a warning on `warn`; blank lines are skipped.
inline BatchSummary batch_verify(std::istream& corpus, int k, std::ostream& csv, std::ostream& warn) {
  if (k < 2) throw input_error("batch_verify: k must be >= 2");
  csv << "line,n,edges,triangles,fan_free,max_f,lemma_verdict,error\n";
  BatchSummary s;
  std::string line;
  int lineno = 0;
  while (std::getline(corpus, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    ++s.rows;
    try {
      const Graph g = graph6_decode(line);
      const bool free = is_fan_free(g, k);
      const WeightLedger l = weigh(g, k, WeightScheme::Basic);
      Rational max_f(0);
      for (const auto& f : l.f()) max_f = std::max(max_f, f);
      std::string verdict = "n/a";
      if (free) verdict = lemma_suite(g, k).passed() ? "pass" : "fail";
      csv << lineno << "," << g.order() << "," << g.size() << "," << triangle_count(g) << ","
          << (free ? "yes" : "no") << "," << to_fraction_string(max_f) << "," << verdict << ",\n";
    } catch (const std::exception& e) {
      ++s.errors;
      std::string msg = e.what();
      for (char& c : msg)
        if (c == ',' || c == '\n' || c == '"') c = ' ';
      csv << lineno << ",,,,,,error," << msg << "\n";
      warn << "warning: line " << lineno << ": " << e.what() << "\n";
    }
  }
  return s;
}

}  // namespace fanfree
