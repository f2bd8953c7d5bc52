#pragma once

// JSON encodings of result types. Fractions are always "p/q" strings.

#include <chrono>
#include <cstdint>
#include <ctime>
#include <string>
#include <string_view>

#include "json.hpp"

#include "fanfree/constructions.hpp"
#include "fanfree/error.hpp"
#include "fanfree/graph6.hpp"
#include "fanfree/matching.hpp"
#include "fanfree/rational.hpp"
#include "fanfree/search.hpp"
#include "fanfree/triangles.hpp"
#include "fanfree/weights.hpp"

namespace fanfree {

using nlohmann::json;

inline constexpr std::string_view kVersion = "0.3.1";

inline Rational parse_fraction(std::string_view s) {
  const auto slash = s.find('/');
  try {
    if (slash == std::string_view::npos) return Rational(std::stoll(std::string(s)));
    return Rational(std::stoll(std::string(s.substr(0, slash))),
                    std::stoll(std::string(s.substr(slash + 1))));
  } catch (const std::exception&) {
    throw input_error("not a fraction: '" + std::string(s) + "'");
  }
}

inline json fraction_json(const Rational& r) { return to_fraction_string(r); }

inline json fractions_json(const std::vector<Rational>& v) {
  json a = json::array();
  for (const auto& r : v) a.push_back(to_fraction_string(r));
  return a;
}

inline std::vector<Rational> fractions_from(const json& j) {
  std::vector<Rational> out;
  for (const auto& e : j) out.push_back(parse_fraction(e.get<std::string>()));
  return out;
}

/// 64-bit FNV-1a, rendered as 16 hex digits.
inline std::string fnv1a64(std::string_view data) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  static constexpr char hex[] = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i, h >>= 4) out[static_cast<std::size_t>(i)] = hex[h & 15U];
  return out;
}

inline std::string iso8601_utc(std::chrono::system_clock::time_point t) {
  const std::time_t tt = std::chrono::system_clock::to_time_t(t);
  std::tm tm{};
  gmtime_r(&tt, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

// ---------------------------------------------------------------------------

inline void to_json(json& j, const Edge& e) { j = json::array({e.u, e.v}); }
inline void from_json(const json& j, Edge& e) { e = Edge(j.at(0).get<int>(), j.at(1).get<int>()); }

inline void to_json(json& j, const FormulaResult& r) {
  j = json{{"value", r.value}, {"formula_id", r.formula_id}};
  j["valid_from"] = r.valid_from ? json(*r.valid_from) : json(nullptr);
}

inline void from_json(const json& j, FormulaResult& r) {
  r.value = j.at("value").get<std::int64_t>();
  r.formula_id = j.at("formula_id").get<std::string>();
  r.valid_from.reset();
  if (!j.at("valid_from").is_null()) r.valid_from = j.at("valid_from").get<std::int64_t>();
}

inline void to_json(json& j, const GoodmanCheck& g) {
  j = json{{"lhs", g.lhs}, {"rhs", g.rhs}, {"holds", g.holds}};
}

inline void from_json(const json& j, GoodmanCheck& g) {
  g.lhs = j.at("lhs").get<std::int64_t>();
  g.rhs = j.at("rhs").get<std::int64_t>();
  g.holds = j.at("holds").get<bool>();
}

inline void to_json(json& j, const FanWitness& w) { j = json{{"center", w.center}, {"pairs", w.pairs}}; }

inline void from_json(const json& j, FanWitness& w) {
  w.center = j.at("center").get<int>();
  w.pairs = j.at("pairs").get<std::vector<Edge>>();
}

inline void to_json(json& j, const SearchReport& r) {
  j = json{{"n", r.n},
           {"k", r.k},
           {"mode", std::string(to_string(r.mode))},
           {"best_value", r.best_value},
           {"witnesses", r.witnesses},
           {"explored", r.explored},
           {"pruned", r.pruned},
           {"wall_time_ms", r.wall_time_ms},
           {"exact", r.exact}};
}

inline void from_json(const json& j, SearchReport& r) {
  r.n = j.at("n").get<int>();
  r.k = j.at("k").get<int>();
  const auto mode = j.at("mode").get<std::string>();
  if (mode == "exhaustive") r.mode = SearchMode::Exhaustive;
  else if (mode == "degseq") r.mode = SearchMode::DegSeq;
  else if (mode == "hill") r.mode = SearchMode::HillClimb;
  else throw input_error("unknown search mode '" + mode + "'");
  r.best_value = j.at("best_value").get<std::int64_t>();
  r.witnesses = j.at("witnesses").get<std::vector<std::string>>();
  r.explored = j.at("explored").get<std::int64_t>();
  r.pruned = j.at("pruned").get<std::int64_t>();
  r.wall_time_ms = j.at("wall_time_ms").get<double>();
  r.exact = j.at("exact").get<bool>();
}

inline void to_json(json& j, const DegseqStats& s) {
  j = json{{"graphs", s.graphs},
           {"min_triangles", s.min_triangles},
           {"max_triangles", s.max_triangles},
           {"min_witnesses", s.min_witnesses},
           {"max_witnesses", s.max_witnesses},
           {"explored", s.explored}};
}

inline void from_json(const json& j, DegseqStats& s) {
  s.graphs = j.at("graphs").get<std::int64_t>();
  s.min_triangles = j.at("min_triangles").get<std::int64_t>();
  s.max_triangles = j.at("max_triangles").get<std::int64_t>();
  s.min_witnesses = j.at("min_witnesses").get<std::vector<std::string>>();
  s.max_witnesses = j.at("max_witnesses").get<std::vector<std::string>>();
  s.explored = j.at("explored").get<std::int64_t>();
}

inline void to_json(json& j, const DegseqTriangleBounds& b) {
  auto opt = [](const auto& o) { return o ? json(*o) : json(nullptr); };
  auto g6 = [](const std::optional<Graph>& g) { return g ? json(graph6_encode(*g)) : json(nullptr); };
  j = json{{"k", b.k},
           {"s", b.s},
           {"min_bound", opt(b.min_bound)},
           {"min_runner_up", opt(b.min_runner_up)},
           {"max_bound", b.max_bound},
           {"shrink_bound", fraction_json(b.shrink_bound)},
           {"min_extremal", g6(b.min_extremal)},
           {"max_extremal", g6(b.max_extremal)}};
}

inline void from_json(const json& j, DegseqTriangleBounds& b) {
  auto opt = [&](const char* key) -> std::optional<std::int64_t> {
    if (j.at(key).is_null()) return std::nullopt;
    return j.at(key).get<std::int64_t>();
  };
  auto g6 = [&](const char* key) -> std::optional<Graph> {
    if (j.at(key).is_null()) return std::nullopt;
    return graph6_decode(j.at(key).get<std::string>());
  };
  b.k = j.at("k").get<int>();
  b.s = j.at("s").get<int>();
  b.min_bound = opt("min_bound");
  b.min_runner_up = opt("min_runner_up");
  b.max_bound = j.at("max_bound").get<std::int64_t>();
  b.shrink_bound = parse_fraction(j.at("shrink_bound").get<std::string>());
  b.min_extremal = g6("min_extremal");
  b.max_extremal = g6("max_extremal");
}

inline void to_json(json& j, const LemmaViolation& v) {
  j = json{{"check", v.check}, {"u", v.u}, {"v", v.v}, {"detail", v.detail}};
}

inline void from_json(const json& j, LemmaViolation& v) {
  v.check = j.at("check").get<std::string>();
  v.u = j.at("u").get<int>();
  v.v = j.at("v").get<int>();
  v.detail = j.at("detail").get<std::string>();
}

inline void to_json(json& j, const LemmaReport& r) {
  j = json{{"k", r.k},
           {"checks", r.checks},
           {"violations", r.violations},
           {"tight_vertices", r.tight_vertices},
           {"unchecked_tight", r.unchecked_tight},
           {"max_f", fraction_json(r.max_f)},
           {"vertex_bounds_applicable", r.vertex_bounds_applicable},
           {"passed", r.passed()}};
}

inline void from_json(const json& j, LemmaReport& r) {
  r.k = j.at("k").get<int>();
  r.checks = j.at("checks").get<std::int64_t>();
  r.violations = j.at("violations").get<std::vector<LemmaViolation>>();
  r.tight_vertices = j.at("tight_vertices").get<int>();
  r.unchecked_tight = j.at("unchecked_tight").get<int>();
  r.max_f = parse_fraction(j.at("max_f").get<std::string>());
  r.vertex_bounds_applicable = j.at("vertex_bounds_applicable").get<bool>();
}

// ---------------------------------------------------------------------------
// Flattened views of the larger module results.

struct ClassificationView {
  int k = 0;
  struct Row {
    Edge edge{0, 1};
    int codegree = 0;
    char cls = 'L';
    friend bool operator==(const Row&, const Row&) = default;
  };
  std::vector<Row> edges;
  std::vector<Edge> zero_codegree;

  static ClassificationView of(const EdgeClassification& c) {
    ClassificationView v;
    v.k = c.k();
    for (const Edge& e : c.edges())
      v.edges.push_back({e, c.triangles().codegree(e.u, e.v), to_char(c.of(e.u, e.v))});
    v.zero_codegree = c.zero_codegree();
    return v;
  }
  friend bool operator==(const ClassificationView&, const ClassificationView&) = default;
};

inline void to_json(json& j, const ClassificationView& c) {
  json rows = json::array();
  for (const auto& r : c.edges)
    rows.push_back({{"edge", r.edge}, {"codegree", r.codegree}, {"class", std::string(1, r.cls)}});
  j = json{{"k", c.k}, {"edges", rows}, {"zero_codegree", c.zero_codegree}};
}

inline void from_json(const json& j, ClassificationView& c) {
  c.k = j.at("k").get<int>();
  c.edges.clear();
  for (const auto& r : j.at("edges"))
    c.edges.push_back({r.at("edge").get<Edge>(), r.at("codegree").get<int>(),
                       r.at("class").get<std::string>().at(0)});
  c.zero_codegree = j.at("zero_codegree").get<std::vector<Edge>>();
}

struct WeightsView {
  int k = 0;
  std::string scheme;
  std::vector<Triple> triangles;
  std::vector<std::array<Rational, 3>> weights;
  std::vector<Rational> f;
  std::vector<Rational> loss;
  Rational total;

  static WeightsView of(const WeightLedger& l) {
    return {l.k(), std::string(to_string(l.scheme())), l.triangles(), l.weights(), l.f(), l.loss(),
            l.total()};
  }
  friend bool operator==(const WeightsView&, const WeightsView&) = default;
};

inline void to_json(json& j, const WeightsView& w) {
  json tris = json::array();
  for (std::size_t i = 0; i < w.triangles.size(); ++i) {
    json ws = json::array();
    for (const auto& r : w.weights[i]) ws.push_back(to_fraction_string(r));
    tris.push_back({{"triangle", w.triangles[i]}, {"weights", ws}});
  }
  j = json{{"k", w.k},          {"scheme", w.scheme},        {"triangles", tris},
           {"f", fractions_json(w.f)}, {"loss", fractions_json(w.loss)}, {"total", fraction_json(w.total)}};
}

inline void from_json(const json& j, WeightsView& w) {
  w.k = j.at("k").get<int>();
  w.scheme = j.at("scheme").get<std::string>();
  w.triangles.clear();
  w.weights.clear();
  for (const auto& t : j.at("triangles")) {
    w.triangles.push_back(t.at("triangle").get<Triple>());
    const auto ws = fractions_from(t.at("weights"));
    if (ws.size() != 3) throw input_error("triangle weight entry must have 3 fractions");
    w.weights.push_back({ws[0], ws[1], ws[2]});
  }
  w.f = fractions_from(j.at("f"));
  w.loss = fractions_from(j.at("loss"));
  w.total = parse_fraction(j.at("total").get<std::string>());
}

// ---------------------------------------------------------------------------
// Run manifest

struct RunManifest {
  std::string subcommand;
  json parameters = json::object();
  /// name -> FNV-1a 64 hex digest
  json input_digests = json::object();
  std::chrono::system_clock::time_point started = std::chrono::system_clock::now();
  std::chrono::steady_clock::time_point started_steady = std::chrono::steady_clock::now();

  void add_input(const std::string& name, std::string_view bytes) { input_digests[name] = fnv1a64(bytes); }

  /// Wraps a result payload: payload fields stay at top level, the manifest
  /// sits under "manifest".
  json finish(json payload) const {
    const auto end = std::chrono::system_clock::now();
    const double wall =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started_steady).count();
    json keys = json::array();
    for (auto it = payload.begin(); it != payload.end(); ++it) keys.push_back(it.key());
    payload["manifest"] = {{"subcommand", subcommand},
                           {"parameters", parameters},
                           {"version", std::string(kVersion)},
                           {"input_digests", input_digests},
                           {"payload_keys", keys},
                           {"timing",
                            {{"started_at", iso8601_utc(started)},
                             {"finished_at", iso8601_utc(end)},
                             {"wall_time_ms", wall}}}};
    return payload;
  }
};

/// Drops every wall-clock field so that two reports of identical runs compare equal.
inline json strip_timing(json j) {
  if (j.is_object()) {
    j.erase("timing");
    j.erase("wall_time_ms");
    for (auto& [key, value] : j.items()) value = strip_timing(value);
  } else if (j.is_array()) {
    for (auto& value : j) value = strip_timing(value);
  }
  return j;
}

}  // namespace fanfree
