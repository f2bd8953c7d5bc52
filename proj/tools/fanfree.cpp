#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "fanfree/fanfree.hpp"

namespace ff = fanfree;
using ff::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitForbidden = 1;
constexpr int kExitPartial = 2;
constexpr int kExitUsage = 64;
constexpr int kExitData = 65;

struct Options {
  int n = 0;
  int k = 0;
  int s = 0;
  std::string kind;
  std::string scheme = "basic";
  std::string mode;
  std::string graph;
  std::string triples;
  std::string degrees;
  std::string corpus;
  std::string out;
  std::int64_t budget = 0;
  std::uint64_t seed = 42;
  int restarts = 20;
  std::int64_t steps = 20000;
  int threads = 0;
  bool lemmas = false;
  bool as_json = false;
  bool with_triples = false;
};

std::string slurp(std::istream& is) { return {std::istreambuf_iterator<char>(is), {}}; }

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ff::parse_error("cannot read '" + path + "'", 0);
  return slurp(in);
}

// The first non-blank line of the input, from --graph or stdin.
std::string graph_text(const Options& o, ff::RunManifest& m) {
  std::string text = o.graph.empty() ? slurp(std::cin) : o.graph;
  m.add_input(o.graph.empty() ? "stdin" : "graph", text);
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") != std::string::npos) return line;
  }
  throw ff::parse_error("no graph6 input", 0);
}

ff::Graph read_graph(const Options& o, ff::RunManifest& m) { return ff::graph6_decode(graph_text(o, m)); }

class Output {
public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary);
      if (!file_) throw ff::parse_error("cannot write '" + path + "'", 0);
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }
  void json_report(const json& j) { stream() << j.dump(2) << "\n"; }

private:
  std::ofstream file_;
};

ff::WeightScheme parse_scheme(const std::string& s) {
  if (s == "basic") return ff::WeightScheme::Basic;
  if (s == "variant") return ff::WeightScheme::Variant;
  throw ff::input_error("unknown weight scheme '" + s + "' (basic|variant)");
}

std::vector<int> parse_degrees(const std::string& s) {
  std::vector<int> d;
  std::string tok;
  std::istringstream is(s);
  while (std::getline(is, tok, ',')) {
    try {
      std::size_t used = 0;
      d.push_back(std::stoi(tok, &used));
      if (tok.find_first_not_of(" ", used) != std::string::npos) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw ff::input_error("bad degree '" + tok + "'");
    }
  }
  return d;
}

int run(const std::string& cmd, const Options& o) {
  ff::RunManifest m;
  m.subcommand = cmd;
  Output out(o.out);

  if (cmd == "formula" || cmd == "ex3") {
    m.parameters = {{"n", o.n}, {"k", o.k}};
    const ff::FormulaResult r = cmd == "formula" ? ff::ex_k3_fan(o.n, o.k) : ff::ex3_star(o.n, o.k);
    out.json_report(m.finish(json(r)));
    return kExitOk;
  }

  if (cmd == "construct") {
    const auto kind = ff::parse_construction_kind(o.kind);
    if (!kind) throw ff::input_error("unknown construction '" + o.kind + "'");
    const ff::Graph g = ff::build({*kind, o.n, o.k});
    if (o.as_json) {
      m.parameters = {{"kind", o.kind}, {"n", o.n}, {"k", o.k}};
      out.json_report(m.finish({{"graph6", ff::graph6_encode(g)},
                                {"n", g.order()},
                                {"edges", g.size()},
                                {"triangles", ff::triangle_count(g)}}));
    } else {
      out.stream() << ff::graph6_encode(g) << "\n";
    }
    return kExitOk;
  }

  if (cmd == "count") {
    const ff::Graph g = read_graph(o, m);
    if (o.with_triples) {
      ff::write_triples(out.stream(), ff::lift(g));
      return kExitOk;
    }
    out.json_report(m.finish({{"n", g.order()},
                              {"edges", g.size()},
                              {"triangles", ff::triangle_count(g)},
                              {"cherries", ff::cherry_count(g)}}));
    return kExitOk;
  }

  if (cmd == "goodman") {
    const ff::Graph g = read_graph(o, m);
    out.json_report(m.finish(json(ff::goodman_check(g))));
    return kExitOk;
  }

  if (cmd == "classify") {
    const ff::Graph g = read_graph(o, m);
    m.parameters = {{"k", o.k}};
    out.json_report(m.finish(json(ff::ClassificationView::of(ff::classify_edges(g, o.k)))));
    return kExitOk;
  }

  if (cmd == "weights") {
    const ff::Graph g = read_graph(o, m);
    m.parameters = {{"k", o.k}, {"scheme", o.scheme}, {"lemmas", o.lemmas}};
    json payload = ff::WeightsView::of(ff::weigh(g, o.k, parse_scheme(o.scheme)));
    if (o.lemmas) {
      const ff::LemmaReport rep = ff::lemma_suite(g, o.k);
      payload["lemmas"] = rep;
      out.json_report(m.finish(payload));
      return rep.passed() ? kExitOk : kExitForbidden;
    }
    out.json_report(m.finish(payload));
    return kExitOk;
  }

  if (cmd == "check-fan") {
    const ff::Graph g = read_graph(o, m);
    m.parameters = {{"k", o.k}};
    const auto w = ff::contains_fan(g, o.k);
    const std::string label = "F" + std::to_string(o.k);
    if (o.as_json) {
      out.json_report(m.finish({{"fan_free", !w}, {"witness", w ? json(*w) : json(nullptr)}}));
    } else if (w) {
      out.stream() << "contains " << label << ": center " << w->center;
      for (const ff::Edge& e : w->pairs) out.stream() << " " << e.u << "-" << e.v;
      out.stream() << "\n";
    } else {
      out.stream() << label << "-free\n";
    }
    return w ? kExitForbidden : kExitOk;
  }

  if (cmd == "check-star") {
    ff::TripleSystem ts;
    if (!o.triples.empty()) {
      const std::string text = read_file(o.triples);
      m.add_input("triples", text);
      std::istringstream is(text);
      try {
        ts = ff::read_triples(is);
      } catch (const ff::input_error& e) {
        throw ff::parse_error(e.what(), 0);
      }
    } else {
      ts = ff::lift(read_graph(o, m));
    }
    m.parameters = {{"k", o.k}};
    const bool star = ff::contains_star(ts, o.k);
    if (o.as_json)
      out.json_report(m.finish({{"star_free", !star}, {"triples", ts.size()}}));
    else
      out.stream() << (star ? "contains " : "") << "star" << o.k << (star ? "" : "-free") << "\n";
    return star ? kExitForbidden : kExitOk;
  }

  if (cmd == "search") {
    m.parameters = {{"mode", o.mode}, {"n", o.n}, {"k", o.k}};
    ff::SearchReport rep;
    if (o.mode == "exhaustive") {
      m.parameters["budget"] = o.budget;
      rep = ff::exhaustive_extremal(o.n, o.k, o.budget, o.threads);
    } else if (o.mode == "degseq") {
      rep = ff::degseq_search(o.n, o.k);
    } else if (o.mode == "hill") {
      m.parameters["seed"] = o.seed;
      m.parameters["restarts"] = o.restarts;
      m.parameters["steps"] = o.steps;
      rep = ff::hill_climb(o.n, o.k, {o.restarts, o.steps, o.seed});
    } else {
      throw ff::input_error("unknown search mode '" + o.mode + "' (exhaustive|degseq|hill)");
    }
    out.json_report(m.finish(json(rep)));
    return rep.mode == ff::SearchMode::HillClimb || rep.exact ? kExitOk : kExitPartial;
  }

  if (cmd == "degseq") {
    if (!o.degrees.empty()) {
      m.parameters = {{"degrees", o.degrees}};
      const ff::DegreeSequence seq(parse_degrees(o.degrees));
      out.json_report(m.finish(json(ff::degseq_enumerate(seq))));
    } else {
      m.parameters = {{"k", o.k}, {"s", o.s}};
      out.json_report(m.finish(json(ff::degseq_triangle_bounds(o.k, o.s))));
    }
    return kExitOk;
  }

  if (cmd == "verify") {
    if (!o.corpus.empty()) {
      const std::string text = read_file(o.corpus);
      std::istringstream is(text);
      ff::batch_verify(is, o.k, out.stream(), std::cerr);
      return kExitOk;
    }
    const auto results = ff::run_acceptance();
    ff::print_acceptance(out.stream(), results);
    for (const auto& r : results)
      if (!r.passed) return kExitForbidden;
    return kExitOk;
  }

  throw ff::input_error("unknown subcommand '" + cmd + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Triangles in fan-free graphs: formulas, constructions, weights and search"};
  app.set_version_flag("--version", std::string(ff::kVersion));
  app.require_subcommand(1);
  Options o;

  auto add_out = [&](CLI::App* c) { c->add_option("--out", o.out, "Write the report to this file"); };
  auto add_graph = [&](CLI::App* c) {
    c->add_option("-g,--graph", o.graph, "graph6 string (default: first line of stdin)");
  };
  auto add_k = [&](CLI::App* c, bool required = true) {
    auto* opt = c->add_option("--k", o.k, "Fan order k");
    if (required) opt->required();
  };

  for (const char* name : {"formula", "ex3"}) {
    auto* c = app.add_subcommand(name, std::string(name) == "formula"
                                           ? "Largest triangle count of an F_k-free graph (closed form)"
                                           : "Largest k-star-free 3-graph (closed form)");
    c->add_option("--n", o.n, "Vertex count")->required();
    add_k(c);
    add_out(c);
  }

  {
    auto* c = app.add_subcommand("construct", "Print a construction as graph6");
    c->add_option("--kind", o.kind, "odd|even|hk|hkprime|gl|k4packing")->required();
    c->add_option("--n", o.n, "Vertex count (omit for the fixed-size kinds)");
    add_k(c);
    c->add_flag("--json", o.as_json, "JSON report instead of bare graph6");
    add_out(c);
  }
  {
    auto* c = app.add_subcommand("count", "Triangle and cherry counts");
    add_graph(c);
    c->add_flag("--triples", o.with_triples, "Print the triangles as a triple list");
    add_out(c);
  }
  {
    auto* c = app.add_subcommand("goodman", "Evaluate the complement counting identity");
    add_graph(c);
    add_out(c);
  }
  {
    auto* c = app.add_subcommand("classify", "Heavy/medium/light edge classes");
    add_graph(c);
    add_k(c);
    add_out(c);
  }
  {
    auto* c = app.add_subcommand("weights", "Triangle weights and vertex totals");
    add_graph(c);
    add_k(c);
    c->add_option("--scheme", o.scheme, "basic|variant");
    c->add_flag("--lemmas", o.lemmas, "Also evaluate all per-vertex and per-edge bounds");
    add_out(c);
  }
  {
    auto* c = app.add_subcommand("check-fan", "Look for k triangles sharing one vertex");
    add_graph(c);
    add_k(c);
    c->add_flag("--json", o.as_json, "JSON report");
    add_out(c);
  }
  {
    auto* c = app.add_subcommand("check-star", "Look for a k-star in a 3-graph");
    add_graph(c);
    c->add_option("--triples", o.triples, "File of 'u v w' lines (default: lift of a graph6 input)");
    add_k(c);
    c->add_flag("--json", o.as_json, "JSON report");
    add_out(c);
  }
  {
    auto* c = app.add_subcommand("search", "Exhaustive, degree-sequence or hill-climbing search");
    c->add_option("--mode", o.mode, "exhaustive|degseq|hill")->required();
    c->add_option("--n", o.n, "Vertex count")->required();
    add_k(c);
    c->add_option("--budget", o.budget, "Node limit for exhaustive mode (0 = none)");
    c->add_option("--seed", o.seed, "Seed for hill mode");
    c->add_option("--restarts", o.restarts, "Hill-climb restarts");
    c->add_option("--steps", o.steps, "Moves per restart");
    c->add_option("--threads", o.threads, "Worker threads (default: FANFREE_THREADS or all cores)");
    add_out(c);
  }
  {
    auto* c = app.add_subcommand("degseq", "Enumerate a degree sequence, or the (k,s) triangle bounds");
    c->add_option("--degrees", o.degrees, "Comma-separated degree sequence");
    add_k(c, false);
    c->add_option("--s", o.s, "Shrink parameter for the bounds");
    add_out(c);
  }
  {
    auto* c = app.add_subcommand("verify", "Run the acceptance suite, or verify a graph6 corpus");
    c->add_option("--corpus", o.corpus, "File of graph6 lines; writes CSV");
    add_k(c, false);
    add_out(c);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  const std::string cmd = app.get_subcommands().front()->get_name();
  try {
    if (cmd == "verify" && !o.corpus.empty() && o.k < 2) throw ff::input_error("verify --corpus needs --k >= 2");
    if (cmd == "degseq" && o.degrees.empty() && o.k == 0) throw ff::input_error("degseq needs --degrees or --k");
    return run(cmd, o);
  } catch (const ff::parse_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitData;
  } catch (const ff::input_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitData;
  }
}
