#include "dichro/cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <json.hpp>
#include <map>
#include <optional>

#include "dichro/acceptance.hpp"
#include "dichro/blowup_orientation.hpp"
#include "dichro/bounds.hpp"
#include "dichro/certifier.hpp"
#include "dichro/coloring.hpp"
#include "dichro/errors.hpp"
#include "dichro/fractional.hpp"
#include "dichro/graph_io.hpp"
#include "dichro/kneser.hpp"
#include "dichro/parallel.hpp"

namespace dichro {

using ojson = nlohmann::ordered_json;

namespace {

// Thrown by a command whose property or certification does not hold; the
// report is still printed.
struct PropertyFailure {};

ojson arcs_json(const Digraph& d) {
  ojson a = ojson::array();
  for (const auto& [x, y] : d.arcs()) a.push_back({x, y});
  return a;
}

ojson sets_json(const std::vector<VertexSet>& sets) {
  ojson a = ojson::array();
  for (const auto& s : sets) a.push_back(s.elements());
  return a;
}

ojson rationals_json(const std::vector<Rational>& v) {
  ojson a = ojson::array();
  for (const auto& x : v) a.push_back(to_string(x));
  return a;
}

ojson cover_json(const CoverSolution& c) {
  ojson a = ojson::array();
  for (const auto& [s, w] : c.parts) a.push_back({{"set", s.elements()}, {"weight", to_string(w)}});
  return a;
}

std::uint64_t parse_count(const std::string& s, const std::string& what) {
  std::size_t used = 0;
  unsigned long long v = 0;
  try {
    if (s.empty() || s[0] == '-') throw std::invalid_argument(s);
    v = std::stoull(s, &used);
  } catch (const std::exception&) {
    throw InvalidArgument(what + ": expected a non-negative integer, got \"" + s + "\"");
  }
  if (used != s.size()) throw InvalidArgument(what + ": expected a non-negative integer, got \"" + s + "\"");
  return v;
}

std::uint32_t parse_small(const std::string& s, const std::string& what) {
  const auto v = parse_count(s, what);
  if (v > 1000000) throw InvalidArgument(what + " is too large");
  return static_cast<std::uint32_t>(v);
}

Rational parse_positive(const std::string& s, const std::string& what) {
  Rational r = parse_rational(s);
  if (sgn(r) <= 0) throw InvalidArgument(what + " must be positive");
  return r;
}

void expect_args(const std::vector<std::string>& args, std::size_t n, const std::string& usage) {
  if (args.size() != n) throw InvalidArgument("usage: " + usage);
}

void apply_budget(Limits& limits, const std::string& spec) {
  const auto eq = spec.find('=');
  if (eq == std::string::npos) throw InvalidArgument("--budget expects name=N");
  const std::string name = spec.substr(0, eq);
  const std::size_t value = parse_count(spec.substr(eq + 1), "--budget " + name);
  const std::map<std::string, std::size_t Limits::*> fields = {
      {"dp_vertices", &Limits::dp_vertices},
      {"lp_vertices", &Limits::lp_vertices},
      {"orientation_edges", &Limits::orientation_edges},
      {"enumeration_edges", &Limits::enumeration_edges},
      {"lp_columns", &Limits::lp_columns},
      {"principal_candidates", &Limits::principal_candidates},
      {"subset_checks", &Limits::subset_checks},
      {"graph_vertices", &Limits::graph_vertices},
  };
  const auto it = fields.find(name);
  if (it == fields.end()) throw InvalidArgument("unknown budget: " + name);
  limits.*(it->second) = value;
}

struct Options {
  std::string invariant, file, mode = "exact";
  std::uint64_t trials = 1000, seed = 0, max_tries = 1000;
  std::string t, d, out_path, embed_case = "auto", suite = "all", csv_path;
  bool strict = false;
  std::vector<std::string> words;
  unsigned threads = 0;
  std::vector<std::string> budgets;
};

ojson compute(const Options& o, const Limits& limits) {
  const auto in = read_graph_file(o.file);
  if (o.mode != "exact" && o.mode != "mc") throw InvalidArgument("--mode must be exact or mc");
  const bool exact = o.mode == "exact";
  ojson r;
  if (o.invariant == "chi") {
    const auto c = optimal_coloring(in.graph, limits);
    r["value"] = c.size;
    r["classes"] = sets_json(c.parts);
  } else if (o.invariant == "dichi") {
    const auto res = exact ? dichromatic_number_exact(in.graph, limits)
                           : dichromatic_lower_bound_mc(in.graph, o.trials, o.seed, limits);
    r["value"] = res.value;
    r["exact"] = res.exact;
    r["orientations_examined"] = res.orientations_examined;
    r["witness_arcs"] = arcs_json(res.witness);
  } else if (o.invariant == "chif") {
    const auto res = fractional_chromatic_with_dual(in.graph, limits);
    r["value"] = to_string(res.value);
    r["cover"] = cover_json(res.cover);
    r["dual"] = rationals_json(res.dual.w);
  } else if (o.invariant == "dichif") {
    const auto res = fractional_dichromatic(in.graph, exact ? SearchMode::exact : SearchMode::sampled, o.trials,
                                            o.seed, limits);
    r["value"] = to_string(res.value);
    r["exact"] = res.exact;
    r["orientations_examined"] = res.orientations_examined;
    if (res.witness) r["witness_arcs"] = arcs_json(*res.witness);
  } else if (o.invariant == "alphaf") {
    const auto res = fractional_independence(in.graph, limits);
    r["value"] = to_string(res.value);
    r["weights"] = rationals_json(res.w);
  } else if (o.invariant == "digraph-chi" || o.invariant == "digraph-chif") {
    if (!in.digraph) throw InvalidArgument(o.invariant + " needs a file with \"arcs\"");
    if (o.invariant == "digraph-chi") {
      const auto c = optimal_acyclic_coloring(*in.digraph, limits);
      r["value"] = c.size;
      r["classes"] = sets_json(c.parts);
    } else {
      const auto res = digraph_fractional_chromatic_with_dual(*in.digraph, limits);
      r["value"] = to_string(res.value);
      r["cover"] = cover_json(res.cover);
      r["dual"] = rationals_json(res.dual.w);
    }
  } else {
    throw InvalidArgument("unknown invariant: " + o.invariant);
  }
  return r;
}

Weighting weights_or_uniform(const GraphInput& in) {
  return in.weights ? *in.weights : Weighting::uniform(in.graph.order());
}

ojson certify(const Options& o, const Limits& limits) {
  if (o.t.empty() || o.d.empty()) throw InvalidArgument("certify needs --t and --d");
  const auto in = read_graph_file(o.file);
  const Rational t = parse_positive(o.t, "--t");
  const Rational d = parse_rational(o.d);
  const auto order = ranked_order(weights_or_uniform(in));
  ojson r;
  try {
    const auto c = find_good_orientation(in.graph, order, t, d, o.max_tries, o.seed, limits);
    r["certified"] = c.certified;
    r["tries"] = c.tries;
    r["sets_checked"] = c.sets_checked;
    r["arcs"] = arcs_json(c.digraph);
  } catch (const TriesExhausted& e) {
    r["certified"] = false;
    r["tries"] = e.tries();
    r["error"] = e.what();
    throw std::make_pair(r, PropertyFailure{});
  }
  return r;
}

ojson certificate(const Options& o, const Limits& limits) {
  const auto in = read_graph_file(o.file);
  CertificateParams p;
  p.seed = o.seed;
  p.max_tries = o.max_tries;
  p.weights = in.weights;
  if (o.strict) {
    p.mode = CertificateMode::strict;
    if (!o.t.empty()) p.t = parse_positive(o.t, "--t");
    if (!o.d.empty()) throw InvalidArgument("--d is derived from t in strict mode");
  } else {
    if (o.t.empty() || o.d.empty()) throw InvalidArgument("theorem13 needs --strict or both --t and --d");
    p.mode = CertificateMode::relaxed;
    p.t = parse_positive(o.t, "--t");
    p.d = parse_rational(o.d);
  }
  ojson r;
  try {
    const auto c = fractional_dichromatic_certificate(in.graph, p, limits);
    r["mode"] = o.strict ? "strict" : "relaxed";
    r["t"] = to_string(c.t);
    r["d"] = to_string(c.d);
    r["weights"] = rationals_json(c.weights.values());
    ojson hyp = ojson::array();
    for (const auto& h : c.hypotheses) hyp.push_back({{"name", h.name}, {"holds", h.holds}});
    r["hypotheses"] = hyp;
    r["orientation_certified"] = c.orientation && c.orientation->certified;
    if (c.orientation) {
      r["tries"] = c.orientation->tries;
      r["arcs"] = arcs_json(c.orientation->digraph);
    }
    r["max_acyclic_weight"] = to_string(c.max_acyclic_weight);
    r["heaviest_acyclic_set"] = c.heaviest_acyclic_set.elements();
    r["weight_cap"] = to_string(c.weight_cap);
    r["weight_cap_holds"] = c.weight_cap_holds;
    r["ratio"] = to_string(c.ratio);
    if (c.digraph_fractional) r["digraph_fractional_chromatic"] = to_string(*c.digraph_fractional);
    r["certified"] = c.certified;
    if (!c.certified) throw std::make_pair(r, PropertyFailure{});
  } catch (const HypothesesNotMet& e) {
    r["mode"] = "strict";
    r["certified"] = false;
    r["failed_hypotheses"] = e.failed();
    throw std::make_pair(r, PropertyFailure{});
  } catch (const TriesExhausted& e) {
    r["certified"] = false;
    r["error"] = e.what();
    throw std::make_pair(r, PropertyFailure{});
  }
  return r;
}

EmbeddingCase parse_case(const std::string& s, std::uint32_t k, std::uint32_t t, std::uint32_t x) {
  if (s == "auto") return best_embedding_case(k, t, x);
  if (s == "general") return EmbeddingCase::general;
  if (s == "below-t") return EmbeddingCase::below_t;
  if (s == "equal-t") return EmbeddingCase::equal_t;
  throw InvalidArgument("--case must be auto, general, below-t or equal-t");
}

ojson construct(const Options& o, const Limits& limits) {
  const auto& a = o.words;
  if (a.empty()) throw InvalidArgument("construct needs a kind");
  Graph g;
  ojson r;
  if (a[0] == "kneser") {
    expect_args(a, 3, "construct kneser n k");
    g = kneser_graph(parse_small(a[1], "n"), parse_small(a[2], "k"), limits);
  } else if (a[0] == "complete") {
    expect_args(a, 2, "construct complete n");
    const auto n = parse_count(a[1], "n");
    if (n > limits.graph_vertices) throw BudgetExceeded("complete graph (vertices)", n, limits.graph_vertices);
    g = graphs::complete(n);
  } else if (a[0] == "blowup") {
    expect_args(a, 3, "construct blowup FILE m");
    g = blow_up(read_graph_file(a[1]).graph, parse_count(a[2], "m"), limits).graph;
  } else if (a[0] == "embed") {
    expect_args(a, 5, "construct embed n k t x");
    const auto n = parse_small(a[1], "n"), k = parse_small(a[2], "k"), t = parse_small(a[3], "t"),
               x = parse_small(a[4], "x");
    const auto w = kneser_blowup_embedding(n, k, t, x, parse_case(o.embed_case, k, t, x), limits);
    const auto check = verify_embedding(w);
    g = w.blowup.graph;
    r["case"] = to_string(w.kind);
    r["power"] = w.power;
    r["target"] = {w.target_n(), w.target_k()};
    ojson images = ojson::array();
    for (const auto& s : w.image) images.push_back(s);
    r["images"] = images;
    r["verified"] = check.ok;
    if (!check.ok) {
      r["reason"] = check.reason;
      throw std::make_pair(r, PropertyFailure{});
    }
  } else {
    throw InvalidArgument("unknown construction: " + a[0]);
  }
  r["n"] = g.order();
  r["m"] = g.edge_count();
  const std::string text = to_json(g);
  if (!o.out_path.empty()) {
    std::ofstream f(o.out_path, std::ios::binary);
    if (!f) throw InvalidArgument("cannot write " + o.out_path);
    f << text << "\n";
    r["written"] = o.out_path;
  } else {
    r["graph"] = ojson::parse(text);
  }
  return r;
}

ojson bounds(const Options& o) {
  const auto& a = o.words;
  if (a.empty()) throw InvalidArgument("bounds needs a query");
  ojson r;
  if (a[0] == "enl") {
    expect_args(a, 2, "bounds enl n");
    r["value"] = static_cast<double>(enl_bound(parse_count(a[1], "n")));
  } else if (a[0] == "bucg") {
    expect_args(a, 3, "bounds bucg n k");
    r["value"] = static_cast<double>(complete_blowup_bound(parse_count(a[1], "n"), parse_count(a[2], "k")));
    r["t"] = complete_blowup_t(parse_count(a[1], "n"), parse_count(a[2], "k"));
  } else if (a[0] == "kneser-z") {
    expect_args(a, 3, "bounds kneser-z n k");
    r["value"] = kneser_dichromatic_bound(parse_count(a[1], "n"), parse_count(a[2], "k"));
  } else if (a[0] == "lemma25") {
    expect_args(a, 2, "bounds lemma25 t");
    const Rational t = parse_positive(a[1], "t");
    const auto rep = union_bound_report(t, 64);
    r["d"] = static_cast<double>(rep.d);
    r["hypothesis_ok"] = rep.hypothesis_ok;
    r["total"] = static_cast<double>(rep.total);
    r["tail_bound"] = static_cast<double>(rep.tail_bound);
    ojson terms = ojson::array();
    for (const auto& term : rep.per_k)
      terms.push_back({{"k", term.k},
                       {"principal_sets", to_string(term.principal_sets)},
                       {"acyclic_bound", static_cast<double>(term.acyclic_bound)},
                       {"product", static_cast<double>(term.product)},
                       {"ratio_bound", static_cast<double>(term.ratio_bound)}});
    r["per_k"] = terms;
  } else if (a[0] == "fact") {
    expect_args(a, 3, "bounds fact t k");
    const Rational t = parse_positive(a[1], "t");
    const auto k = parse_count(a[2], "k");
    r["value"] = binomial_bound_check(t, k);
  } else if (a[0] == "lemma32") {
    expect_args(a, 3, "bounds lemma32 m k");
    const auto m = parse_count(a[1], "m"), k = parse_count(a[2], "k");
    const auto c = power_inequality(m, k);
    r["value"] = c.holds;
    r["lhs"] = static_cast<double>(c.lhs);
    r["rhs"] = c.rhs;
    r["failure_bound"] = to_string(blowup_failure_bound(m, c.rhs));
  } else {
    throw InvalidArgument("unknown bound: " + a[0]);
  }
  return r;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact and randomized dichromatic / fractional chromatic toolkit", "dichro"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--threads", o.threads, "worker threads (default: all cores)");
  app.add_option("--budget", o.budgets, "override a cap, name=N")->take_all();

  auto* c_compute = app.add_subcommand("compute", "compute an invariant");
  c_compute->add_option("invariant", o.invariant, "chi|dichi|chif|dichif|alphaf|digraph-chi|digraph-chif")->required();
  c_compute->add_option("file", o.file)->required();
  c_compute->add_option("--mode", o.mode, "exact|mc");
  c_compute->add_option("--trials", o.trials);
  c_compute->add_option("--seed", o.seed);

  auto* c_certify = app.add_subcommand("certify", "search for a certified orientation");
  c_certify->add_option("file", o.file)->required();
  c_certify->add_option("--t", o.t)->required();
  c_certify->add_option("--d", o.d)->required();
  c_certify->add_option("--seed", o.seed);
  c_certify->add_option("--max-tries", o.max_tries);

  auto* c_thm = app.add_subcommand("theorem13", "fractional dichromatic certificate");
  c_thm->add_option("file", o.file)->required();
  c_thm->add_flag("--strict", o.strict);
  c_thm->add_option("--t", o.t);
  c_thm->add_option("--d", o.d);
  c_thm->add_option("--seed", o.seed);
  c_thm->add_option("--max-tries", o.max_tries);

  auto* c_construct = app.add_subcommand("construct", "build a graph");
  c_construct->add_option("spec", o.words, "kneser n k | complete n | blowup FILE m | embed n k t x")->required();
  c_construct->add_option("--out", o.out_path);
  c_construct->add_option("--case", o.embed_case, "auto|general|below-t|equal-t (embed)");

  auto* c_bounds = app.add_subcommand("bounds", "evaluate a closed-form bound");
  c_bounds->add_option("query", o.words, "enl n | bucg n k | kneser-z n k | lemma25 t | fact t k | lemma32 m k")
      ->required();

  auto* c_verify = app.add_subcommand("verify-paper", "run the acceptance suite");
  c_verify->add_option("--suite", o.suite, "all|core|sparse|orient|kneser");
  c_verify->add_option("--seed", o.seed);
  c_verify->add_option("--csv", o.csv_path, "write the CSV table here instead of standard output");

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalid;
  }

  ojson report;
  report["command"] = args;
  report["seed"] = o.seed;
  const auto start = std::chrono::steady_clock::now();
  auto finish = [&](const ojson& result, const std::string& verdict) {
    report["result"] = result;
    report["verdict"] = verdict;
    report["timings"] = {{"seconds", std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count()}};
    out << report.dump(2) << "\n";
  };

  try {
    Limits limits;
    for (const auto& b : o.budgets) apply_budget(limits, b);
    set_thread_count(o.threads);

    if (c_verify->parsed()) {
      const auto results = run_acceptance(o.suite, o.seed, [&](const CriterionResult& r) { out << format_line(r) << "\n" << std::flush; });
      std::size_t passed = 0;
      for (const auto& r : results) passed += r.passed;
      out << passed << "/" << results.size() << " criteria passed\n";
      if (o.csv_path.empty()) {
        out << "\n" << format_csv(results);
      } else {
        std::ofstream f(o.csv_path, std::ios::binary);
        if (!f) throw InvalidArgument("cannot write " + o.csv_path);
        f << format_csv(results);
      }
      return passed == results.size() ? kExitOk : kExitFailure;
    }

    ojson result;
    if (c_compute->parsed()) {
      report["parameters"] = {{"invariant", o.invariant}, {"file", o.file}, {"mode", o.mode}, {"trials", o.trials}};
      result = compute(o, limits);
    } else if (c_certify->parsed()) {
      report["parameters"] = {{"file", o.file}, {"t", o.t}, {"d", o.d}, {"max_tries", o.max_tries}};
      result = certify(o, limits);
    } else if (c_thm->parsed()) {
      report["parameters"] = {{"file", o.file}, {"strict", o.strict}, {"t", o.t}, {"d", o.d}, {"max_tries", o.max_tries}};
      result = certificate(o, limits);
    } else if (c_construct->parsed()) {
      report["parameters"] = {{"spec", o.words}, {"case", o.embed_case}};
      result = construct(o, limits);
    } else if (c_bounds->parsed()) {
      report["parameters"] = {{"query", o.words}};
      result = bounds(o);
    }
    finish(result, "ok");
    return kExitOk;
  } catch (const std::pair<ojson, PropertyFailure>& failure) {
    finish(failure.first, "failed");
    return kExitFailure;
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << "\n";
    return kExitBudget;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const InvalidArgument& e) {
    err << "invalid input: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const TriesExhausted& e) {
    err << "tries exhausted: " << e.what() << "\n";
    return kExitFailure;
  } catch (const HypothesesNotMet& e) {
    err << e.what() << "\n";
    return kExitFailure;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
}

}  // namespace dichro
