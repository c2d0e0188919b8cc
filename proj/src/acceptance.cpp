#include "dichro/acceptance.hpp"

#include <chrono>
#include <cmath>
#include <iomanip>
#include <sstream>

#include "dichro/blowup_orientation.hpp"
#include "dichro/bounds.hpp"
#include "dichro/certifier.hpp"
#include "dichro/coloring.hpp"
#include "dichro/errors.hpp"
#include "dichro/fractional.hpp"
#include "dichro/kneser.hpp"
#include "dichro/orientation.hpp"
#include "dichro/parallel.hpp"
#include "dichro/random.hpp"
#include "dichro/set_families.hpp"
#include "dichro/sparse.hpp"

namespace dichro {

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream detail;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      if (!ok) detail << "; ";
      ok = false;
      detail << "FAILED " << what;
    }
  }
  void note(const std::string& s) {
    if (detail.tellp() > 0) detail << "; ";
    detail << s;
  }
};

Rational r(long p, long q = 1) {
  Rational x(p, q);
  x.canonicalize();
  return x;
}

Graph random_graph(std::size_t n, Rng& rng, std::uint64_t p_num, std::uint64_t p_den) {
  Graph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (uniform_below(rng, p_den) < p_num) g.add_edge(u, v);
  return g;
}

std::vector<Rational> random_weights(std::size_t n, Rng& rng) {
  std::vector<Rational> w;
  for (std::size_t i = 0; i < n; ++i) w.push_back(r(static_cast<long>(uniform_below(rng, 20)), static_cast<long>(1 + uniform_below(rng, 6))));
  return w;
}

bool within_three_sigma(std::uint64_t hits, std::uint64_t samples, long double p) {
  const long double mean = static_cast<long double>(samples) * p;
  const long double sigma = std::sqrt(static_cast<long double>(samples) * p * (1 - p));
  return std::fabs(static_cast<long double>(hits) - mean) <= 3 * sigma;
}

std::string str(long double x) {
  std::ostringstream s;
  s << std::setprecision(10) << static_cast<double>(x);
  return s.str();
}

// Counts certified orientations among `samples` seeded ones.
std::uint64_t certified_samples(const Graph& g, const RankedOrder& order, const Rational& t, const Rational& d,
                                std::uint64_t samples, std::uint64_t seed) {
  const auto base = std::make_shared<const Graph>(g);
  const auto sets = enumerate_principal_dense(g, order, t, d, g.order());
  return parallel_reduce<std::uint64_t>(
      samples, 0,
      [&](std::uint64_t begin, std::uint64_t end) {
        std::uint64_t hits = 0;
        for (std::uint64_t i = begin; i < end; ++i) {
          Rng rng = substream(seed, i);
          const Digraph dg = random_orientation(base, rng);
          bool ok = true;
          for (const auto& s : sets)
            if (is_acyclic(dg, s)) {
              ok = false;
              break;
            }
          hits += ok;
        }
        return hits;
      },
      [](std::uint64_t a, std::uint64_t b) { return a + b; });
}

std::uint64_t census(const Graph& g, const RankedOrder& order, const Rational& t, const Rational& d) {
  const auto base = std::make_shared<const Graph>(g);
  std::uint64_t hits = 0;
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << g.edge_count()); ++code)
    hits += certify_orientation(orientation_from_code(base, code), order, t, d).certified;
  return hits;
}

// --- criteria -------------------------------------------------------------

void kneser_chromatic(Outcome& o, std::uint64_t) {
  for (auto [n, k] : {std::pair{5u, 2u}, std::pair{6u, 2u}}) {
    const auto start = std::chrono::steady_clock::now();
    const std::size_t chi = chromatic_number(kneser_graph(n, k));
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    o.require(chi == n - 2 * k + 2, "chi(KG(" + std::to_string(n) + "," + std::to_string(k) + ")) = " + std::to_string(chi));
    o.require(secs < 10, "KG(" + std::to_string(n) + "," + std::to_string(k) + ") took " + str(secs) + " s");
    o.note("chi(KG(" + std::to_string(n) + "," + std::to_string(k) + ")) = " + std::to_string(chi));
  }
}

void kneser_fractional(Outcome& o, std::uint64_t) {
  const Graph g = kneser_graph(5, 2);
  const auto res = fractional_chromatic_with_dual(g);
  o.require(res.value == r(5, 2), "chi_f = " + to_string(res.value));
  o.require(res.dual.total == res.value, "dual value " + to_string(res.dual.total));
  o.require(res.cover.objective == res.value && is_feasible_cover(g, res.cover), "primal cover feasibility");
  o.require(max_independent_weight(g, res.dual.w) <= 1, "dual feasibility");
  o.note("chi_f(KG(5,2)) = " + to_string(res.value) + " = dual " + to_string(res.dual.total));
}

void duality_sweep(Outcome& o, std::uint64_t seed) {
  std::size_t mismatches = 0;
  for (std::uint64_t i = 0; i < 200; ++i) {
    Rng rng = substream(seed, i);
    const std::size_t n = 1 + uniform_below(rng, 8);
    const Graph g = random_graph(n, rng, 1 + uniform_below(rng, 3), 4);
    const auto res = fractional_chromatic_with_dual(g);
    const bool good = res.value == res.dual.total && res.cover.objective == res.value &&
                      is_feasible_cover(g, res.cover) && max_independent_weight(g, res.dual.w) <= 1;
    mismatches += !good;
  }
  o.require(mismatches == 0, std::to_string(mismatches) + " of 200 graphs without exact duality");
  o.note("200 graphs, primal = dual on all");
}

void acyclic_count_bound(Outcome& o, std::uint64_t) {
  const auto k6 = graphs::complete(6).edges();
  std::size_t violations = 0, route_mismatches = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k6.size()); ++mask) {
    Graph g(6);
    for (std::size_t i = 0; i < k6.size(); ++i)
      if ((mask >> i) & 1) g.add_edge(k6[i].first, k6[i].second);
    const BigInt count = count_acyclic_orientations_by_sinks(g);
    violations += count > acyclic_orientation_bound(g);
    // Second route on a fixed sample of subgraphs.
    if (mask % 97 == 0) route_mismatches += count != count_acyclic_orientations(g);
  }
  o.require(violations == 0, std::to_string(violations) + " subgraphs exceed prod(d + 1)");
  o.require(route_mismatches == 0, std::to_string(route_mismatches) + " count mismatches between routes");
  o.note("32768 subgraphs of K6 within prod(d(v) + 1)");
}

void complete8_fraction(Outcome& o, std::uint64_t seed) {
  const Graph k8 = graphs::complete(8);
  const BigInt count = count_acyclic_orientations_by_sinks(k8);
  BigInt total;
  mpz_ui_pow_ui(total.get_mpz_t(), 2, 28);
  Rational fraction(count, total);
  fraction.canonicalize();
  o.require(fraction <= r(1, 16), "exact fraction " + to_string(fraction) + " > 1/16");
  const auto base = std::make_shared<const Graph>(k8);
  const std::uint64_t samples = 100000;
  const std::uint64_t hits = parallel_reduce<std::uint64_t>(
      samples, 0,
      [&](std::uint64_t b, std::uint64_t e) {
        std::uint64_t h = 0;
        for (std::uint64_t i = b; i < e; ++i) {
          Rng rng = substream(seed, i);
          h += is_acyclic(random_orientation(base, rng));
        }
        return h;
      },
      [](std::uint64_t a, std::uint64_t b) { return a + b; });
  const long double p = to_long_double(fraction);
  o.require(within_three_sigma(hits, samples, p), "Monte Carlo " + std::to_string(hits) + "/100000 vs " + str(p));
  o.note("count " + to_string(count) + ", fraction " + to_string(fraction) + " = " + str(p) + ", MC " +
         std::to_string(hits) + "/100000");
}

void principal_characterization(Outcome& o, std::uint64_t) {
  std::size_t failures = 0, cases = 0;
  for (const Rational& s : {r(3, 2), r(2), r(3)})
    for (std::size_t m = 0; m <= 10; ++m) {
      const auto order = identity_order(m).order;
      for (std::uint64_t x = 0; x < (std::uint64_t{1} << m); ++x) {
        const VertexSet xs = VertexSet::from_mask(x);
        // Direct definition: no nonempty Z within X is s-principal in Y.
        bool direct = true;
        for (std::uint64_t z = x; z && direct; z = (z - 1) & x) direct = !is_principal(VertexSet::from_mask(z), order, s);
        failures += direct != is_sparse(xs, order, s);
        ++cases;
      }
    }
  o.require(failures == 0, std::to_string(failures) + " disagreements");
  o.note(std::to_string(cases) + " (X, Y, s) cases agree");
}

void sparse_weight(Outcome& o, std::uint64_t seed) {
  const Rational ss[] = {r(1), r(3, 2), r(2), r(5, 2), r(3), r(4)};
  std::size_t failures = 0;
  for (std::uint64_t i = 0; i < 10000; ++i) {
    Rng rng = substream(seed, i);
    const std::size_t n = 1 + uniform_below(rng, 12);
    const Weighting w(random_weights(n, rng));
    const Rational& s = ss[uniform_below(rng, 6)];
    const auto order = ranked_order(w);
    VertexSet x;
    for (Vertex v : order.order) {
      if (uniform_below(rng, 2)) continue;
      x.insert(v);
      if (!is_sparse(x, order.order, s)) x.erase(v);
    }
    failures += !(w.weight_of(x) * s <= w.total());
  }
  o.require(failures == 0, std::to_string(failures) + " sparse sets heavier than w(Y)/s");
  o.note("10000 instances, w(X) <= w(Y)/s on all");
}

void decomposition(Outcome& o, std::uint64_t seed) {
  const Rational ts[] = {r(1), r(3, 2), r(2), r(3)};
  const Rational ds[] = {r(1), r(3, 2), r(2), r(3)};
  std::size_t decomposed = 0, gaps = 0, third = 0;
  for (std::uint64_t i = 0; i < 1000; ++i) {
    Rng rng = substream(seed, i);
    const std::size_t n = 4 + uniform_below(rng, 11);
    const Graph g = random_graph(n, rng, 1 + uniform_below(rng, 7), 8);
    const Weighting w(random_weights(n, rng));
    VertexSet a;
    for (Vertex v = 0; v < n; ++v)
      if (uniform_below(rng, 4)) a.insert(v);
    const Rational& t = ts[uniform_below(rng, 4)];
    const Rational& d = ds[uniform_below(rng, 4)];
    const auto order = ranked_order(w);
    try {
      const auto dec = back_degree_decomposition(g, a, order, t, d);
      const auto in_a = order.arrange(a);
      const auto sc = degeneracy_coloring(g, dec.small);
      const bool ok = is_sparse(dec.large_position, in_a, 2) && is_sparse(dec.large_prefix, order.order, t) &&
                      Rational(static_cast<unsigned long>(sc.degeneracy)) <= Rational(floor(d)) &&
                      (dec.large_position | dec.large_prefix | dec.small) == a &&
                      w.weight_of(dec.small) >= w.weight_of(a) - w.weight_of(dec.large_position) - w.weight_of(dec.large_prefix);
      ok ? ++decomposed : ++third;
    } catch (const ClassificationGap& gap) {
      const auto& x = gap.witness();
      const bool ok = !x.empty() && x.is_subset_of(a) && is_principal(x, order.order, t) && average_degree(g, x) >= d;
      ok ? ++gaps : ++third;
    }
  }
  o.require(third == 0, std::to_string(third) + " instances with neither a valid decomposition nor a valid witness");
  o.note(std::to_string(decomposed) + " decompositions, " + std::to_string(gaps) + " verified gap witnesses");
}

void dichromatic_truths(Outcome& o, std::uint64_t) {
  const std::size_t tree = dichromatic_number_exact(graphs::path(6)).value;
  const std::size_t k3 = dichromatic_number_exact(graphs::complete(3)).value;
  const std::size_t c4 = dichromatic_number_exact(graphs::cycle(4)).value;
  const std::size_t paley = digraph_chromatic_number(digraphs::paley7());
  o.require(tree == 1, "tree gives " + std::to_string(tree));
  o.require(k3 == 2, "K3 gives " + std::to_string(k3));
  o.require(c4 == 2, "C4 gives " + std::to_string(c4));
  o.require(paley == 3, "Paley-7 gives " + std::to_string(paley));
  o.note("tree 1, K3 " + std::to_string(k3) + ", C4 " + std::to_string(c4) + ", Paley-7 " + std::to_string(paley) +
         " so dichromatic(K7) >= 3");
}

void embeddings(Outcome& o, std::uint64_t) {
  struct Case {
    std::uint32_t n, k, t, x;
    EmbeddingCase kind;
    std::size_t power;
  };
  const Case cases[] = {{5, 2, 2, 1, EmbeddingCase::below_t, 4},
                        {5, 2, 2, 2, EmbeddingCase::equal_t, 4},
                        {5, 2, 3, 2, EmbeddingCase::general, 6},
                        {3, 1, 3, 1, EmbeddingCase::general, 2}};
  for (const auto& c : cases) {
    const auto w = kneser_blowup_embedding(c.n, c.k, c.t, c.x, c.kind);
    const auto check = verify_embedding(w);
    const std::string tag = "(" + std::to_string(c.n) + "," + std::to_string(c.k) + "," + std::to_string(c.t) + "," +
                            std::to_string(c.x) + ")";
    o.require(check.ok, tag + " " + check.reason);
    o.require(w.power == c.power, tag + " power " + std::to_string(w.power));
    o.note(tag + " " + to_string(c.kind) + " power " + std::to_string(w.power));
  }
}

void certifier_census(Outcome& o, std::uint64_t seed) {
  const Graph k3 = graphs::complete(3);
  const auto id3 = identity_order(3);
  const std::uint64_t k3_hits = census(k3, id3, 1, 2);
  o.require(k3_hits == 2, "K3 census " + std::to_string(k3_hits) + "/8");
  const auto found = find_good_orientation(k3, id3, 1, 2, 64, seed);
  o.require(found.certified && certify_orientation(found.digraph, id3, 1, 2).certified, "find_good_orientation on K3");

  const Graph k4 = graphs::complete(4);
  const auto id4 = identity_order(4);
  const std::uint64_t k4_hits = census(k4, id4, 2, 3);
  const std::uint64_t mc = certified_samples(k4, id4, 2, 3, 10000, seed);
  const long double p = static_cast<long double>(k4_hits) / 64;
  o.require(within_three_sigma(mc, 10000, p), "K4 Monte Carlo " + std::to_string(mc) + "/10000 vs " + str(p));
  o.note("K3 " + std::to_string(k3_hits) + "/8 (found on try " + std::to_string(found.tries) + "), K4 census " +
         std::to_string(k4_hits) + "/64, MC " + std::to_string(mc) + "/10000");
}

void binomial_sweep(Outcome& o, std::uint64_t) {
  std::size_t failures = 0;
  for (long t = 2; t <= 100; ++t)
    for (std::uint64_t k = 1; k <= 20; ++k) failures += !binomial_bound_check(r(t), k);
  o.require(failures == 0, std::to_string(failures) + " (t, k) pairs fail");
  o.note("1980 pairs hold");
}

void union_bound(Outcome& o, std::uint64_t) {
  const auto big = union_bound_report(r(60), 240);
  bool products = true;
  for (const auto& term : big.per_k) products = products && term.product <= term.geometric;
  o.require(big.hypothesis_ok, "t = 60 hypothesis");
  o.require(big.total < 1, "t = 60 total " + str(big.total));
  o.require(products, "t = 60 some product exceeds 2^-k");
  const auto small = union_bound_report(r(8), 8);
  o.require(!small.hypothesis_ok, "t = 8 hypothesis should fail");
  o.note("t = 60: d = " + str(big.d) + ", total " + str(big.total) + "; t = 8: d = " + str(small.d) +
         ", hypothesis fails");
}

void relaxed_pipeline(Outcome& o, std::uint64_t seed) {
  // K7 with unit weights: the certifier needs a tournament whose 4-sets are all cyclic.
  const Graph k7 = graphs::complete(7);
  CertificateParams p;
  p.mode = CertificateMode::relaxed;
  p.t = r(7);
  p.d = r(3);
  p.weights = Weighting::uniform(7);
  p.max_tries = 200000;
  p.seed = seed;
  const auto cert = fractional_dichromatic_certificate(k7, p);
  o.require(cert.orientation && cert.orientation->certified, "orientation certified");
  // Brute force over all subsets, independent of the maximal-set enumeration.
  Rational heaviest = 0;
  for (std::uint64_t s = 0; s < 128; ++s) {
    const VertexSet vs = VertexSet::from_mask(s);
    if (is_acyclic(cert.orientation->digraph, vs)) heaviest = std::max(heaviest, p.weights->weight_of(vs));
  }
  o.require(heaviest == cert.max_acyclic_weight, "brute-force max acyclic weight " + to_string(heaviest));
  o.require(heaviest <= 2 * *p.d + 4, "max acyclic weight within 2d' + 4");
  o.require(cert.ratio == r(7, 10), "ratio " + to_string(cert.ratio));
  o.require(cert.certified, "certificate");

  bool rejected = false;
  try {
    CertificateParams strict;
    strict.mode = CertificateMode::strict;
    strict.t = r(5, 2);
    fractional_dichromatic_certificate(kneser_graph(5, 2), strict);
  } catch (const HypothesesNotMet&) {
    rejected = true;
  }
  o.require(rejected, "strict mode on the Petersen graph should report unmet hypotheses");
  o.note("K7, t' = 7, d' = 3: tries " + std::to_string(cert.orientation ? cert.orientation->tries : 0) +
         ", max acyclic weight " + to_string(cert.max_acyclic_weight) + ", ratio " + to_string(cert.ratio) +
         "; strict Petersen rejected");
}

void complete_blowup_regime(Outcome& o, std::uint64_t seed) {
  constexpr std::uint64_t kLockedT = 6;
  const Graph g = blow_up(graphs::complete(5), 2).graph;
  const auto rep = orient_complete_blowup(g, kLockedT, 200000, seed);
  o.require(rep.certified && rep.digraph.has_value(), "search for t = 6");
  if (rep.digraph) {
    const auto scan = all_t_subsets_cyclic(*rep.digraph, kLockedT);
    o.require(scan.all_cyclic && scan.scanned == 210, "re-verification over C(10, 6) subsets");
    std::size_t largest = 0;
    for (const auto& s : maximal_acyclic_sets(*rep.digraph)) largest = std::max(largest, s.size());
    o.require(largest < kLockedT, "largest acyclic set " + std::to_string(largest));
    o.note("t = 6 found on try " + std::to_string(rep.tries) + ", 210 subsets cyclic, largest acyclic set " +
           std::to_string(largest) + ", implied bound " + to_string(rep.implied_bound));
  }
}

void bound_values(Outcome& o, std::uint64_t) {
  const long double enl = enl_bound(1024);
  o.require(std::fabs(enl - 51.2L) < 1e-12L, "enl(1024) = " + str(enl));
  o.require(kneser_dichromatic_bound(200, 2) == 3, "kneser_z(200, 2)");
  o.require(kneser_dichromatic_bound(48, 2) == 1, "kneser_z(48, 2)");
  o.require(blowup_condition(16, 1), "condition at (16, 1)");
  o.require(!blowup_condition(4, 2), "condition at (4, 2)");
  o.note("enl(1024) = " + str(enl) + ", kneser_z(200,2) = 3, kneser_z(48,2) = 1, condition (16,1) true, (4,2) false");
}

struct Criterion {
  int id;
  const char* name;
  const char* suite;
  double limit;
  void (*run)(Outcome&, std::uint64_t);
};

const Criterion kCriteria[] = {
    {1, "kneser chromatic identity", "core", 20, kneser_chromatic},
    {2, "kneser fractional identity", "core", 5, kneser_fractional},
    {3, "duality sweep", "core", 60, duality_sweep},
    {4, "acyclic orientation count bound", "orient", 120, acyclic_count_bound},
    {5, "K8 acyclic fraction", "orient", 300, complete8_fraction},
    {6, "principal subset characterization", "sparse", 60, principal_characterization},
    {7, "sparse set weight", "sparse", 30, sparse_weight},
    {8, "back-degree decomposition", "sparse", 120, decomposition},
    {9, "dichromatic ground truths", "core", 60, dichromatic_truths},
    {10, "kneser blow-up embeddings", "kneser", 60, embeddings},
    {11, "principal dense certifier", "orient", 60, certifier_census},
    {12, "binomial bound sweep", "orient", 10, binomial_sweep},
    {13, "union bound report", "orient", 1, union_bound},
    {14, "relaxed certificate pipeline", "orient", 120, relaxed_pipeline},
    {15, "complete blow-up orientation", "kneser", 300, complete_blowup_regime},
    {16, "bound evaluators", "kneser", 1, bound_values},
};

}  // namespace

std::vector<std::string> acceptance_suites() { return {"all", "core", "sparse", "orient", "kneser"}; }

std::vector<CriterionResult> run_acceptance(const std::string& suite, std::uint64_t seed,
                                            const std::function<void(const CriterionResult&)>& on_result) {
  bool known = false;
  for (const auto& s : acceptance_suites()) known = known || s == suite;
  if (!known) throw InvalidArgument("unknown suite: " + suite);
  std::vector<CriterionResult> out;
  for (const auto& c : kCriteria) {
    if (suite != "all" && suite != c.suite) continue;
    CriterionResult res{c.id, c.name, c.suite, false, 0, c.limit, ""};
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.run(o, seed);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    res.passed = o.ok && res.seconds < c.limit;
    res.detail = o.detail.str();
    if (o.ok && !res.passed) res.detail += "; over time limit";
    if (on_result) on_result(res);
    out.push_back(std::move(res));
  }
  return out;
}

std::string format_line(const CriterionResult& r) {
  std::ostringstream s;
  s << (r.passed ? "PASS" : "FAIL") << "  " << std::setw(2) << r.id << "  " << std::left << std::setw(36) << r.name
    << std::right << std::fixed << std::setprecision(3) << std::setw(9) << r.seconds << "s / " << std::setprecision(0)
    << r.limit_seconds << "s  " << r.detail;
  return s.str();
}

std::string format_table(const std::vector<CriterionResult>& results) {
  std::string out;
  std::size_t passed = 0;
  for (const auto& r : results) {
    out += format_line(r) + "\n";
    passed += r.passed;
  }
  out += std::to_string(passed) + "/" + std::to_string(results.size()) + " criteria passed\n";
  return out;
}

std::string format_csv(const std::vector<CriterionResult>& results) {
  auto quote = [](const std::string& s) {
    std::string q = "\"";
    for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
    return q + "\"";
  };
  std::ostringstream s;
  s << "id,name,suite,passed,seconds,limit_seconds,detail\n";
  for (const auto& r : results)
    s << r.id << ',' << quote(r.name) << ',' << r.suite << ',' << (r.passed ? "true" : "false") << ',' << std::fixed
      << std::setprecision(3) << r.seconds << ',' << std::setprecision(0) << r.limit_seconds << ','
      << quote(r.detail) << '\n';
  return s.str();
}

}  // namespace dichro
