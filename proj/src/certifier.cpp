#include "dichro/certifier.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "dichro/errors.hpp"
#include "dichro/fractional.hpp"
#include "dichro/orientation.hpp"
#include "dichro/random.hpp"
#include "dichro/set_families.hpp"

namespace dichro {

namespace {

Rational from_size(std::size_t k) { return Rational(static_cast<unsigned long>(k)); }

std::size_t reach_of(const Rational& t, std::size_t k, std::size_t n) {
  const BigInt f = floor(t * from_size(k));
  if (sgn(f) <= 0) return 0;
  if (!f.fits_ulong_p() || f.get_ui() > n) return n;
  return f.get_ui();
}

struct DenseWalk {
  const Graph& g;
  const std::vector<Vertex>& pool;
  std::size_t k;
  std::size_t need_edges;
  const std::function<bool(const VertexSet&)>& visit;
  std::size_t visited = 0;
  std::size_t depth = 0;
  VertexSet current;

  // Returns false once the visitor asked to stop.
  bool run(std::size_t start, std::size_t edges) {
    if (depth == k) {
      if (edges < need_edges) return true;
      ++visited;
      return visit(current);
    }
    const std::size_t remaining = k - depth;
    if (edges + remaining * depth + remaining * (remaining - 1) / 2 < need_edges) return true;
    for (std::size_t i = start; i + remaining <= pool.size(); ++i) {
      const Vertex v = pool[i];
      const std::size_t added = g.neighbors(v).intersection_size(current);
      current.insert(v);
      ++depth;
      const bool go_on = run(i + 1, edges + added);
      --depth;
      current.erase(v);
      if (!go_on) return false;
    }
    return true;
  }
};

long double to_ld(const Rational& r) { return to_long_double(r); }

}  // namespace

std::size_t for_each_principal_dense(const Graph& g, const RankedOrder& order, const Rational& t,
                                     const Rational& d, std::size_t k_max,
                                     const std::function<bool(const VertexSet&)>& visit, const Limits& limits) {
  const std::size_t n = g.order();
  if (order.size() != n) throw InvalidArgument("order size does not match the graph");
  if (k_max > n) throw InvalidArgument("k_max exceeds the vertex count");
  if (sgn(t) <= 0) throw InvalidArgument("t must be positive");

  std::vector<std::size_t> ks;
  BigInt candidates = 0;
  for (std::size_t k = 1; k <= k_max; ++k) {
    if (from_size(k - 1) < d) continue;  // a k-set has average degree <= k - 1
    const std::size_t reach = reach_of(t, k, n);
    if (reach < k) continue;
    ks.push_back(k);
    candidates += binomial(reach, k);
  }
  if (candidates > BigInt(static_cast<unsigned long>(limits.principal_candidates)))
    throw BudgetExceeded("principal set enumeration",
                         candidates.fits_ulong_p() ? candidates.get_ui() : static_cast<std::size_t>(-1),
                         limits.principal_candidates);

  std::size_t visited = 0;
  for (std::size_t k : ks) {
    const std::size_t reach = reach_of(t, k, n);
    std::vector<Vertex> pool(order.order.begin(), order.order.begin() + static_cast<std::ptrdiff_t>(reach));
    const BigInt need = sgn(d) > 0 ? ceil(d * from_size(k) / 2) : BigInt(0);
    DenseWalk walk{g, pool, k, need.get_ui(), visit, 0, 0, {}};
    const bool go_on = walk.run(0, 0);
    visited += walk.visited;
    if (!go_on) break;
  }
  return visited;
}

std::vector<VertexSet> enumerate_principal_dense(const Graph& g, const RankedOrder& order, const Rational& t,
                                                 const Rational& d, std::size_t k_max, const Limits& limits) {
  std::vector<VertexSet> out;
  for_each_principal_dense(
      g, order, t, d, k_max,
      [&](const VertexSet& s) {
        out.push_back(s);
        return true;
      },
      limits);
  return out;
}

CertifiedOrientation certify_orientation(const Digraph& d, const RankedOrder& order, const Rational& t,
                                         const Rational& dens, const Limits& limits) {
  CertifiedOrientation out{d, t, dens, 0, true, 0, std::nullopt};
  out.sets_checked = for_each_principal_dense(
      d.base(), order, t, dens, d.order(),
      [&](const VertexSet& s) {
        if (is_acyclic(d, s)) {
          out.certified = false;
          out.acyclic_witness = s;
          return false;
        }
        return true;
      },
      limits);
  return out;
}

CertifiedOrientation find_good_orientation(const Graph& g, const RankedOrder& order, const Rational& t,
                                           const Rational& d, std::uint64_t max_tries, std::uint64_t seed,
                                           const Limits& limits) {
  if (max_tries == 0) throw InvalidArgument("max_tries must be positive");
  const auto base = std::make_shared<const Graph>(g);
  std::size_t most_checked = 0;

  if (g.order() <= 64) {
    // Enumerate the dense principal sets once; each try then only peels masks.
    std::vector<std::uint64_t> sets;
    for (const auto& s : enumerate_principal_dense(g, order, t, d, g.order(), limits)) sets.push_back(s.word(0));
    const auto edges = g.edges();
    std::vector<std::uint64_t> in(g.order());
    for (std::uint64_t attempt = 0; attempt < max_tries; ++attempt) {
      Rng rng = substream(seed, attempt);
      Digraph candidate = random_orientation(base, rng);
      std::fill(in.begin(), in.end(), 0);
      for (const auto& [tail, head] : candidate.arcs()) in[head] |= std::uint64_t{1} << tail;
      std::size_t checked = 0;
      bool ok = true;
      for (auto s : sets) {
        ++checked;
        if (is_acyclic_mask(in.data(), s)) {
          ok = false;
          break;
        }
      }
      if (ok) {
        CertifiedOrientation out{std::move(candidate), t, d, checked, true, attempt + 1, std::nullopt};
        return out;
      }
      most_checked = std::max(most_checked, checked);
    }
  } else {
    for (std::uint64_t attempt = 0; attempt < max_tries; ++attempt) {
      Rng rng = substream(seed, attempt);
      auto result = certify_orientation(random_orientation(base, rng), order, t, d, limits);
      if (result.certified) {
        result.tries = attempt + 1;
        return result;
      }
      most_checked = std::max(most_checked, result.sets_checked);
    }
  }
  throw TriesExhausted("no certified orientation in " + std::to_string(max_tries) +
                           " tries (at most " + std::to_string(most_checked) +
                           " dense principal sets checked before an acyclic one)",
                       max_tries);
}

long double density_threshold(const Rational& t) {
  const long double tv = to_ld(t);
  return 2.0L * std::log2(to_ld(euler_upper()) * tv * tv);
}

long double certificate_threshold(const Rational& t) {
  const long double tv = to_ld(t);
  return 4.0L * std::log2(2.0L * to_ld(euler_upper()) * tv * tv);
}

BoundReport union_bound_report(const Rational& t, std::size_t k_max) {
  if (sgn(t) <= 0) throw InvalidArgument("t must be positive");
  BoundReport r;
  r.t = to_ld(t);
  const long double e = std::numbers::e_v<long double>;
  r.d = 2.0L * std::log2(e * r.t * r.t);
  r.hypothesis_ok = r.t >= 2.0L * (density_threshold(t) + 1.0L);
  r.total = 0;
  for (std::size_t k = 1; k <= k_max; ++k) {
    BoundTerm term;
    term.k = k;
    const BigInt reach = floor(t * from_size(k));
    term.principal_sets = reach.fits_ulong_p() ? binomial(reach.get_ui(), k) : BigInt(0);
    const long double kk = static_cast<long double>(k);
    const long double log2_acyclic = -kk * r.d / 2.0L + kk * std::log2(r.d + 1.0L);
    term.acyclic_bound = std::exp2(log2_acyclic);
    term.product = sgn(term.principal_sets) == 0 ? 0.0L : std::exp2(log2_acyclic + log2(term.principal_sets));
    term.ratio_bound = std::pow((r.d + 1.0L) / r.t, kk);
    term.geometric = std::exp2(-kk);
    r.total += term.product;
    r.per_k.push_back(std::move(term));
  }
  r.tail_bound = std::exp2(-r.d);
  r.tail_closed_form = std::exp(-2.0L) / std::pow(r.t, 4.0L);
  return r;
}

BoundReport union_bound_report(const Graph& g, const Rational& t) { return union_bound_report(t, g.order()); }

bool binomial_bound_check(const Rational& t, std::uint64_t k) {
  if (sgn(t) <= 0 || k == 0) throw InvalidArgument("binomial_bound_check needs t > 0 and k >= 1");
  const BigInt top = floor(t * Rational(static_cast<unsigned long>(k)));
  const BigInt lhs = top.fits_ulong_p() ? binomial(top.get_ui(), k) : BigInt(0);
  Rational base = euler_lower() * t;
  Rational rhs = 1;
  for (std::uint64_t i = 0; i < k; ++i) rhs *= base;
  return Rational(lhs) < rhs;
}

namespace {

Rational rational_above(long double x) {
  // Round up at 1e-9 resolution.
  const long double scaled = std::ceil(x * 1e9L);
  Rational r(BigInt(std::to_string(static_cast<long long>(scaled))), BigInt(1000000000));
  r.canonicalize();
  return r;
}

}  // namespace

FractionalCertificate fractional_dichromatic_certificate(const Graph& g, const CertificateParams& params,
                                                         const Limits& limits) {
  FractionalCertificate out;
  out.mode = params.mode;
  const std::size_t n = g.order();

  std::optional<FractionalResult> lp;
  auto chi_f = [&]() -> const FractionalResult& {
    if (!lp) lp = fractional_chromatic_with_dual(g, limits);
    return *lp;
  };

  if (params.mode == CertificateMode::strict) {
    out.t = params.t ? *params.t : chi_f().value;
    if (sgn(out.t) <= 0) throw InvalidArgument("t must be positive");
    std::vector<std::string> failed;
    const long double gate = certificate_threshold(out.t);
    if (!(to_ld(out.t) > gate))
      failed.push_back("t > 4 log2(2 e t^2) fails: t = " + to_string(out.t) + ", threshold " +
                       std::to_string(static_cast<double>(gate)));
    // Only consult the LP when the cheap gate passes.
    if (failed.empty() && chi_f().value < out.t)
      failed.push_back("chi_f(G) >= t fails: chi_f(G) = " + to_string(chi_f().value));
    if (!failed.empty()) throw HypothesesNotMet(std::move(failed));
    out.d = rational_above(density_threshold(out.t));
  } else {
    if (!params.t || !params.d) throw InvalidArgument("relaxed mode needs t and d");
    out.t = *params.t;
    out.d = *params.d;
    if (sgn(out.t) <= 0 || sgn(out.d) < 0) throw InvalidArgument("relaxed mode needs t > 0 and d >= 0");
  }

  if (params.weights) {
    if (params.weights->size() != n) throw InvalidArgument("weights length does not match the graph");
    out.weights = *params.weights;
  } else if (n == 0) {
    out.weights = Weighting{};
  } else {
    const auto& dual = chi_f().dual;
    out.weights = Weighting(dual.w).scaled(out.t / dual.total);
  }

  out.hypotheses.push_back({"w(V) = t", out.weights.total() == out.t});
  out.hypotheses.push_back({"t >= 2(d + 1)", out.t >= 2 * (out.d + 1)});
  out.hypotheses.push_back({"t > 4 log2(2 e t^2)", to_ld(out.t) > certificate_threshold(out.t)});
  if (n <= limits.lp_vertices) out.hypotheses.push_back({"chi_f(G) >= t", chi_f().value >= out.t});

  const RankedOrder order = ranked_order(out.weights);
  out.orientation = find_good_orientation(g, order, out.t, out.d, params.max_tries, params.seed, limits);

  const Digraph& dg = out.orientation->digraph;
  out.max_acyclic_weight = 0;
  for (const auto& s : maximal_acyclic_sets(dg, limits)) {
    const Rational w = out.weights.weight_of(s);
    if (w > out.max_acyclic_weight) {
      out.max_acyclic_weight = w;
      out.heaviest_acyclic_set = s;
    }
  }
  out.weight_cap = 2 * out.d + 4;
  out.weight_cap_holds = out.max_acyclic_weight <= out.weight_cap;
  out.ratio = out.t / out.weight_cap;
  if (n <= limits.lp_vertices) out.digraph_fractional = digraph_fractional_chromatic(dg, limits);
  out.certified = out.orientation->certified && out.weight_cap_holds;
  return out;
}

}  // namespace dichro
