#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "dichro/graph.hpp"
#include "dichro/limits.hpp"
#include "dichro/rational.hpp"
#include "dichro/sparse.hpp"

namespace dichro {

/// Calls `visit` for every k-subset (1 <= k <= k_max) of the first floor(t k)
/// ranked vertices whose induced average degree is at least d; stops early when
/// `visit` returns false. Returns the number of sets visited. Throws
/// BudgetExceeded when the candidate pool sum_k C(floor(t k), k) exceeds the cap.
std::size_t for_each_principal_dense(const Graph& g, const RankedOrder& order, const Rational& t,
                                     const Rational& d, std::size_t k_max,
                                     const std::function<bool(const VertexSet&)>& visit, const Limits& limits = {});

std::vector<VertexSet> enumerate_principal_dense(const Graph& g, const RankedOrder& order, const Rational& t,
                                                 const Rational& d, std::size_t k_max, const Limits& limits = {});

struct CertifiedOrientation {
  Digraph digraph;
  Rational t;
  Rational d;
  std::size_t sets_checked = 0;
  bool certified = false;
  std::size_t tries = 0;
  std::optional<VertexSet> acyclic_witness;  // first dense principal set left acyclic
};

/// certified iff every t-principal set of average degree >= d is cyclic in D.
/// Stops at the first acyclic one; sets_checked counts the sets examined.
CertifiedOrientation certify_orientation(const Digraph& d, const RankedOrder& order, const Rational& t,
                                         const Rational& dens, const Limits& limits = {});

/// Rejection sampling over seeded orientations (try i uses substream(seed, i)).
/// Throws TriesExhausted after max_tries failures.
CertifiedOrientation find_good_orientation(const Graph& g, const RankedOrder& order, const Rational& t,
                                           const Rational& d, std::uint64_t max_tries, std::uint64_t seed,
                                           const Limits& limits = {});

struct BoundTerm {
  std::size_t k = 0;
  BigInt principal_sets;       // C(floor(t k), k)
  long double acyclic_bound;   // 2^(-k d / 2 + k log2(d + 1))
  long double product;         // principal_sets * acyclic_bound
  long double ratio_bound;     // ((d + 1) / t)^k
  long double geometric;       // 2^-k
};

struct BoundReport {
  long double t = 0;
  long double d = 0;            // 2 log2(e t^2)
  bool hypothesis_ok = false;   // t >= 2 (d + 1), gated with the upper bracket of e
  std::vector<BoundTerm> per_k;
  long double total = 0;
  long double tail_bound = 0;   // 2^-d
  long double tail_closed_form = 0;  // e^-2 t^-4
};

BoundReport union_bound_report(const Rational& t, std::size_t k_max);
BoundReport union_bound_report(const Graph& g, const Rational& t);

/// C(floor(t k), k) < (e_lo t)^k in exact arithmetic, e_lo the rational lower bracket of e.
bool binomial_bound_check(const Rational& t, std::uint64_t k);

/// 2 log2(e t^2) and 4 log2(2 e t^2) with e replaced by its upper bracket.
long double density_threshold(const Rational& t);
long double certificate_threshold(const Rational& t);

enum class CertificateMode { strict, relaxed };

struct CertificateParams {
  CertificateMode mode = CertificateMode::relaxed;
  std::optional<Rational> t;      // strict: defaults to chi_f(G)
  std::optional<Rational> d;      // relaxed only
  std::optional<Weighting> weights;
  std::uint64_t max_tries = 100000;
  std::uint64_t seed = 0;
};

struct Hypothesis {
  std::string name;
  bool holds = false;
};

struct FractionalCertificate {
  CertificateMode mode = CertificateMode::relaxed;
  Rational t;
  Rational d;
  Weighting weights;
  std::vector<Hypothesis> hypotheses;
  std::optional<CertifiedOrientation> orientation;
  Rational max_acyclic_weight;
  VertexSet heaviest_acyclic_set;
  Rational weight_cap;            // 2 d + 4
  bool weight_cap_holds = false;
  Rational ratio;                 // t / (2 d + 4)
  std::optional<Rational> digraph_fractional;  // chi_f(D) when within the LP budget
  bool certified = false;
};

/// Builds the weighting (dual LP rescaled to t unless weights are given), ranks
/// vertices, finds a certified orientation for (t, d), then verifies by search
/// over maximal acyclic sets that none weighs more than 2 d + 4, which gives
/// chi_f(D) >= t / (2 d + 4). Strict mode throws HypothesesNotMet unless
/// t > 4 log2(2 e t^2) and chi_f(G) >= t.
FractionalCertificate fractional_dichromatic_certificate(const Graph& g, const CertificateParams& params,
                                                         const Limits& limits = {});

}  // namespace dichro
