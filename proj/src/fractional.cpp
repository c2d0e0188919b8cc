#include "dichro/fractional.hpp"

#include "dichro/covering_lp.hpp"
#include "dichro/errors.hpp"
#include "dichro/orientation.hpp"
#include "dichro/set_families.hpp"

namespace dichro {

namespace {

FractionalResult solve(std::size_t n, const std::vector<VertexSet>& columns) {
  FractionalResult out;
  out.value = 0;
  out.cover.objective = 0;
  out.dual.total = 0;
  if (n == 0) return out;
  const auto sol = solve_covering_lp(n, columns);
  for (std::size_t j = 0; j < columns.size(); ++j)
    if (sgn(sol.x[j]) > 0) out.cover.parts.emplace_back(columns[j], sol.x[j]);
  out.cover.objective = sol.objective;
  out.dual.w = sol.y;
  for (const auto& y : sol.y) out.dual.total += y;
  out.value = sol.objective;
  if (out.dual.total != out.value) throw Error("covering LP returned unequal primal and dual objectives");
  return out;
}

void check_lp_budget(std::size_t n, const Limits& limits) {
  if (n > limits.lp_vertices) throw BudgetExceeded("covering LP (vertices)", n, limits.lp_vertices);
}

bool cover_shape_ok(std::size_t n, const CoverSolution& cover) {
  std::vector<Rational> coverage(n, Rational(0));
  Rational sum = 0;
  for (const auto& [set, x] : cover.parts) {
    if (sgn(x) < 0 || x > 1) return false;
    if (set.extent() > n) return false;
    sum += x;
    set.for_each([&](Vertex v) { coverage[v] += x; });
  }
  for (const auto& c : coverage)
    if (c < 1) return false;
  return sum == cover.objective;
}

}  // namespace

FractionalResult fractional_chromatic_with_dual(const Graph& g, const Limits& limits) {
  check_lp_budget(g.order(), limits);
  return solve(g.order(), maximal_independent_sets(g, limits));
}

Rational fractional_chromatic(const Graph& g, const Limits& limits) {
  return fractional_chromatic_with_dual(g, limits).value;
}

FractionalResult digraph_fractional_chromatic_with_dual(const Digraph& d, const Limits& limits) {
  check_lp_budget(d.order(), limits);
  return solve(d.order(), maximal_acyclic_sets(d, limits));
}

Rational digraph_fractional_chromatic(const Digraph& d, const Limits& limits) {
  return digraph_fractional_chromatic_with_dual(d, limits).value;
}

FractionalDichromaticResult fractional_dichromatic(const Graph& g, SearchMode mode, std::uint64_t trials,
                                                   std::uint64_t seed, const Limits& limits) {
  check_lp_budget(g.order(), limits);
  const auto base = std::make_shared<const Graph>(g);
  FractionalDichromaticResult best;
  best.value = 0;
  auto consider = [&](Digraph d) {
    Rational v = digraph_fractional_chromatic(d, limits);
    ++best.orientations_examined;
    if (!best.witness || v > best.value) {
      best.value = std::move(v);
      best.witness = std::move(d);
    }
  };
  const std::size_t e = g.edge_count();
  if (mode == SearchMode::exact) {
    if (e > limits.orientation_edges || e >= 63)
      throw BudgetExceeded("orientation enumeration (edges)", e, limits.orientation_edges);
    // Global reversal keeps the acyclic sets; fix the top edge.
    const std::uint64_t codes = e == 0 ? 1 : std::uint64_t{1} << (e - 1);
    for (std::uint64_t code = 0; code < codes; ++code) consider(orientation_from_code(base, code));
    best.exact = true;
  } else {
    if (trials == 0) throw InvalidArgument("sampled mode needs trials >= 1");
    for (std::uint64_t i = 0; i < trials; ++i) {
      Rng rng = substream(seed, i);
      consider(random_orientation(base, rng));
    }
  }
  return best;
}

FractionalIndependence fractional_independence(const Graph& g, const Limits& limits) {
  const std::size_t n = g.order();
  FractionalIndependence out;
  out.value = 0;
  if (n == 0) return out;
  const auto frac = fractional_chromatic_with_dual(g, limits);
  const Rational scale = Rational(static_cast<unsigned long>(n)) / frac.value;
  out.value = scale;
  out.w.reserve(n);
  for (const auto& y : frac.dual.w) out.w.push_back(y * scale);
  return out;
}

bool is_feasible_cover(const Graph& g, const CoverSolution& cover) {
  for (const auto& [set, x] : cover.parts)
    if (g.induced_edge_count(set) != 0) return false;
  return cover_shape_ok(g.order(), cover);
}

bool is_feasible_acyclic_cover(const Digraph& d, const CoverSolution& cover) {
  for (const auto& [set, x] : cover.parts)
    if (!is_acyclic(d, set)) return false;
  return cover_shape_ok(d.order(), cover);
}

}  // namespace dichro
