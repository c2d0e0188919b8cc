#include <doctest.h>

#include <random>

#include "dichro/covering_lp.hpp"
#include "dichro/errors.hpp"
#include "dichro/fractional.hpp"
#include "dichro/kneser.hpp"
#include "dichro/orientation.hpp"
#include "dichro/random.hpp"
#include "oracle.hpp"

using namespace dichro;

namespace {

Rational q(long p, long d = 1) {
  Rational r(p, d);
  r.canonicalize();
  return r;
}

// Dual feasibility by enumerating every vertex subset.
bool dual_feasible(std::size_t n, const std::vector<Rational>& w, const std::function<bool(oracle::Mask)>& admissible) {
  for (oracle::Mask s = 0; s < (oracle::Mask{1} << n); ++s) {
    if (!admissible(s)) continue;
    Rational total = 0;
    for (std::size_t v = 0; v < n; ++v)
      if ((s >> v) & 1) total += w[v];
    if (total > 1) return false;
  }
  for (const auto& x : w)
    if (sgn(x) < 0) return false;
  return true;
}

}  // namespace

TEST_CASE("fractional chromatic numbers") {
  CHECK(fractional_chromatic(graphs::cycle(5)) == q(5, 2));
  CHECK(fractional_chromatic(graphs::complete(4)) == 4);
  CHECK(fractional_chromatic(graphs::empty(3)) == 1);
  CHECK(fractional_chromatic(kneser_graph(5, 2)) == q(5, 2));
  CHECK(fractional_chromatic(kneser_graph(6, 2)) == 3);
  CHECK(fractional_chromatic(graphs::cycle(7)) == q(7, 3));
}

TEST_CASE("digraph fractional chromatic numbers (LP oracle values)") {
  CHECK(digraph_fractional_chromatic(digraphs::directed_cycle(3)) == q(3, 2));
  CHECK(digraph_fractional_chromatic(digraphs::directed_cycle(4)) == q(4, 3));
  CHECK(digraph_fractional_chromatic(digraphs::paley7()) == q(7, 3));
  CHECK(digraph_fractional_chromatic(digraphs::transitive_tournament(5)) == 1);
}

TEST_CASE("fractional dichromatic numbers") {
  const auto k3 = fractional_dichromatic(graphs::complete(3), SearchMode::exact);
  CHECK(k3.value == q(3, 2));
  CHECK(k3.exact);
  CHECK(fractional_dichromatic(graphs::cycle(4), SearchMode::exact).value == q(4, 3));
  const auto sampled = fractional_dichromatic(graphs::complete(4), SearchMode::sampled, 50, 3);
  CHECK(sampled.value <= fractional_dichromatic(graphs::complete(4), SearchMode::exact).value);
  REQUIRE(sampled.witness.has_value());
  CHECK(digraph_fractional_chromatic(*sampled.witness) == sampled.value);
}

TEST_CASE("fractional independence") {
  const auto a = fractional_independence(kneser_graph(5, 2));
  CHECK(a.value == 4);
  Rational total = 0;
  for (const auto& x : a.w) total += x;
  CHECK(total == 10);
}

TEST_CASE("strong duality and feasibility on random graphs and orientations") {
  std::mt19937_64 gen(31);
  for (int i = 0; i < 30; ++i) {
    const std::size_t n = 1 + i % 8;
    const Graph g = oracle::random_graph(n, gen, 0.5);
    const auto res = fractional_chromatic_with_dual(g);
    CHECK(res.value == res.dual.total);
    CHECK(res.cover.objective == res.value);
    CHECK(is_feasible_cover(g, res.cover));
    CHECK(dual_feasible(n, res.dual.w, [&](oracle::Mask s) { return oracle::is_independent(g, s); }));
    CHECK(res.value <= oracle::chromatic(g));

    Rng rng = substream(2, i);
    const Digraph d = random_orientation(g, rng);
    const auto dres = digraph_fractional_chromatic_with_dual(d);
    const auto out = oracle::out_lists(d);
    CHECK(dres.value == dres.dual.total);
    CHECK(is_feasible_acyclic_cover(d, dres.cover));
    CHECK(dual_feasible(n, dres.dual.w, [&](oracle::Mask s) { return !oracle::has_cycle(out, s); }));
    CHECK(dres.value <= res.value);
  }
}

TEST_CASE("covering LP on a hand-checked instance") {
  // Rows 0..2, columns {0,1}, {1,2}, {0,2}: optimum 3/2 with every column at 1/2.
  const std::vector<VertexSet> cols = {VertexSet{0, 1}, VertexSet{1, 2}, VertexSet{0, 2}};
  const auto sol = solve_covering_lp(3, cols);
  CHECK(sol.objective == q(3, 2));
  for (const auto& x : sol.x) CHECK(x == q(1, 2));
  for (const auto& y : sol.y) CHECK(y == q(1, 2));
}

TEST_CASE("LP budget") {
  Limits tight;
  tight.lp_vertices = 4;
  CHECK_THROWS_AS(fractional_chromatic(graphs::cycle(5), tight), BudgetExceeded);
}
