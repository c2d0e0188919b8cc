#include <doctest.h>

#include <random>

#include "dichro/coloring.hpp"
#include "dichro/errors.hpp"
#include "dichro/orientation.hpp"
#include "dichro/random.hpp"
#include "dichro/set_families.hpp"
#include "oracle.hpp"

using namespace dichro;

TEST_CASE("chromatic numbers of small families") {
  CHECK(chromatic_number(graphs::complete(5)) == 5);
  CHECK(chromatic_number(graphs::cycle(5)) == 3);
  CHECK(chromatic_number(graphs::cycle(6)) == 2);
  CHECK(chromatic_number(graphs::empty(4)) == 1);
  CHECK(chromatic_number(Graph(0)) == 0);
}

TEST_CASE("optimal colourings are proper and agree with backtracking") {
  std::mt19937_64 gen(17);
  for (int i = 0; i < 40; ++i) {
    const Graph g = oracle::random_graph(1 + i % 10, gen, 0.55);
    const auto c = optimal_coloring(g);
    CHECK(c.size == oracle::chromatic(g));
    VertexSet covered;
    for (const auto& part : c.parts) {
      CHECK(oracle::is_independent(g, part.mask()));
      covered |= part;
    }
    CHECK(covered == g.vertices());
  }
}

TEST_CASE("digraph chromatic numbers") {
  CHECK(digraph_chromatic_number(digraphs::paley7()) == 3);
  CHECK(digraph_chromatic_number(digraphs::directed_cycle(5)) == 2);
  CHECK(digraph_chromatic_number(digraphs::transitive_tournament(6)) == 1);
  std::mt19937_64 gen(23);
  for (int i = 0; i < 30; ++i) {
    const Graph g = oracle::random_graph(3 + i % 7, gen, 0.7);
    Rng rng = substream(9, i);
    const Digraph d = random_orientation(g, rng);
    CHECK(digraph_chromatic_number(d) == oracle::digraph_chromatic(d));
  }
}

TEST_CASE("dichromatic numbers by exhaustive orientation search") {
  CHECK(dichromatic_number_exact(graphs::complete(3)).value == 2);
  CHECK(dichromatic_number_exact(graphs::cycle(4)).value == 2);
  CHECK(dichromatic_number_exact(graphs::path(4)).value == 1);
  const auto k4 = dichromatic_number_exact(graphs::complete(4));
  CHECK(k4.value == 2);
  CHECK(digraph_chromatic_number(k4.witness) == 2);
  std::mt19937_64 gen(29);
  for (int i = 0; i < 8; ++i) {
    const Graph g = oracle::random_graph(4 + i % 3, gen, 0.6);
    CHECK(dichromatic_number_exact(g).value == oracle::dichromatic(g));
  }
}

TEST_CASE("sampled dichromatic bound never exceeds the exact value") {
  const Graph k5 = graphs::complete(5);
  const auto exact = dichromatic_number_exact(k5);
  const auto mc = dichromatic_lower_bound_mc(k5, 200, 1);
  CHECK(mc.value <= exact.value);
  CHECK(digraph_chromatic_number(mc.witness) == mc.value);
  CHECK(dichromatic_lower_bound_mc(k5, 200, 1).value == mc.value);
}

TEST_CASE("budgets are enforced") {
  Limits tight;
  tight.dp_vertices = 4;
  CHECK_THROWS_AS(chromatic_number(graphs::complete(5), tight), BudgetExceeded);
  tight = Limits{};
  tight.orientation_edges = 5;
  CHECK_THROWS_AS(dichromatic_number_exact(graphs::complete(4), tight), BudgetExceeded);
}

TEST_CASE("maximal independent sets") {
  const auto sets = maximal_independent_sets(graphs::cycle(5));
  CHECK(sets.size() == 5);
  for (const auto& s : sets) CHECK(s.size() == 2);
  CHECK(maximal_independent_sets(graphs::empty(3)).size() == 1);
  CHECK(maximal_independent_sets(graphs::complete(4)).size() == 4);
}

TEST_CASE("maximal acyclic sets of the directed triangle") {
  const auto sets = maximal_acyclic_sets(digraphs::directed_cycle(3));
  CHECK(sets.size() == 3);
  for (const auto& s : sets) CHECK(s.size() == 2);
}
