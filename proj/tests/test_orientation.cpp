#include <doctest.h>

#include <random>

#include "dichro/errors.hpp"
#include "dichro/orientation.hpp"
#include "dichro/random.hpp"
#include "oracle.hpp"

using namespace dichro;

TEST_CASE("acyclicity of named digraphs") {
  CHECK(is_acyclic(digraphs::transitive_tournament(6)));
  CHECK_FALSE(is_acyclic(digraphs::directed_cycle(3)));
  CHECK(is_acyclic(digraphs::directed_cycle(3), VertexSet{0, 1}));
  CHECK(is_acyclic(digraphs::directed_cycle(3), VertexSet{}));
  CHECK_FALSE(is_acyclic(digraphs::paley7(), VertexSet{0, 1, 3, 2}));
}

TEST_CASE("acyclicity agrees with a DFS on random digraphs, including > 64 vertices") {
  std::mt19937_64 gen(11);
  for (int round = 0; round < 40; ++round) {
    const std::size_t n = round < 30 ? 3 + round % 9 : 70 + round;
    const Graph g = oracle::random_graph(n, gen, round < 30 ? 0.4 : 0.03);
    Rng rng = substream(5, round);
    const Digraph d = random_orientation(g, rng);
    if (n <= 64) {
      const auto out = oracle::out_lists(d);
      for (std::uint64_t s = 0; s < (std::uint64_t{1} << std::min<std::size_t>(n, 10)); ++s)
        CHECK(is_acyclic(d, VertexSet::from_mask(s)) == !oracle::has_cycle(out, s));
    } else {
      // Reverse-peeling from sinks must agree with source peeling.
      CHECK(is_acyclic(d) == is_acyclic(d.reversed_digraph()));
    }
  }
}

TEST_CASE("acyclic orientation counts") {
  CHECK(count_acyclic_orientations(graphs::complete(3)) == 6);
  CHECK(count_acyclic_orientations(graphs::cycle(4)) == 14);
  CHECK(count_acyclic_orientations(graphs::path(3)) == 4);
  CHECK(count_acyclic_orientations_by_sinks(graphs::complete(3)) == 6);
  CHECK(count_acyclic_orientations_by_sinks(graphs::cycle(4)) == 14);
  CHECK(count_acyclic_orientations_by_sinks(graphs::complete(8)) == 40320);
  CHECK(count_acyclic_orientations_by_sinks(graphs::empty(3)) == 1);
}

TEST_CASE("both counting routes agree with the brute-force oracle") {
  std::mt19937_64 gen(3);
  for (int i = 0; i < 25; ++i) {
    const Graph g = oracle::random_graph(2 + i % 6, gen, 0.5);
    const auto expected = oracle::acyclic_orientations(g);
    CHECK(count_acyclic_orientations(g) == expected);
    CHECK(count_acyclic_orientations_by_sinks(g) == expected);
    CHECK(count_acyclic_orientations(g) <= acyclic_orientation_bound(g));
  }
}

TEST_CASE("orientation budgets") {
  Limits small;
  small.enumeration_edges = 5;
  CHECK_THROWS_AS(count_acyclic_orientations(graphs::complete(4), small), BudgetExceeded);
}

TEST_CASE("average degree and the probability bound") {
  CHECK(average_degree(graphs::complete(4), VertexSet::range(4)) == 3);
  CHECK(average_degree(graphs::path(3), VertexSet{0, 1, 2}) == Rational(4, 3));
  CHECK_THROWS_AS(average_degree(graphs::path(3), VertexSet{}), InvalidArgument);
  CHECK_THROWS_AS(acyclic_probability_bound(graphs::empty(3)), InvalidArgument);
  // K8: 40320 / 2^28 must not exceed the bound.
  const long double exact = 40320.0L / 268435456.0L;
  CHECK(exact <= acyclic_probability_bound(graphs::complete(8)) + kBoundTolerance);
}

TEST_CASE("seeded orientations are reproducible") {
  const auto g = std::make_shared<const Graph>(graphs::complete(9));
  Rng a = substream(42, 7), b = substream(42, 7), c = substream(42, 8);
  CHECK(random_orientation(g, a) == random_orientation(g, b));
  Rng a2 = substream(42, 7);
  CHECK_FALSE(random_orientation(g, a2) == random_orientation(g, c));
  CHECK(orientation_from_code(g, 0) == digraphs::transitive_tournament(9));
}
