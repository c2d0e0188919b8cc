#include <doctest.h>

#include <random>

#include "dichro/orientation.hpp"
#include "dichro/sparse.hpp"
#include "oracle.hpp"

using namespace dichro;

namespace {

Rational q(long p, long d = 1) {
  Rational r(p, d);
  r.canonicalize();
  return r;
}

const std::vector<Vertex> kSix = {0, 1, 2, 3, 4, 5};

}  // namespace

TEST_CASE("ranked order breaks ties by index") {
  CHECK(ranked_order(Weighting({q(1, 2), q(3), q(3)})).order == std::vector<Vertex>{1, 2, 0});
  CHECK(ranked_order(Weighting::uniform(4)).order == std::vector<Vertex>{0, 1, 2, 3});
  const auto r = ranked_order(Weighting({q(5), q(1), q(4)}));
  CHECK(r.order == std::vector<Vertex>{0, 2, 1});
  CHECK(r.rank == std::vector<std::size_t>{0, 2, 1});
  CHECK(r.arrange(VertexSet{1, 2}) == std::vector<Vertex>{2, 1});
  CHECK(r.head(2) == VertexSet{0, 2});
  CHECK_THROWS_AS(Weighting({q(-1)}), InvalidArgument);
}

TEST_CASE("prefixes use the floor") {
  CHECK(prefix(kSix, q(29, 10)) == VertexSet{0, 1});
  CHECK(prefix(kSix, 0).empty());
  CHECK(prefix(kSix, 9) == VertexSet::range(6));
}

TEST_CASE("principal and sparse sets") {
  CHECK(is_principal(VertexSet{0, 1}, kSix, 2));
  CHECK_FALSE(is_principal(VertexSet{4}, kSix, 2));
  CHECK(is_principal(VertexSet::range(6), kSix, 1));
  CHECK_THROWS_AS(is_principal(VertexSet{}, kSix, 2), InvalidArgument);
  CHECK(is_sparse(VertexSet{2, 5}, kSix, 2));
  CHECK_FALSE(is_sparse(VertexSet{1}, kSix, 2));
  CHECK(is_sparse(VertexSet{}, kSix, 2));
}

TEST_CASE("sparse sets are smaller than |Y| / s") {
  std::mt19937_64 gen(4);
  for (int i = 0; i < 2000; ++i) {
    const std::size_t n = 1 + gen() % 10;
    std::vector<Vertex> y(n);
    for (std::size_t k = 0; k < n; ++k) y[k] = k;
    const Rational s = q(static_cast<long>(2 + gen() % 5), 2);
    const VertexSet x = VertexSet::from_mask(gen() & oracle::full(n));
    if (is_sparse(x, y, s)) CHECK(Rational(static_cast<unsigned long>(x.size())) * s < Rational(static_cast<unsigned long>(n)));
  }
}

TEST_CASE("back-degree decomposition of a triangle") {
  const Graph k3 = graphs::complete(3);
  const auto dec = back_degree_decomposition(k3, VertexSet::range(3), Weighting::uniform(3), 3, 2);
  CHECK(dec.back_degree == std::vector<std::size_t>{0, 1, 2});
  CHECK(dec.large_position == VertexSet{2});
  CHECK(dec.large_prefix.empty());
  CHECK(dec.small == VertexSet{0, 1});
}

TEST_CASE("independent A is all small") {
  const Graph c6 = graphs::cycle(6);
  const VertexSet a{0, 2, 4};
  const auto dec = back_degree_decomposition(c6, a, Weighting::uniform(6), 2, 1);
  CHECK(dec.small == a);
  CHECK(dec.large_position.empty());
  CHECK(dec.large_prefix.empty());
}

TEST_CASE("with d = 0 nothing is small; the outcome is a decomposition or a gap") {
  const Graph g = graphs::path(5);
  for (const Rational& t : {q(1), q(2), q(3)}) {
    try {
      const auto dec = back_degree_decomposition(g, VertexSet::range(5), Weighting::uniform(5), t, 0);
      CHECK(dec.small.empty());
    } catch (const ClassificationGap& gap) {
      CHECK(is_principal(gap.witness(), identity_order(5).order, t));
    }
  }
}

TEST_CASE("classification gap witnesses are principal and dense") {
  // Dense prefix with a sparse prefix condition forces the gap.
  const Graph k5 = graphs::complete(5);
  try {
    back_degree_decomposition(k5, VertexSet::range(5), Weighting::uniform(5), 1, 1);
    FAIL("expected a classification gap");
  } catch (const ClassificationGap& gap) {
    CHECK(is_principal(gap.witness(), identity_order(5).order, 1));
    CHECK(average_degree(k5, gap.witness()) >= 1);
  }
}

TEST_CASE("find_principal_dense") {
  CHECK(find_principal_dense(graphs::complete(5), VertexSet::range(5), Weighting::uniform(5), 1, 2) ==
        VertexSet{0, 1, 2});
  CHECK_FALSE(find_principal_dense(graphs::path(8), VertexSet::range(8), Weighting::uniform(8), 3, 2).has_value());
  const auto k9 = find_principal_dense(graphs::complete(9), VertexSet::range(9), Weighting::uniform(9), q(3, 2), 2);
  REQUIRE(k9.has_value());
  CHECK(*k9 == VertexSet{0, 1, 2});
}

TEST_CASE("find_principal_dense agrees with exhaustive search") {
  std::mt19937_64 gen(8);
  for (int i = 0; i < 60; ++i) {
    const std::size_t n = 3 + i % 8;
    const Graph g = oracle::random_graph(n, gen, 0.5);
    std::vector<Rational> w;
    for (std::size_t v = 0; v < n; ++v) w.push_back(q(static_cast<long>(1 + gen() % 5)));
    const Weighting wt(w);
    const VertexSet a = VertexSet::from_mask(gen() & oracle::full(n));
    const Rational t = q(static_cast<long>(2 + gen() % 4), 2);
    const Rational d = q(static_cast<long>(1 + gen() % 4), 2);
    const auto order = ranked_order(wt).order;
    bool exists = false;
    for (oracle::Mask s = a.empty() ? 0 : a.mask(); s && !exists; s = (s - 1) & a.mask()) {
      const VertexSet x = VertexSet::from_mask(s);
      exists = is_principal(x, order, t) &&
               Rational(static_cast<unsigned long>(2 * oracle::edges_inside(g, s))) >= d * Rational(static_cast<unsigned long>(x.size()));
    }
    const auto found = find_principal_dense(g, a, wt, t, d);
    CHECK(found.has_value() == exists);
    if (found) {
      CHECK(found->is_subset_of(a));
      CHECK(is_principal(*found, order, t));
      CHECK(average_degree(g, *found) >= d);
    }
  }
}

TEST_CASE("degeneracy colouring") {
  const auto p = degeneracy_coloring(graphs::path(5), VertexSet::range(5));
  CHECK(p.degeneracy == 1);
  CHECK(p.colors_used == 2);
  const auto k4 = degeneracy_coloring(graphs::complete(4), VertexSet::range(4));
  CHECK(k4.degeneracy == 3);
  CHECK(k4.colors_used == 4);
  const auto c4 = degeneracy_coloring(graphs::cycle(4), VertexSet::range(4));
  CHECK(c4.degeneracy == 2);
  CHECK(c4.colors_used <= 3);
  const auto part = degeneracy_coloring(graphs::complete(4), VertexSet{0, 2});
  CHECK(part.color[1] == DegeneracyColoring::kUncolored);
  CHECK(part.color[0] != part.color[2]);
}
