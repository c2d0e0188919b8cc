#include <doctest.h>

#include "dichro/errors.hpp"
#include "dichro/graph.hpp"
#include "dichro/vertex_set.hpp"

using namespace dichro;

TEST_CASE("vertex sets across word boundaries") {
  VertexSet s{1, 63, 64, 130};
  CHECK(s.size() == 4);
  CHECK(s.contains(64));
  CHECK_FALSE(s.contains(65));
  CHECK(s.extent() == 131);
  s.erase(130);
  CHECK(s.word_count() == 2);
  CHECK(s.to_string() == "{1,63,64}");
  CHECK((s & VertexSet{63, 64, 99}) == VertexSet{63, 64});
  CHECK((s - VertexSet{1}) == VertexSet{63, 64});
  CHECK(VertexSet{2, 5}.is_subset_of(VertexSet::range(6)));
  CHECK(VertexSet::from_mask(0b1011).elements() == std::vector<Vertex>{0, 1, 3});
  CHECK_THROWS(s.mask());
  CHECK(VertexSet{}.empty());
}

TEST_CASE("graph construction rejects loops, duplicates and out-of-range endpoints") {
  Graph g(3);
  g.add_edge(0, 1);
  CHECK_THROWS_AS(g.add_edge(1, 0), InvalidArgument);
  CHECK_THROWS_AS(g.add_edge(2, 2), InvalidArgument);
  CHECK_THROWS_AS(g.add_edge(0, 3), InvalidArgument);
  CHECK(g.edge_count() == 1);
}

TEST_CASE("standard families") {
  CHECK(graphs::complete(5).edge_count() == 10);
  CHECK(graphs::cycle(5).edge_count() == 5);
  CHECK(graphs::path(4).edge_count() == 3);
  CHECK(graphs::star(4).order() == 5);
  CHECK(graphs::complete_bipartite(2, 3).edge_count() == 6);
  CHECK(graphs::empty(4).edge_count() == 0);
  const auto k4 = graphs::complete(4);
  CHECK(k4.induced_edge_count(VertexSet{0, 1, 2}) == 3);
  CHECK(k4.induced(VertexSet{1, 3}).edge_count() == 1);
}

TEST_CASE("digraph arcs follow the reversal flags") {
  const Graph p = graphs::path(3);
  const Digraph d(p, {false, true});
  CHECK(d.has_arc(0, 1));
  CHECK(d.has_arc(2, 1));
  CHECK(d.in_neighbors(1) == VertexSet{0, 2});
  CHECK(d.reversed_digraph().has_arc(1, 0));
  CHECK(Digraph::from_arcs(3, {{0, 1}, {2, 1}}) == d);
}

TEST_CASE("named digraphs") {
  const auto cyc = digraphs::directed_cycle(4);
  CHECK(cyc.arc_count() == 4);
  for (Vertex v = 0; v < 4; ++v) CHECK(cyc.has_arc(v, (v + 1) % 4));
  const auto paley = digraphs::paley7();
  CHECK(paley.arc_count() == 21);
  for (Vertex v = 0; v < 7; ++v) CHECK(paley.out_neighbors(v).size() == 3);
  const auto tt = digraphs::transitive_tournament(5);
  CHECK(tt.out_degree_sequence() == std::vector<std::size_t>{4, 3, 2, 1, 0});
}
