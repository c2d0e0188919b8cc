#include <doctest.h>

#include "dichro/errors.hpp"
#include "dichro/graph_io.hpp"
#include "dichro/kneser.hpp"

using namespace dichro;

TEST_CASE("json graphs") {
  const auto in = parse_graph(R"({"n":3,"edges":[[0,1],[1,2],[0,2]]})");
  CHECK(in.graph == graphs::complete(3));
  CHECK_FALSE(in.weights.has_value());
  CHECK_FALSE(in.digraph.has_value());
  const auto w = parse_graph(R"({"n":2,"edges":[[0,1]],"weights":["1/2","3"]})");
  REQUIRE(w.weights.has_value());
  CHECK(to_string((*w.weights)[0]) == "1/2");
  CHECK(w.weights->total() == Rational(7, 2));
}

TEST_CASE("json digraphs") {
  const auto in = parse_graph(R"({"n":3,"arcs":[[0,1],[1,2],[2,0]]})");
  REQUIRE(in.digraph.has_value());
  CHECK(*in.digraph == digraphs::directed_cycle(3));
}

TEST_CASE("invariant violations name the culprit") {
  try {
    parse_graph(R"({"n":3,"edges":[[0,1],[1,0]]})");
    FAIL("expected an error");
  } catch (const InvalidArgument& e) {
    CHECK(std::string(e.what()).find("edge 1") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_graph(R"({"n":3,"edges":[[0,3]]})"), InvalidArgument);
  CHECK_THROWS_AS(parse_graph(R"({"n":3,"edges":[[1,1]]})"), InvalidArgument);
  CHECK_THROWS_AS(parse_graph(R"({"n":2,"edges":[],"weights":["1"]})"), InvalidArgument);
  CHECK_THROWS_AS(parse_graph(R"({"n":2,"edges":[],"weights":["-1","1"]})"), InvalidArgument);
  CHECK_THROWS_AS(parse_graph(R"({"edges":[]})"), InvalidArgument);
}

TEST_CASE("parse errors carry positions") {
  CHECK_THROWS_AS(parse_graph(R"({"n":2,"edges":[],"weights":["3/0","1"]})"), ParseError);
  try {
    parse_graph("{\"n\":2,\n \"edges\": [[0,1]");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
  try {
    parse_graph("3 2\n0 1\n1 x\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
    CHECK(e.column() == 3);
  }
  CHECK_THROWS_AS(parse_graph("3 2\n0 1\n"), ParseError);
  CHECK_THROWS_AS(parse_graph(""), ParseError);
}

TEST_CASE("edge lists") {
  const auto in = parse_graph("4 3\n0 1\n\n1 2\n2 3\n");
  CHECK(in.graph == graphs::path(4));
  CHECK_THROWS_AS(parse_graph("2 1\n0 2\n"), InvalidArgument);
}

TEST_CASE("round trips") {
  const Graph k = kneser_graph(5, 2);
  CHECK(parse_graph(to_json(k)).graph == k);
  CHECK(parse_graph(to_edge_list(k)).graph.edges() == k.edges());
  const Graph b = blow_up(graphs::cycle(5), 3).graph;
  CHECK(parse_graph(to_json(b)).graph == b);
  const auto paley = digraphs::paley7();
  CHECK(*parse_graph(to_json(paley)).digraph == paley);
  const Weighting w({Rational(1, 3), Rational(2)});
  const auto again = parse_graph(to_json(graphs::complete(2), w));
  CHECK(again.weights->values() == w.values());
}
