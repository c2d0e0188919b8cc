#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "dichro/graph.hpp"
#include "dichro/sparse.hpp"

namespace dichro {

struct GraphInput {
  Graph graph;
  std::optional<Weighting> weights;
  std::optional<Digraph> digraph;  // present when the file lists "arcs"
};

/// JSON ({"n", "edges" | "arcs", optional "weights" as "p/q" strings and
/// "labels"}) when the text starts with '{', else an edge list: "n m" then m
/// lines "u v", 0-based. Throws ParseError (with line and column) for malformed
/// text and InvalidArgument naming the offending edge or weight.
GraphInput parse_graph(std::string_view text);
GraphInput read_graph_file(const std::string& path);

std::string to_json(const Graph& g, const std::optional<Weighting>& weights = std::nullopt);
std::string to_json(const Digraph& d);
std::string to_edge_list(const Graph& g);

}  // namespace dichro
