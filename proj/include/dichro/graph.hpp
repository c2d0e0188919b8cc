#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dichro/rational.hpp"
#include "dichro/vertex_set.hpp"

namespace dichro {

/// Undirected edge with first < second.
using Edge = std::pair<Vertex, Vertex>;
/// Directed arc (tail, head).
using Arc = std::pair<Vertex, Vertex>;

/// Simple undirected graph on vertices 0..n-1 with symmetric bit-set adjacency.
class Graph {
 public:
  explicit Graph(std::size_t n = 0);

  /// Throws InvalidArgument on loops, duplicates or out-of-range endpoints.
  static Graph from_edges(std::size_t n, const std::vector<Edge>& edges);

  void add_edge(Vertex u, Vertex v);

  std::size_t order() const noexcept { return adjacency_.size(); }
  std::size_t edge_count() const noexcept { return edge_count_; }
  std::size_t degree(Vertex v) const { return adjacency_.at(v).size(); }
  const VertexSet& neighbors(Vertex v) const { return adjacency_.at(v); }
  bool adjacent(Vertex u, Vertex v) const { return adjacency_.at(u).contains(v); }
  /// Low-word neighbourhood; requires order() <= 64.
  std::uint64_t neighbor_mask(Vertex v) const;

  VertexSet vertices() const { return VertexSet::range(order()); }
  /// Edges sorted lexicographically by (smaller, larger) endpoint.
  std::vector<Edge> edges() const;
  std::size_t induced_edge_count(const VertexSet& s) const;
  Graph induced(const VertexSet& s) const;

  void set_label(Vertex v, std::string label);
  bool has_labels() const noexcept { return !labels_.empty(); }
  std::string label(Vertex v) const;

  friend bool operator==(const Graph& a, const Graph& b);

 private:
  std::vector<VertexSet> adjacency_;
  std::vector<std::string> labels_;
  std::size_t edge_count_ = 0;
};

/// Exactly one arc per base edge. Arc i orients edges()[i]: `reversed[i]`
/// false means (smaller -> larger).
class Digraph {
 public:
  Digraph(std::shared_ptr<const Graph> base, std::vector<bool> reversed);
  Digraph(const Graph& base, std::vector<bool> reversed);

  /// Builds the base graph from the arcs; throws on antiparallel pairs.
  static Digraph from_arcs(std::size_t n, const std::vector<Arc>& arcs);

  const Graph& base() const noexcept { return *base_; }
  const std::shared_ptr<const Graph>& shared_base() const noexcept { return base_; }
  std::size_t order() const noexcept { return out_.size(); }
  std::size_t arc_count() const noexcept { return arcs_.size(); }
  const std::vector<Arc>& arcs() const noexcept { return arcs_; }
  const std::vector<bool>& reversed() const noexcept { return reversed_; }

  const VertexSet& out_neighbors(Vertex v) const { return out_.at(v); }
  const VertexSet& in_neighbors(Vertex v) const { return in_.at(v); }
  bool has_arc(Vertex tail, Vertex head) const { return out_.at(tail).contains(head); }
  std::vector<std::size_t> out_degree_sequence() const;
  /// Low-word in-neighbourhood; requires order() <= 64.
  std::uint64_t in_mask(Vertex v) const;
  const std::vector<std::uint64_t>& in_masks() const;

  Digraph reversed_digraph() const;

  friend bool operator==(const Digraph& a, const Digraph& b);

 private:
  void build();

  std::shared_ptr<const Graph> base_;
  std::vector<bool> reversed_;
  std::vector<Arc> arcs_;
  std::vector<VertexSet> out_;
  std::vector<VertexSet> in_;
  std::vector<std::uint64_t> in_words_;
};

namespace graphs {

Graph complete(std::size_t n);
Graph empty(std::size_t n);
Graph path(std::size_t n);
Graph cycle(std::size_t n);
Graph star(std::size_t leaves);
Graph complete_bipartite(std::size_t a, std::size_t b);

}  // namespace graphs

namespace digraphs {

/// i -> j for all i < j.
Digraph transitive_tournament(std::size_t n);
/// i -> i+1 mod n.
Digraph directed_cycle(std::size_t n);
/// Quadratic-residue tournament on 7 vertices: i -> i + {1, 2, 4} mod 7.
Digraph paley7();

}  // namespace digraphs

}  // namespace dichro
