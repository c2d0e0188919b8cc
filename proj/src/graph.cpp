#include "dichro/graph.hpp"

#include <algorithm>

#include "dichro/errors.hpp"

namespace dichro {

Graph::Graph(std::size_t n) : adjacency_(n) {}

Graph Graph::from_edges(std::size_t n, const std::vector<Edge>& edges) {
  Graph g(n);
  for (const auto& [u, v] : edges) g.add_edge(u, v);
  return g;
}

void Graph::add_edge(Vertex u, Vertex v) {
  if (u >= order() || v >= order())
    throw InvalidArgument("edge (" + std::to_string(u) + "," + std::to_string(v) +
                          ") out of range for n = " + std::to_string(order()));
  if (u == v) throw InvalidArgument("loop at vertex " + std::to_string(u));
  if (adjacency_[u].contains(v))
    throw InvalidArgument("duplicate edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
  adjacency_[u].insert(v);
  adjacency_[v].insert(u);
  ++edge_count_;
}

std::uint64_t Graph::neighbor_mask(Vertex v) const {
  if (order() > 64) throw InvalidArgument("neighbor_mask requires at most 64 vertices");
  return adjacency_.at(v).word(0);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < order(); ++u)
    adjacency_[u].for_each([&](Vertex v) {
      if (u < v) out.emplace_back(u, v);
    });
  return out;
}

std::size_t Graph::induced_edge_count(const VertexSet& s) const {
  std::size_t twice = 0;
  s.for_each([&](Vertex v) {
    if (v < order()) twice += adjacency_[v].intersection_size(s);
  });
  return twice / 2;
}

Graph Graph::induced(const VertexSet& s) const {
  const auto vs = s.elements();
  std::vector<std::size_t> index(order(), order());
  for (std::size_t i = 0; i < vs.size(); ++i) index.at(vs[i]) = i;
  Graph g(vs.size());
  for (std::size_t i = 0; i < vs.size(); ++i) {
    adjacency_[vs[i]].for_each([&](Vertex w) {
      if (index[w] < order() && index[w] > i) g.add_edge(i, index[w]);
    });
    if (has_labels()) g.set_label(i, labels_[vs[i]]);
  }
  return g;
}

void Graph::set_label(Vertex v, std::string label) {
  if (v >= order()) throw InvalidArgument("label index out of range");
  if (labels_.empty()) labels_.resize(order());
  labels_[v] = std::move(label);
}

std::string Graph::label(Vertex v) const {
  if (labels_.empty()) return std::to_string(v);
  return labels_.at(v);
}

bool operator==(const Graph& a, const Graph& b) {
  return a.adjacency_ == b.adjacency_ && a.labels_ == b.labels_;
}

Digraph::Digraph(std::shared_ptr<const Graph> base, std::vector<bool> reversed)
    : base_(std::move(base)), reversed_(std::move(reversed)) {
  build();
}

Digraph::Digraph(const Graph& base, std::vector<bool> reversed)
    : Digraph(std::make_shared<const Graph>(base), std::move(reversed)) {}

Digraph Digraph::from_arcs(std::size_t n, const std::vector<Arc>& arcs) {
  Graph g(n);
  for (const auto& [a, b] : arcs) g.add_edge(a, b);
  const auto edges = g.edges();
  std::vector<bool> rev(edges.size());
  for (const auto& [a, b] : arcs) {
    const Edge e{std::min(a, b), std::max(a, b)};
    const auto it = std::lower_bound(edges.begin(), edges.end(), e);
    rev[static_cast<std::size_t>(it - edges.begin())] = a > b;
  }
  return Digraph(std::move(g), std::move(rev));
}

void Digraph::build() {
  const auto edges = base_->edges();
  if (reversed_.size() != edges.size())
    throw InvalidArgument("orientation has " + std::to_string(reversed_.size()) +
                          " bits for " + std::to_string(edges.size()) + " edges");
  const std::size_t n = base_->order();
  out_.assign(n, VertexSet{});
  in_.assign(n, VertexSet{});
  arcs_.clear();
  arcs_.reserve(edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    auto [u, v] = edges[i];
    if (reversed_[i]) std::swap(u, v);
    arcs_.emplace_back(u, v);
    out_[u].insert(v);
    in_[v].insert(u);
  }
  if (n <= 64) {
    in_words_.resize(n);
    for (Vertex v = 0; v < n; ++v) in_words_[v] = in_[v].word(0);
  }
}

std::vector<std::size_t> Digraph::out_degree_sequence() const {
  std::vector<std::size_t> seq(order());
  for (Vertex v = 0; v < order(); ++v) seq[v] = out_[v].size();
  return seq;
}

std::uint64_t Digraph::in_mask(Vertex v) const {
  if (order() > 64) throw InvalidArgument("in_mask requires at most 64 vertices");
  return in_words_.at(v);
}

const std::vector<std::uint64_t>& Digraph::in_masks() const {
  if (order() > 64) throw InvalidArgument("in_masks requires at most 64 vertices");
  return in_words_;
}

Digraph Digraph::reversed_digraph() const {
  std::vector<bool> flipped(reversed_.size());
  for (std::size_t i = 0; i < flipped.size(); ++i) flipped[i] = !reversed_[i];
  return Digraph(base_, std::move(flipped));
}

bool operator==(const Digraph& a, const Digraph& b) {
  return a.arcs_ == b.arcs_ && a.order() == b.order();
}

namespace graphs {

Graph complete(std::size_t n) {
  Graph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph empty(std::size_t n) { return Graph(n); }

Graph path(std::size_t n) {
  Graph g(n);
  for (Vertex v = 1; v < n; ++v) g.add_edge(v - 1, v);
  return g;
}

Graph cycle(std::size_t n) {
  if (n < 3) throw InvalidArgument("cycle needs at least 3 vertices");
  Graph g = path(n);
  g.add_edge(0, n - 1);
  return g;
}

Graph star(std::size_t leaves) {
  Graph g(leaves + 1);
  for (Vertex v = 1; v <= leaves; ++v) g.add_edge(0, v);
  return g;
}

Graph complete_bipartite(std::size_t a, std::size_t b) {
  Graph g(a + b);
  for (Vertex u = 0; u < a; ++u)
    for (Vertex v = a; v < a + b; ++v) g.add_edge(u, v);
  return g;
}

}  // namespace graphs

namespace digraphs {

Digraph transitive_tournament(std::size_t n) {
  return Digraph(graphs::complete(n), std::vector<bool>(n * (n - (n ? 1 : 0)) / 2, false));
}

Digraph directed_cycle(std::size_t n) {
  std::vector<Arc> arcs;
  for (Vertex v = 0; v < n; ++v) arcs.emplace_back(v, (v + 1) % n);
  return Digraph::from_arcs(n, arcs);
}

Digraph paley7() {
  std::vector<Arc> arcs;
  for (Vertex i = 0; i < 7; ++i)
    for (Vertex d : {1, 2, 4}) arcs.emplace_back(i, (i + d) % 7);
  return Digraph::from_arcs(7, arcs);
}

}  // namespace digraphs

}  // namespace dichro
