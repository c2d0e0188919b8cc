#pragma once

// Brute-force reference routines for the tests. They share nothing with the
// library beyond the Graph/Digraph containers: cycles by DFS colouring,
// colourings by backtracking, sets as plain bit masks.

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "dichro/graph.hpp"

namespace oracle {

using Mask = std::uint64_t;

inline std::vector<std::vector<int>> out_lists(const dichro::Digraph& d) {
  std::vector<std::vector<int>> out(d.order());
  for (const auto& [a, b] : d.arcs()) out[a].push_back(static_cast<int>(b));
  return out;
}

// DFS with white/grey/black marks restricted to `s`.
inline bool has_cycle(const std::vector<std::vector<int>>& out, Mask s) {
  const int n = static_cast<int>(out.size());
  std::vector<int> mark(n, 0);
  std::function<bool(int)> visit = [&](int v) {
    mark[v] = 1;
    for (int w : out[v]) {
      if (!((s >> w) & 1)) continue;
      if (mark[w] == 1) return true;
      if (mark[w] == 0 && visit(w)) return true;
    }
    mark[v] = 2;
    return false;
  };
  for (int v = 0; v < n; ++v)
    if (((s >> v) & 1) && mark[v] == 0 && visit(v)) return true;
  return false;
}

inline Mask full(std::size_t n) { return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1; }

inline bool is_independent(const dichro::Graph& g, Mask s) {
  for (const auto& [u, v] : g.edges())
    if (((s >> u) & 1) && ((s >> v) & 1)) return false;
  return true;
}

// Smallest k such that V splits into k classes each passing `ok`; backtracking
// over class assignments with symmetry breaking on the first empty class.
inline std::size_t min_classes(std::size_t n, const std::function<bool(Mask)>& ok) {
  for (std::size_t k = 1; k <= n; ++k) {
    std::vector<Mask> cls(k, 0);
    std::function<bool(std::size_t)> place = [&](std::size_t v) {
      if (v == n) return true;
      for (std::size_t c = 0; c < k; ++c) {
        cls[c] |= Mask{1} << v;
        if (ok(cls[c]) && place(v + 1)) return true;
        cls[c] &= ~(Mask{1} << v);
        if (cls[c] == 0) break;
      }
      return false;
    };
    if (place(0)) return k;
  }
  return n;
}

inline std::size_t chromatic(const dichro::Graph& g) {
  if (g.order() == 0) return 0;
  return min_classes(g.order(), [&](Mask s) { return is_independent(g, s); });
}

inline std::size_t digraph_chromatic(const dichro::Digraph& d) {
  if (d.order() == 0) return 0;
  const auto out = out_lists(d);
  return min_classes(d.order(), [&](Mask s) { return !has_cycle(out, s); });
}

// Orientation i of g: bit j reverses the j-th sorted edge.
inline dichro::Digraph orientation(const dichro::Graph& g, std::uint64_t code) {
  std::vector<dichro::Arc> arcs;
  const auto edges = g.edges();
  for (std::size_t j = 0; j < edges.size(); ++j) {
    const auto [u, v] = edges[j];
    if ((code >> j) & 1)
      arcs.emplace_back(v, u);
    else
      arcs.emplace_back(u, v);
  }
  return dichro::Digraph::from_arcs(g.order(), arcs);
}

inline std::uint64_t acyclic_orientations(const dichro::Graph& g) {
  std::uint64_t count = 0;
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << g.edge_count()); ++code)
    count += !has_cycle(out_lists(orientation(g, code)), full(g.order()));
  return count;
}

inline std::size_t dichromatic(const dichro::Graph& g) {
  std::size_t best = 0;
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << g.edge_count()); ++code)
    best = std::max(best, digraph_chromatic(orientation(g, code)));
  return best;
}

inline std::size_t edges_inside(const dichro::Graph& g, Mask s) {
  std::size_t e = 0;
  for (const auto& [u, v] : g.edges()) e += ((s >> u) & 1) && ((s >> v) & 1);
  return e;
}

inline dichro::Graph random_graph(std::size_t n, std::mt19937_64& rng, double p) {
  std::bernoulli_distribution coin(p);
  dichro::Graph g(n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

}  // namespace oracle
