#include "dichro/orientation.hpp"

#include <bit>
#include <cmath>

#include "dichro/errors.hpp"
#include "dichro/parallel.hpp"

namespace dichro {

Rational average_degree(const Graph& g, const VertexSet& s) {
  const std::size_t k = s.size();
  if (k == 0) throw InvalidArgument("average degree of the empty set");
  Rational r(static_cast<unsigned long>(2 * g.induced_edge_count(s)), static_cast<unsigned long>(k));
  r.canonicalize();
  return r;
}

bool is_acyclic_mask(const std::uint64_t* in_masks, std::uint64_t s) noexcept {
  while (s) {
    std::uint64_t sources = 0;
    for (std::uint64_t rest = s; rest; rest &= rest - 1) {
      const int v = std::countr_zero(rest);
      if (!(in_masks[v] & s)) sources |= std::uint64_t{1} << v;
    }
    if (!sources) return false;
    s &= ~sources;
  }
  return true;
}

bool is_acyclic(const Digraph& d, const VertexSet& s) {
  if (d.order() <= 64) return is_acyclic_mask(d.in_masks().data(), s.word(0));
  VertexSet rest = s;
  while (!rest.empty()) {
    VertexSet sources;
    rest.for_each([&](Vertex v) {
      if (!d.in_neighbors(v).intersects(rest)) sources.insert(v);
    });
    if (sources.empty()) return false;
    rest -= sources;
  }
  return true;
}

bool is_acyclic(const Digraph& d) { return is_acyclic(d, d.base().vertices()); }

Digraph random_orientation(const std::shared_ptr<const Graph>& g, Rng& rng) {
  const std::size_t e = g->edge_count();
  std::vector<bool> rev(e);
  std::uint64_t bits = 0;
  for (std::size_t i = 0; i < e; ++i) {
    if (i % 64 == 0) bits = rng();
    rev[i] = bits & 1u;
    bits >>= 1;
  }
  return Digraph(g, std::move(rev));
}

Digraph random_orientation(const Graph& g, Rng& rng) {
  return random_orientation(std::make_shared<const Graph>(g), rng);
}

Digraph orientation_from_code(const std::shared_ptr<const Graph>& g, std::uint64_t code) {
  std::vector<bool> rev(g->edge_count());
  for (std::size_t i = 0; i < rev.size(); ++i) rev[i] = (code >> i) & 1u;
  return Digraph(g, std::move(rev));
}

BigInt count_acyclic_orientations(const Graph& g, const Limits& limits) {
  const std::size_t e = g.edge_count();
  if (e > limits.enumeration_edges || e >= 63)
    throw BudgetExceeded("orientation enumeration (edges)", e, limits.enumeration_edges);
  if (g.order() > 64) throw BudgetExceeded("orientation enumeration (vertices)", g.order(), 64);
  const auto edges = g.edges();
  const std::uint64_t full = g.order() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << g.order()) - 1;
  const std::uint64_t total = std::uint64_t{1} << e;

  // Gray-code walk inside each chunk; one edge flips per step.
  auto chunk = [&](std::uint64_t begin, std::uint64_t end) -> std::uint64_t {
    std::vector<std::uint64_t> in(g.order(), 0);
    const std::uint64_t start_gray = begin ^ (begin >> 1);
    for (std::size_t i = 0; i < e; ++i) {
      auto [u, v] = edges[i];
      if ((start_gray >> i) & 1u) std::swap(u, v);
      in[v] |= std::uint64_t{1} << u;
    }
    std::uint64_t count = 0;
    for (std::uint64_t c = begin; c < end; ++c) {
      if (c != begin) {
        const int i = std::countr_zero(c);
        const auto [u, v] = edges[static_cast<std::size_t>(i)];
        in[u] ^= std::uint64_t{1} << v;
        in[v] ^= std::uint64_t{1} << u;
      }
      if (is_acyclic_mask(in.data(), full)) ++count;
    }
    return count;
  };
  const std::uint64_t count =
      parallel_reduce<std::uint64_t>(total, 0, chunk, [](std::uint64_t a, std::uint64_t b) { return a + b; });
  return BigInt(static_cast<unsigned long>(count));
}

BigInt count_acyclic_orientations_by_sinks(const Graph& g, const Limits& limits) {
  const std::size_t n = g.order();
  if (n > limits.dp_vertices || n > 30) throw BudgetExceeded("sink recurrence (vertices)", n, limits.dp_vertices);
  std::vector<std::uint64_t> adj(n);
  for (Vertex v = 0; v < n; ++v) adj[v] = g.neighbor_mask(v);
  const std::uint64_t subsets = std::uint64_t{1} << n;
  std::vector<bool> independent(subsets, false);
  independent[0] = true;
  for (std::uint64_t s = 1; s < subsets; ++s) {
    const int low = std::countr_zero(s);
    const std::uint64_t rest = s & (s - 1);
    independent[s] = independent[rest] && !(adj[static_cast<std::size_t>(low)] & rest);
  }
  std::vector<BigInt> a(subsets);
  a[0] = 1;
  for (std::uint64_t s = 1; s < subsets; ++s) {
    BigInt acc = 0;
    for (std::uint64_t t = s; t; t = (t - 1) & s) {
      if (!independent[t]) continue;
      if (std::popcount(t) & 1) acc += a[s & ~t];
      else acc -= a[s & ~t];
    }
    a[s] = acc;
  }
  return a[subsets - 1];
}

BigInt acyclic_orientation_bound(const Graph& g) {
  BigInt p = 1;
  for (Vertex v = 0; v < g.order(); ++v) p *= static_cast<unsigned long>(g.degree(v) + 1);
  return p;
}

long double acyclic_probability_bound(const Graph& g) {
  const std::size_t e = g.edge_count();
  if (e == 0) throw InvalidArgument("probability bound needs at least one edge");
  const long double avg = 2.0L * static_cast<long double>(e) / static_cast<long double>(g.order());
  const long double alpha = std::log2(avg + 1.0L) / avg;
  return std::exp2(-static_cast<long double>(e) * (1.0L - 2.0L * alpha));
}

}  // namespace dichro
