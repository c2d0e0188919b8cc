#include "dichro/sparse.hpp"

#include <algorithm>
#include <numeric>

#include "dichro/orientation.hpp"

namespace dichro {

namespace {

Rational from_size(std::size_t k) { return Rational(static_cast<unsigned long>(k)); }

std::size_t floor_size(const Rational& r) {
  if (sgn(r) <= 0) return 0;
  const BigInt f = floor(r);
  if (!f.fits_ulong_p()) return static_cast<std::size_t>(-1);
  return f.get_ui();
}

}  // namespace

Weighting::Weighting(std::vector<Rational> w) : w_(std::move(w)) {
  for (std::size_t i = 0; i < w_.size(); ++i) {
    if (sgn(w_[i]) < 0) throw InvalidArgument("negative weight at vertex " + std::to_string(i));
    total_ += w_[i];
  }
}

Weighting Weighting::uniform(std::size_t n, const Rational& value) {
  return Weighting(std::vector<Rational>(n, value));
}

Rational Weighting::weight_of(const VertexSet& s) const {
  Rational sum = 0;
  s.for_each([&](Vertex v) { sum += w_.at(v); });
  return sum;
}

Weighting Weighting::scaled(const Rational& factor) const {
  std::vector<Rational> out(w_);
  for (auto& x : out) x *= factor;
  return Weighting(std::move(out));
}

std::vector<Vertex> RankedOrder::arrange(const VertexSet& s) const {
  std::vector<Vertex> out = s.elements();
  std::sort(out.begin(), out.end(), [&](Vertex a, Vertex b) { return rank.at(a) < rank.at(b); });
  return out;
}

VertexSet RankedOrder::head(std::size_t k) const {
  VertexSet s;
  for (std::size_t i = 0; i < std::min(k, order.size()); ++i) s.insert(order[i]);
  return s;
}

RankedOrder ranked_order(const Weighting& w) {
  RankedOrder r;
  r.order.resize(w.size());
  std::iota(r.order.begin(), r.order.end(), Vertex{0});
  std::stable_sort(r.order.begin(), r.order.end(), [&](Vertex a, Vertex b) { return w[a] > w[b]; });
  r.rank.resize(w.size());
  for (std::size_t i = 0; i < r.order.size(); ++i) r.rank[r.order[i]] = i;
  return r;
}

RankedOrder identity_order(std::size_t n) { return ranked_order(Weighting::uniform(n)); }

VertexSet prefix(std::span<const Vertex> ordered, const Rational& s) {
  const std::size_t k = std::min(floor_size(s), ordered.size());
  VertexSet out;
  for (std::size_t i = 0; i < k; ++i) out.insert(ordered[i]);
  return out;
}

bool is_principal(const VertexSet& x, std::span<const Vertex> y, const Rational& s) {
  if (x.empty()) throw InvalidArgument("principal sets are nonempty");
  return x.is_subset_of(prefix(y, s * from_size(x.size())));
}

bool is_sparse(const VertexSet& x, std::span<const Vertex> y, const Rational& s) {
  std::size_t inside = 0;
  for (std::size_t k = 1; k <= y.size(); ++k) {
    if (x.contains(y[k - 1])) ++inside;
    // inside < k / s  <=>  inside * s < k
    if (from_size(inside) * s >= from_size(k)) return false;
  }
  return true;
}

BackDegreeDecomposition back_degree_decomposition(const Graph& g, const VertexSet& a, const RankedOrder& order,
                                                  const Rational& t, const Rational& d) {
  const std::size_t n = g.order();
  if (order.size() != n) throw InvalidArgument("order size does not match the graph");
  if (a.extent() > n) throw InvalidArgument("A is not a subset of V");
  BackDegreeDecomposition out;
  out.t = t;
  out.d = d;
  out.back_degree.assign(n, 0);

  VertexSet seen_in_a;  // A ∩ V_i while sweeping
  std::size_t j = 0;    // index within L
  for (std::size_t i = 0; i < n; ++i) {
    const Vertex v = order.order[i];
    if (!a.contains(v)) continue;
    const std::size_t back = g.neighbors(v).intersection_size(seen_in_a);
    out.back_degree[v] = back;
    seen_in_a.insert(v);
    if (from_size(back) < d) {
      out.small.insert(v);
      continue;
    }
    ++j;
    const std::size_t prefix_len = i + 1;            // |V_i|
    const std::size_t in_a = seen_in_a.size();       // |V_i ∩ A|
    bool placed = false;
    if (in_a > 2 * j) {
      out.large_position.insert(v);
      placed = true;
    }
    if (from_size(prefix_len) > t * from_size(in_a)) {
      out.large_prefix.insert(v);
      placed = true;
    }
    if (!placed) throw ClassificationGap(seen_in_a, v);
  }
  return out;
}

BackDegreeDecomposition back_degree_decomposition(const Graph& g, const VertexSet& a, const Weighting& w,
                                                  const Rational& t, const Rational& d) {
  return back_degree_decomposition(g, a, ranked_order(w), t, d);
}

namespace {

// k-subsets of `pool` (in order) with at least `need_edges` induced edges.
struct DenseSubsetSearch {
  const Graph& g;
  const std::vector<Vertex>& pool;
  std::size_t k;
  std::size_t need_edges;
  std::size_t budget;
  std::size_t visited = 0;
  std::vector<Vertex> chosen;
  VertexSet current;

  std::optional<VertexSet> run(std::size_t start, std::size_t edges) {
    if (chosen.size() == k) return edges >= need_edges ? std::optional<VertexSet>(current) : std::nullopt;
    const std::size_t remaining = k - chosen.size();
    // Each later vertex adds at most |chosen| + (its rank among the rest) edges.
    const std::size_t best_case = edges + remaining * chosen.size() + remaining * (remaining - 1) / 2;
    if (best_case < need_edges) return std::nullopt;
    for (std::size_t i = start; i + remaining <= pool.size(); ++i) {
      if (++visited > budget) throw BudgetExceeded("principal subset search", visited, budget);
      const Vertex v = pool[i];
      const std::size_t added = g.neighbors(v).intersection_size(current);
      chosen.push_back(v);
      current.insert(v);
      if (auto hit = run(i + 1, edges + added)) return hit;
      current.erase(v);
      chosen.pop_back();
    }
    return std::nullopt;
  }
};

}  // namespace

std::optional<VertexSet> find_principal_dense(const Graph& g, const VertexSet& a, const Weighting& w,
                                              const Rational& t, const Rational& d, const Limits& limits) {
  const RankedOrder order = ranked_order(w);
  const std::size_t n = g.order();

  // Prefix candidates V_i ∩ A.
  VertexSet cand;
  for (std::size_t i = 0; i < n; ++i) {
    const Vertex v = order.order[i];
    if (!a.contains(v)) continue;
    cand.insert(v);
    if (average_degree(g, cand) >= d && is_principal(cand, order.order, t)) return cand;
  }

  // Exhaustive: k-subsets of A inside V_{floor(t k)} with 2 e >= d k.
  for (std::size_t k = 1; k <= a.size(); ++k) {
    if (from_size(k - 1) < d) continue;  // average degree of a k-set is at most k - 1
    const std::size_t reach = std::min(floor_size(t * from_size(k)), n);
    std::vector<Vertex> pool;
    for (std::size_t i = 0; i < reach; ++i)
      if (a.contains(order.order[i])) pool.push_back(order.order[i]);
    if (pool.size() < k) continue;
    const BigInt need = ceil(d * from_size(k) / 2);
    DenseSubsetSearch search{g, pool, k, need.get_ui(), limits.principal_candidates, 0, {}, {}};
    if (auto hit = search.run(0, 0)) return hit;
  }
  return std::nullopt;
}

DegeneracyColoring degeneracy_coloring(const Graph& g, const VertexSet& s) {
  DegeneracyColoring out;
  out.color.assign(g.order(), DegeneracyColoring::kUncolored);
  VertexSet rest = s;
  std::vector<Vertex> elimination;
  while (!rest.empty()) {
    Vertex pick = 0;
    std::size_t best = static_cast<std::size_t>(-1);
    rest.for_each([&](Vertex v) {
      const std::size_t deg = g.neighbors(v).intersection_size(rest);
      if (deg < best) {
        best = deg;
        pick = v;
      }
    });
    out.degeneracy = std::max(out.degeneracy, best);
    elimination.push_back(pick);
    rest.erase(pick);
  }
  for (auto it = elimination.rbegin(); it != elimination.rend(); ++it) {
    std::vector<bool> used;
    g.neighbors(*it).for_each([&](Vertex u) {
      const std::size_t c = out.color[u];
      if (c != DegeneracyColoring::kUncolored) {
        if (c >= used.size()) used.resize(c + 1, false);
        used[c] = true;
      }
    });
    std::size_t c = 0;
    while (c < used.size() && used[c]) ++c;
    out.color[*it] = c;
    out.colors_used = std::max(out.colors_used, c + 1);
  }
  return out;
}

}  // namespace dichro
