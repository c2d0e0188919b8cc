#include "dichro/set_families.hpp"

#include <algorithm>
#include <bit>

#include "dichro/errors.hpp"
#include "dichro/orientation.hpp"

namespace dichro {

SubsetTable::SubsetTable(std::size_t n)
    : n_(n),
      full_(n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1),
      bits_(((std::uint64_t{1} << n) + 63) / 64, 0) {}

std::vector<std::uint64_t> SubsetTable::maximal_members(std::size_t cap) const {
  std::vector<std::uint64_t> out;
  for (std::uint64_t s = 0; s <= full_; ++s) {
    if (!(*this)[s]) continue;
    bool maximal = true;
    for (std::uint64_t rest = full_ & ~s; rest; rest &= rest - 1) {
      if ((*this)[s | (rest & -rest)]) {
        maximal = false;
        break;
      }
    }
    if (maximal) {
      if (out.size() == cap) throw BudgetExceeded("maximal set columns", cap + 1, cap);
      out.push_back(s);
    }
    if (s == full_) break;
  }
  return out;
}

SubsetTable independent_set_table(const Graph& g, const Limits& limits) {
  const std::size_t n = g.order();
  if (n > limits.dp_vertices || n > 40) throw BudgetExceeded("subset table (vertices)", n, limits.dp_vertices);
  SubsetTable table(n);
  std::vector<std::uint64_t> adj(n);
  for (Vertex v = 0; v < n; ++v) adj[v] = g.neighbor_mask(v);
  table.set(0);
  for (std::uint64_t s = 1; s <= table.full(); ++s) {
    const int low = std::countr_zero(s);
    const std::uint64_t rest = s & (s - 1);
    if (table[rest] && !(adj[static_cast<std::size_t>(low)] & rest)) table.set(s);
  }
  return table;
}

SubsetTable acyclic_set_table(const Digraph& d, const Limits& limits) {
  const std::size_t n = d.order();
  if (n > limits.dp_vertices || n > 40) throw BudgetExceeded("subset table (vertices)", n, limits.dp_vertices);
  SubsetTable table(n);
  const auto& in = d.in_masks();
  table.set(0);
  // S is acyclic iff it has a source v and S - v is acyclic; any source works.
  for (std::uint64_t s = 1; s <= table.full(); ++s) {
    for (std::uint64_t rest = s; rest; rest &= rest - 1) {
      const int v = std::countr_zero(rest);
      if (!(in[static_cast<std::size_t>(v)] & s)) {
        if (table[s & ~(std::uint64_t{1} << v)]) table.set(s);
        break;
      }
    }
  }
  return table;
}

namespace {

struct BronKerbosch {
  const std::vector<VertexSet>& comp;  // complement adjacency
  std::size_t cap;
  std::vector<VertexSet> out;

  void run(VertexSet r, VertexSet p, VertexSet x) {
    if (p.empty()) {
      if (x.empty()) {
        if (out.size() == cap) throw BudgetExceeded("maximal independent sets", cap + 1, cap);
        out.push_back(std::move(r));
      }
      return;
    }
    // Pivot maximising |P & N(u)| over P | X.
    Vertex pivot = 0;
    std::size_t best = 0;
    bool have = false;
    auto consider = [&](Vertex u) {
      const std::size_t c = comp[u].intersection_size(p);
      if (!have || c > best) {
        pivot = u;
        best = c;
        have = true;
      }
    };
    p.for_each(consider);
    x.for_each(consider);
    const VertexSet candidates = p - comp[pivot];
    candidates.for_each([&](Vertex v) {
      VertexSet r2 = r;
      r2.insert(v);
      run(std::move(r2), p & comp[v], x & comp[v]);
      p.erase(v);
      x.insert(v);
    });
  }
};

}  // namespace

std::vector<VertexSet> maximal_independent_sets(const Graph& g, const Limits& limits) {
  const std::size_t n = g.order();
  if (n == 0) return {VertexSet{}};
  const VertexSet all = g.vertices();
  std::vector<VertexSet> comp(n);
  for (Vertex v = 0; v < n; ++v) {
    comp[v] = all - g.neighbors(v);
    comp[v].erase(v);
  }
  BronKerbosch bk{comp, limits.lp_columns, {}};
  bk.run(VertexSet{}, all, VertexSet{});
  std::sort(bk.out.begin(), bk.out.end());
  return bk.out;
}

std::vector<VertexSet> maximal_acyclic_sets(const Digraph& d, const Limits& limits) {
  if (d.order() == 0) return {VertexSet{}};
  const auto table = acyclic_set_table(d, limits);
  std::vector<VertexSet> out;
  for (auto m : table.maximal_members(limits.lp_columns)) out.push_back(VertexSet::from_mask(m));
  std::sort(out.begin(), out.end());
  return out;
}

Rational set_weight(const VertexSet& s, const std::vector<Rational>& w) {
  Rational total = 0;
  s.for_each([&](Vertex v) { total += w.at(v); });
  return total;
}

Rational max_independent_weight(const Graph& g, const std::vector<Rational>& w, const Limits& limits) {
  Rational best = 0;
  for (const auto& s : maximal_independent_sets(g, limits)) best = std::max(best, set_weight(s, w));
  return best;
}

}  // namespace dichro
