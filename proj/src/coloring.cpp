#include "dichro/coloring.hpp"

#include <algorithm>
#include <bit>
#include <limits>

#include "dichro/errors.hpp"
#include "dichro/orientation.hpp"

namespace dichro {

namespace {

std::vector<VertexSet> to_sets(const std::vector<std::uint64_t>& masks) {
  std::vector<VertexSet> out;
  out.reserve(masks.size());
  for (auto m : masks) out.push_back(VertexSet::from_mask(m));
  return out;
}

// First-fit: grow each part greedily in index order over the remaining vertices.
std::vector<std::uint64_t> greedy_cover(const SubsetTable& adm) {
  std::vector<std::uint64_t> parts;
  std::uint64_t remaining = adm.full();
  while (remaining) {
    std::uint64_t part = 0;
    for (std::uint64_t rest = remaining; rest; rest &= rest - 1) {
      const std::uint64_t bit = rest & -rest;
      if (adm[part | bit]) part |= bit;
    }
    parts.push_back(part);
    remaining &= ~part;
  }
  return parts;
}

}  // namespace

MinimumCover minimum_cover(const SubsetTable& adm) {
  const std::size_t n = adm.universe();
  const std::uint64_t full = adm.full();
  if (n == 0) return {};
  if (adm[full]) return {1, {VertexSet::range(n)}};

  auto upper = greedy_cover(adm);
  if (upper.size() == 2) return {2, to_sets(upper)};

  // Two parts: complementary admissible pair; fix vertex 0 in the first part.
  for (std::uint64_t rest = 0;; rest = (rest - (full >> 1)) & (full >> 1)) {
    const std::uint64_t s = (rest << 1) | 1u;
    if (adm[s] && adm[full & ~s]) return {2, {VertexSet::from_mask(s), VertexSet::from_mask(full & ~s)}};
    if (rest == (full >> 1)) break;
  }
  if (upper.size() == 3) return {3, to_sets(upper)};

  // dp[S] = 1 + min over maximal admissible M containing low(S) of dp[S \ M].
  const auto maximal = adm.maximal_members(std::numeric_limits<std::size_t>::max());
  std::vector<std::vector<std::uint64_t>> by_vertex(n);
  for (auto m : maximal)
    for (std::uint64_t r = m; r; r &= r - 1) by_vertex[static_cast<std::size_t>(std::countr_zero(r))].push_back(m);

  std::vector<std::uint8_t> dp(full + 1, 0);
  for (std::uint64_t s = 1; s <= full; ++s) {
    if (adm[s]) {
      dp[s] = 1;
    } else {
      std::uint8_t best = std::numeric_limits<std::uint8_t>::max();
      for (auto m : by_vertex[static_cast<std::size_t>(std::countr_zero(s))])
        best = std::min<std::uint8_t>(best, static_cast<std::uint8_t>(1 + dp[s & ~m]));
      dp[s] = best;
    }
    if (s == full) break;
  }

  MinimumCover cover;
  cover.size = dp[full];
  std::uint64_t s = full;
  while (s) {
    if (adm[s]) {
      cover.parts.push_back(VertexSet::from_mask(s));
      break;
    }
    for (auto m : by_vertex[static_cast<std::size_t>(std::countr_zero(s))]) {
      if (dp[s & ~m] + 1 == dp[s]) {
        cover.parts.push_back(VertexSet::from_mask(s & m));
        s &= ~m;
        break;
      }
    }
  }
  return cover;
}

MinimumCover optimal_coloring(const Graph& g, const Limits& limits) {
  return minimum_cover(independent_set_table(g, limits));
}

MinimumCover optimal_acyclic_coloring(const Digraph& d, const Limits& limits) {
  return minimum_cover(acyclic_set_table(d, limits));
}

std::size_t chromatic_number(const Graph& g, const Limits& limits) { return optimal_coloring(g, limits).size; }

std::size_t digraph_chromatic_number(const Digraph& d, const Limits& limits) {
  return optimal_acyclic_coloring(d, limits).size;
}

DichromaticResult dichromatic_number_exact(const Graph& g, const Limits& limits) {
  const std::size_t e = g.edge_count();
  if (e > limits.orientation_edges || e >= 63)
    throw BudgetExceeded("orientation enumeration (edges)", e, limits.orientation_edges);
  const auto base = std::make_shared<const Graph>(g);
  const std::size_t ceiling = chromatic_number(g, limits);

  DichromaticResult best{0, orientation_from_code(base, 0), true, 0};
  // Reversing every arc preserves acyclic sets, so the top edge can stay fixed.
  const std::uint64_t codes = e == 0 ? 1 : std::uint64_t{1} << (e - 1);
  for (std::uint64_t code = 0; code < codes; ++code) {
    Digraph d = orientation_from_code(base, code);
    const std::size_t chi = digraph_chromatic_number(d, limits);
    ++best.orientations_examined;
    if (chi > best.value) {
      best.value = chi;
      best.witness = std::move(d);
      if (chi == ceiling) break;
    }
  }
  return best;
}

DichromaticResult dichromatic_lower_bound_mc(const Graph& g, std::uint64_t trials, std::uint64_t seed,
                                             const Limits& limits) {
  if (trials == 0) throw InvalidArgument("trials must be positive");
  const std::size_t e = g.edge_count();
  if (e < 63 && (std::uint64_t{1} << e) <= trials) {
    Limits widened = limits;
    widened.orientation_edges = std::max(limits.orientation_edges, e);
    return dichromatic_number_exact(g, widened);
  }
  const auto base = std::make_shared<const Graph>(g);
  const std::size_t ceiling = chromatic_number(g, limits);
  Rng first = substream(seed, 0);
  DichromaticResult best{0, random_orientation(base, first), false, 0};
  for (std::uint64_t i = 0; i < trials; ++i) {
    Rng rng = substream(seed, i);
    Digraph d = random_orientation(base, rng);
    const std::size_t chi = digraph_chromatic_number(d, limits);
    ++best.orientations_examined;
    if (chi > best.value) {
      best.value = chi;
      best.witness = std::move(d);
      if (chi == ceiling) {
        best.exact = true;
        break;
      }
    }
  }
  return best;
}

}  // namespace dichro
