#pragma once

#include <cstdint>
#include <vector>

#include "dichro/graph.hpp"
#include "dichro/limits.hpp"
#include "dichro/random.hpp"
#include "dichro/set_families.hpp"

namespace dichro {

/// A minimum cover of V by admissible sets (independent or acyclic).
struct MinimumCover {
  std::size_t size = 0;
  std::vector<VertexSet> parts;
};

/// Exact minimum cover of all n vertices by members of a hereditary family.
MinimumCover minimum_cover(const SubsetTable& admissible);

MinimumCover optimal_coloring(const Graph& g, const Limits& limits = {});
MinimumCover optimal_acyclic_coloring(const Digraph& d, const Limits& limits = {});

std::size_t chromatic_number(const Graph& g, const Limits& limits = {});
std::size_t digraph_chromatic_number(const Digraph& d, const Limits& limits = {});

struct DichromaticResult {
  std::size_t value = 0;
  Digraph witness;
  /// True when every orientation was examined (or the chi(G) ceiling was hit).
  bool exact = false;
  std::uint64_t orientations_examined = 0;
};

/// Max of chi(D) over all orientations, enumerated as binary counters over the
/// sorted edge list. Stops early once chi(G) is reached.
DichromaticResult dichromatic_number_exact(const Graph& g, const Limits& limits = {});

/// Certified lower bound: max chi(D) over `trials` seeded orientations. Falls
/// back to exhaustive enumeration when 2^e(G) <= trials.
DichromaticResult dichromatic_lower_bound_mc(const Graph& g, std::uint64_t trials, std::uint64_t seed,
                                             const Limits& limits = {});

}  // namespace dichro
