#pragma once

#include <cstddef>

namespace dichro {

/// Caps on the exponential routines. Exceeding any of them raises BudgetExceeded
/// instead of truncating.
struct Limits {
  std::size_t dp_vertices = 24;            // subset tables / minimum-cover DP
  std::size_t lp_vertices = 20;            // covering LP rows
  std::size_t orientation_edges = 20;      // exhaustive orientation loops
  std::size_t enumeration_edges = 24;      // count_acyclic_orientations
  std::size_t lp_columns = std::size_t{1} << 20;
  std::size_t principal_candidates = std::size_t{1} << 24;
  std::size_t subset_checks = std::size_t{1} << 24;  // blow-up / t-subset scans
  std::size_t graph_vertices = 4096;       // constructed graphs
};

}  // namespace dichro
