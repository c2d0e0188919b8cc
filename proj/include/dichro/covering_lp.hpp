#pragma once

#include <vector>

#include "dichro/rational.hpp"
#include "dichro/vertex_set.hpp"

namespace dichro {

/// Optimal primal/dual pair for
///   min sum_j x_j  s.t.  sum_{j : v in C_j} x_j >= 1 for every v,  x >= 0
///   max sum_v y_v  s.t.  sum_{v in C_j} y_v <= 1 for every j,       y >= 0.
struct CoveringLpSolution {
  Rational objective;
  std::vector<Rational> x;  // per column
  std::vector<Rational> y;  // per row (vertex)
  std::vector<std::size_t> basis;
  std::size_t pivots = 0;
};

/// Exact dual simplex on the covering form, starting from the all-slack basis
/// (dual feasible because every cost is 1). Leaving row: smallest basic index
/// among negative right-hand sides; entering column: minimum ratio, smallest
/// index on ties. Throws InvalidArgument if some row is covered by no column.
CoveringLpSolution solve_covering_lp(std::size_t rows, const std::vector<VertexSet>& columns);

/// Exact feasibility and equal objectives for both sides.
bool is_optimal_pair(std::size_t rows, const std::vector<VertexSet>& columns, const CoveringLpSolution& sol);

}  // namespace dichro
