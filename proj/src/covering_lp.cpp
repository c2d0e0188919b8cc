#include "dichro/covering_lp.hpp"

#include "dichro/errors.hpp"

namespace dichro {

CoveringLpSolution solve_covering_lp(std::size_t rows, const std::vector<VertexSet>& columns) {
  const std::size_t m = columns.size();
  const std::size_t width = m + rows;
  CoveringLpSolution sol;
  sol.x.assign(m, Rational(0));
  sol.y.assign(rows, Rational(0));
  if (rows == 0) return sol;

  std::vector<bool> covered(rows, false);
  for (const auto& c : columns)
    c.for_each([&](Vertex v) {
      if (v >= rows) throw InvalidArgument("column mentions row " + std::to_string(v));
      covered[v] = true;
    });
  for (std::size_t i = 0; i < rows; ++i)
    if (!covered[i]) throw InvalidArgument("row " + std::to_string(i) + " is covered by no column");

  // Row i:  -sum_{j ∋ i} x_j + s_i = -1.
  std::vector<std::vector<Rational>> tab(rows, std::vector<Rational>(width, Rational(0)));
  std::vector<Rational> rhs(rows, Rational(-1));
  for (std::size_t j = 0; j < m; ++j) columns[j].for_each([&](Vertex v) { tab[v][j] = -1; });
  for (std::size_t i = 0; i < rows; ++i) tab[i][m + i] = 1;
  std::vector<Rational> reduced(width, Rational(0));
  for (std::size_t j = 0; j < m; ++j) reduced[j] = 1;
  std::vector<std::size_t> basis(rows);
  for (std::size_t i = 0; i < rows; ++i) basis[i] = m + i;
  std::vector<bool> is_basic(width, false);
  for (auto b : basis) is_basic[b] = true;

  for (;;) {
    std::size_t leave = rows;
    for (std::size_t i = 0; i < rows; ++i)
      if (sgn(rhs[i]) < 0 && (leave == rows || basis[i] < basis[leave])) leave = i;
    if (leave == rows) break;

    std::size_t enter = width;
    Rational best_ratio;
    const auto& lrow = tab[leave];
    for (std::size_t j = 0; j < width; ++j) {
      if (is_basic[j] || sgn(lrow[j]) >= 0) continue;
      Rational ratio = reduced[j] / -lrow[j];
      if (enter == width || ratio < best_ratio) {
        enter = j;
        best_ratio = std::move(ratio);
      }
    }
    if (enter == width) throw Error("covering LP is infeasible");

    const Rational pivot = tab[leave][enter];
    for (auto& a : tab[leave])
      if (sgn(a) != 0) a /= pivot;
    rhs[leave] /= pivot;
    const auto& prow = tab[leave];
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == leave || sgn(tab[i][enter]) == 0) continue;
      const Rational f = tab[i][enter];
      for (std::size_t j = 0; j < width; ++j)
        if (sgn(prow[j]) != 0) tab[i][j] -= f * prow[j];
      rhs[i] -= f * rhs[leave];
    }
    if (sgn(reduced[enter]) != 0) {
      const Rational f = reduced[enter];
      for (std::size_t j = 0; j < width; ++j)
        if (sgn(prow[j]) != 0) reduced[j] -= f * prow[j];
    }
    is_basic[basis[leave]] = false;
    is_basic[enter] = true;
    basis[leave] = enter;
    ++sol.pivots;
  }

  for (std::size_t i = 0; i < rows; ++i)
    if (basis[i] < m) sol.x[basis[i]] = rhs[i];
  for (std::size_t i = 0; i < rows; ++i) sol.y[i] = reduced[m + i];
  sol.objective = 0;
  for (const auto& v : sol.x) sol.objective += v;
  sol.basis = std::move(basis);
  return sol;
}

bool is_optimal_pair(std::size_t rows, const std::vector<VertexSet>& columns, const CoveringLpSolution& sol) {
  if (sol.x.size() != columns.size() || sol.y.size() != rows) return false;
  std::vector<Rational> coverage(rows, Rational(0));
  Rational primal = 0;
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (sgn(sol.x[j]) < 0) return false;
    primal += sol.x[j];
    columns[j].for_each([&](Vertex v) { coverage[v] += sol.x[j]; });
  }
  for (const auto& c : coverage)
    if (c < 1) return false;
  Rational dual = 0;
  for (const auto& y : sol.y) {
    if (sgn(y) < 0) return false;
    dual += y;
  }
  for (const auto& col : columns) {
    Rational load = 0;
    col.for_each([&](Vertex v) { load += sol.y[v]; });
    if (load > 1) return false;
  }
  return primal == dual && primal == sol.objective;
}

}  // namespace dichro
