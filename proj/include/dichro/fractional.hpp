#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "dichro/graph.hpp"
#include "dichro/limits.hpp"
#include "dichro/rational.hpp"

namespace dichro {

/// Fractional cover by independent (or acyclic) sets.
struct CoverSolution {
  std::vector<std::pair<VertexSet, Rational>> parts;  // positive weights only
  Rational objective;
};

/// Vertex weighting with every independent (acyclic) set of weight <= 1.
struct CliqueWeighting {
  std::vector<Rational> w;
  Rational total;
};

struct FractionalResult {
  Rational value;
  CoverSolution cover;
  CliqueWeighting dual;
};

/// chi_f(G) with an optimal cover and an optimal fractional clique of equal value.
FractionalResult fractional_chromatic_with_dual(const Graph& g, const Limits& limits = {});
Rational fractional_chromatic(const Graph& g, const Limits& limits = {});

/// Same LP with maximal acyclic sets as columns.
FractionalResult digraph_fractional_chromatic_with_dual(const Digraph& d, const Limits& limits = {});
Rational digraph_fractional_chromatic(const Digraph& d, const Limits& limits = {});

enum class SearchMode { exact, sampled };

struct FractionalDichromaticResult {
  Rational value;
  std::optional<Digraph> witness;
  std::uint64_t orientations_examined = 0;
  bool exact = false;
};

/// exact: max chi_f(D) over every orientation (edge budget applies).
/// sampled: max over `trials` seeded orientations, a certified lower bound.
FractionalDichromaticResult fractional_dichromatic(const Graph& g, SearchMode mode, std::uint64_t trials = 0,
                                                   std::uint64_t seed = 0, const Limits& limits = {});

struct FractionalIndependence {
  Rational value;
  std::vector<Rational> w;  // sums to n; heaviest independent set weighs `value`
};

/// alpha_f(G) = n / chi_f(G); the weighting is the optimal fractional clique
/// rescaled to total n.
FractionalIndependence fractional_independence(const Graph& g, const Limits& limits = {});

/// Per-vertex coverage >= 1, weights in [0, 1], objective = sum, every part admissible.
bool is_feasible_cover(const Graph& g, const CoverSolution& cover);
bool is_feasible_acyclic_cover(const Digraph& d, const CoverSolution& cover);

}  // namespace dichro
