#pragma once

#include <cstdint>

#include "dichro/graph.hpp"
#include "dichro/limits.hpp"
#include "dichro/random.hpp"
#include "dichro/rational.hpp"

namespace dichro {

/// 2 e(G[S]) / |S|. Throws InvalidArgument for S = {}.
Rational average_degree(const Graph& g, const VertexSet& s);

/// True iff D[S] has no directed cycle (in-degree-0 peeling). Empty S is acyclic.
bool is_acyclic(const Digraph& d, const VertexSet& s);
bool is_acyclic(const Digraph& d);

/// Peeling on a <= 64-vertex digraph given per-vertex in-neighbour masks.
bool is_acyclic_mask(const std::uint64_t* in_masks, std::uint64_t s) noexcept;

/// One fair coin per edge (64 edges per raw draw), in edges() order.
Digraph random_orientation(const Graph& g, Rng& rng);
Digraph random_orientation(const std::shared_ptr<const Graph>& g, Rng& rng);

/// Orientation whose bit i (binary counter `code`) reverses edges()[i].
Digraph orientation_from_code(const std::shared_ptr<const Graph>& g, std::uint64_t code);

/// Exact count by enumerating all 2^e(G) orientations.
BigInt count_acyclic_orientations(const Graph& g, const Limits& limits = {});

/// Exact count by inclusion-exclusion over the (independent) sink set:
/// a(S) = sum over nonempty independent T in S of (-1)^(|T|+1) a(S \ T).
BigInt count_acyclic_orientations_by_sinks(const Graph& g, const Limits& limits = {});

/// prod_v (deg(v) + 1)
BigInt acyclic_orientation_bound(const Graph& g);

/// 2^(-e (1 - 2 alpha)) with alpha = log2(avg_deg + 1) / avg_deg. Throws for e = 0.
long double acyclic_probability_bound(const Graph& g);

/// Comparison slack for the floating-point bounds.
inline constexpr long double kBoundTolerance = 1e-12L;

}  // namespace dichro
