#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "dichro/graph.hpp"
#include "dichro/kneser.hpp"
#include "dichro/limits.hpp"
#include "dichro/rational.hpp"

namespace dichro {

struct CopyCheck {
  bool all_cyclic = false;
  std::size_t copies_checked = 0;
  std::size_t copies_total = 0;        // C(m, r)^2 per edge of H
  std::optional<Edge> edge;            // edge of H carrying the acyclic copy
  std::optional<VertexSet> acyclic_copy;
};

/// For every edge uv of H and every pair of r-subsets (r = ceil(m / k)) of the
/// copies of u and v, the induced K_{r,r} must contain a directed cycle. H is
/// read off the blow-up through `map`. Stops at the first acyclic copy.
CopyCheck blowup_copies_cyclic(const Digraph& d, const BlowUpMap& map, std::size_t k, const Limits& limits = {});

/// 2 + 2 log2 m <= ceil(m / k), evaluated exactly as 4 m^2 <= 2^ceil(m / k).
bool blowup_condition(std::uint64_t m, std::uint64_t k);

/// 2^(-r^2 + 2r) m^(2r): per-edge bound on the chance some K_{r,r} copy is acyclic.
Rational blowup_failure_bound(std::uint64_t m, std::uint64_t r);

struct BlowUpOrientation {
  Digraph digraph;
  BlowUpMap map;
  std::size_t r = 0;
  bool condition_holds = false;
  Rational failure_bound;
  std::uint64_t tries = 0;         // summed over edges of H
  std::uint64_t max_edge_tries = 0;
  CopyCheck check;
};

/// Orients H^(m) so that every K_{r,r} copy is cyclic. Arcs inside different
/// K_{m,m} blocks are independent, so each block is resampled on its own
/// (edge e, try i uses substream(seed, e * 2^32 + i)). Throws TriesExhausted
/// when a block fails max_tries times. Needs m <= 32.
BlowUpOrientation orient_blowup(const Graph& h, std::size_t m, std::size_t k, std::uint64_t max_tries,
                                std::uint64_t seed, const Limits& limits = {});

/// Part structure of a balanced complete multipartite graph (n parts of size k).
struct CompleteBlowUp {
  std::size_t n = 0;
  std::size_t k = 0;
  std::vector<std::vector<Vertex>> parts;
};

/// nullopt unless g is K_n^(k) up to relabelling.
std::optional<CompleteBlowUp> recognize_complete_blowup(const Graph& g);

/// max(ceil(4 log2(nk)), 2k).
std::uint64_t complete_blowup_t(std::uint64_t n, std::uint64_t k);

/// Every t-subset of D contains a directed cycle (full C(n, t) scan).
/// Returns the number of subsets scanned, or the first acyclic one.
struct SubsetScan {
  bool all_cyclic = true;
  std::size_t scanned = 0;
  std::optional<VertexSet> acyclic;
};
SubsetScan all_t_subsets_cyclic(const Digraph& d, std::size_t t, const Limits& limits = {});

struct CompleteBlowUpReport {
  std::size_t n = 0, k = 0;
  std::uint64_t t = 0;
  std::uint64_t t_formula = 0;
  bool vacuous = false;  // t > nk: no t-subsets exist
  bool certified = false;
  std::optional<Digraph> digraph;
  std::uint64_t tries = 0;
  std::size_t subsets_checked = 0;
  Rational implied_bound;  // nk / (t - 1)
};

/// Seeded search for an orientation of K_n^(k) with every t-subset cyclic.
/// Throws InvalidArgument when g is not a complete blow-up, TriesExhausted
/// after max_tries orientations and BudgetExceeded when C(nk, t) is over cap.
CompleteBlowUpReport orient_complete_blowup(const Graph& g, std::optional<std::uint64_t> t_override,
                                            std::uint64_t max_tries, std::uint64_t seed, const Limits& limits = {});

}  // namespace dichro
