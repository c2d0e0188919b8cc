#pragma once

#include <cstdint>
#include <vector>

#include "dichro/graph.hpp"
#include "dichro/limits.hpp"

namespace dichro {

/// Bit-packed predicate over all 2^n subsets of a <= 64-vertex (in practice
/// <= dp budget) vertex set. Hereditary families only: independent or acyclic sets.
class SubsetTable {
 public:
  SubsetTable() = default;
  explicit SubsetTable(std::size_t n);

  std::size_t universe() const noexcept { return n_; }
  std::uint64_t full() const noexcept { return full_; }
  bool operator[](std::uint64_t s) const noexcept { return (bits_[s >> 6] >> (s & 63)) & 1u; }
  void set(std::uint64_t s) noexcept { bits_[s >> 6] |= std::uint64_t{1} << (s & 63); }

  /// Members with no admissible one-vertex extension, in increasing mask order.
  std::vector<std::uint64_t> maximal_members(std::size_t cap) const;

 private:
  std::size_t n_ = 0;
  std::uint64_t full_ = 0;
  std::vector<std::uint64_t> bits_;
};

SubsetTable independent_set_table(const Graph& g, const Limits& limits = {});
SubsetTable acyclic_set_table(const Digraph& d, const Limits& limits = {});

/// Bron-Kerbosch with pivoting on the complement graph. Sorted lexicographically.
std::vector<VertexSet> maximal_independent_sets(const Graph& g, const Limits& limits = {});

/// Maximal acyclic vertex sets of D, sorted lexicographically.
std::vector<VertexSet> maximal_acyclic_sets(const Digraph& d, const Limits& limits = {});

/// Heaviest independent set weight under `w` (exact), via maximal independent sets.
Rational max_independent_weight(const Graph& g, const std::vector<Rational>& w,
                                const Limits& limits = {});

Rational set_weight(const VertexSet& s, const std::vector<Rational>& w);

}  // namespace dichro
