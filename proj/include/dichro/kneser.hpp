#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dichro/graph.hpp"
#include "dichro/limits.hpp"

namespace dichro {

/// Strictly increasing elements of [n] (1-based).
using KneserVertex = std::vector<std::uint32_t>;

/// All k-subsets of [n] in colexicographic order.
std::vector<KneserVertex> k_subsets(std::uint32_t n, std::uint32_t k);

std::string subset_label(const KneserVertex& s);

/// KG(n, k): k-subsets of [n] (colex ids, labelled "{1,2}"), adjacent when disjoint.
Graph kneser_graph(std::uint32_t n, std::uint32_t k, const Limits& limits = {});

/// Copy c of original vertex v is blow-up vertex v * m + c.
struct BlowUpMap {
  std::size_t original_order = 0;
  std::size_t m = 0;

  Vertex forward(Vertex v, std::size_t copy) const { return v * m + copy; }
  std::pair<Vertex, std::size_t> backward(Vertex id) const { return {id / m, id % m}; }
};

struct BlowUp {
  Graph graph;
  BlowUpMap map;
};

/// H^(m): every vertex becomes an independent m-set, every edge a K_{m,m}.
BlowUp blow_up(const Graph& h, std::size_t m, const Limits& limits = {});

enum class EmbeddingCase {
  general,  // (kt - x)-subsets of X x [t] containing X x {1}
  below_t,  // all (kt - x)-subsets of X x [t], needs x < t
  equal_t,  // those with full projection, needs x = t
};

std::string to_string(EmbeddingCase c);

struct EmbeddingWitness {
  std::uint32_t n = 0, k = 0, t = 0, x = 0;
  EmbeddingCase kind = EmbeddingCase::general;
  std::size_t power = 0;
  std::vector<KneserVertex> base;    // vertices of KG(n, k)
  BlowUp blowup;                     // KG(n, k)^(power)
  std::vector<KneserVertex> image;   // per blow-up vertex, a (kt - x)-subset of [nt]

  std::uint32_t target_n() const { return n * t; }
  std::uint32_t target_k() const { return k * t - x; }
};

/// Power of the blow-up for a case; 0 when the case does not apply.
std::size_t embedding_power(std::uint32_t k, std::uint32_t t, std::uint32_t x, EmbeddingCase c);

/// The case with the largest power among those that apply.
EmbeddingCase best_embedding_case(std::uint32_t k, std::uint32_t t, std::uint32_t x);

/// Maps each copy of X to a (kt - x)-subset of X x [t], encoding (a, b) as (a - 1) t + b.
/// Throws InvalidArgument unless 0 < k < n, x < kt and the case applies with power >= 1.
EmbeddingWitness kneser_blowup_embedding(std::uint32_t n, std::uint32_t k, std::uint32_t t, std::uint32_t x,
                                         EmbeddingCase kind, const Limits& limits = {});

struct EmbeddingCheck {
  bool ok = false;
  std::optional<std::pair<Vertex, Vertex>> counterexample;
  std::string reason;
};

/// Exhaustive: image sizes and range, injectivity, power formula, and
/// disjoint images across every blow-up edge.
EmbeddingCheck verify_embedding(const EmbeddingWitness& w);

}  // namespace dichro
