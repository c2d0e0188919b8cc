#pragma once

#include <optional>
#include <span>
#include <vector>

#include "dichro/errors.hpp"
#include "dichro/graph.hpp"
#include "dichro/limits.hpp"
#include "dichro/rational.hpp"

namespace dichro {

/// Non-negative vertex weights with their total.
class Weighting {
 public:
  Weighting() = default;
  explicit Weighting(std::vector<Rational> w);
  static Weighting uniform(std::size_t n, const Rational& value = Rational(1));

  std::size_t size() const noexcept { return w_.size(); }
  const Rational& operator[](Vertex v) const { return w_.at(v); }
  const std::vector<Rational>& values() const noexcept { return w_; }
  const Rational& total() const noexcept { return total_; }
  Rational weight_of(const VertexSet& s) const;
  Weighting scaled(const Rational& factor) const;

 private:
  std::vector<Rational> w_;
  Rational total_ = 0;
};

/// Vertices by non-increasing weight, ties by ascending index.
struct RankedOrder {
  std::vector<Vertex> order;
  std::vector<std::size_t> rank;  // rank[order[i]] == i

  std::size_t size() const noexcept { return order.size(); }
  /// Elements of `s` listed in this order.
  std::vector<Vertex> arrange(const VertexSet& s) const;
  /// The first k vertices of the order (k clamped to n).
  VertexSet head(std::size_t k) const;
};

RankedOrder ranked_order(const Weighting& w);
RankedOrder identity_order(std::size_t n);

/// First floor(s) elements of the ordered list; {} for s < 1.
VertexSet prefix(std::span<const Vertex> ordered, const Rational& s);

/// X is s-principal in Y iff X lies within the first floor(s |X|) elements of Y.
/// Throws InvalidArgument for empty X.
bool is_principal(const VertexSet& x, std::span<const Vertex> y, const Rational& s);

/// |Y_k ∩ X| < k / s for every 1 <= k <= |Y|. The empty set is sparse.
bool is_sparse(const VertexSet& x, std::span<const Vertex> y, const Rational& s);

/// Outcome of splitting a heavy set A by back-degree.
struct BackDegreeDecomposition {
  VertexSet large_position;  // L1: late within A
  VertexSet large_prefix;    // L2: A is thin inside the prefix ending here
  VertexSet small;           // S: back-degree < d
  std::vector<std::size_t> back_degree;  // per vertex of G; 0 outside A
  Rational t;
  Rational d;
};

/// Raised when some high-back-degree vertex fits neither class. The witness
/// V_i ∩ A is t-principal with average degree >= d.
class ClassificationGap : public Error {
 public:
  ClassificationGap(VertexSet witness, Vertex at)
      : Error("classification gap at vertex " + std::to_string(at) + ", witness " + witness.to_string()),
        witness_(std::move(witness)),
        vertex_(at) {}

  const VertexSet& witness() const noexcept { return witness_; }
  Vertex vertex() const noexcept { return vertex_; }

 private:
  VertexSet witness_;
  Vertex vertex_;
};

/// d>(v) = neighbours of v inside A that precede v in the global order;
/// L = {v in A : d>(v) >= d}. The j-th vertex v_i of L joins L1 when
/// |V_i ∩ A| > 2j and L2 when |V_i| > t |V_i ∩ A|; S = A \ L.
BackDegreeDecomposition back_degree_decomposition(const Graph& g, const VertexSet& a, const RankedOrder& order,
                                                  const Rational& t, const Rational& d);
BackDegreeDecomposition back_degree_decomposition(const Graph& g, const VertexSet& a, const Weighting& w,
                                                  const Rational& t, const Rational& d);

/// A t-principal (in V) subset of A with average degree >= d, or nothing. Scans
/// the prefix candidates V_i ∩ A first, then all t-principal subsets by size.
std::optional<VertexSet> find_principal_dense(const Graph& g, const VertexSet& a, const Weighting& w,
                                              const Rational& t, const Rational& d, const Limits& limits = {});

struct DegeneracyColoring {
  std::size_t degeneracy = 0;
  std::size_t colors_used = 0;
  std::vector<std::size_t> color;  // kUncolored outside S
  static constexpr std::size_t kUncolored = static_cast<std::size_t>(-1);
};

/// Min-degree elimination on G[S], then first-fit colouring in reverse
/// elimination order (at most degeneracy + 1 colours).
DegeneracyColoring degeneracy_coloring(const Graph& g, const VertexSet& s);

}  // namespace dichro
