#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace dichro {

using Vertex = std::size_t;

/// Multi-word bit set over vertex indices. Storage grows on insert; equality
/// ignores trailing zero words, so sets built against different universes
/// compare by content.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(std::initializer_list<Vertex> vs);

  static VertexSet from_mask(std::uint64_t mask);
  static VertexSet from_vertices(const std::vector<Vertex>& vs);
  /// {0, ..., n-1}
  static VertexSet range(std::size_t n);

  void insert(Vertex v);
  void erase(Vertex v);
  bool contains(Vertex v) const noexcept {
    const std::size_t w = v >> 6;
    return w < words_.size() && ((words_[w] >> (v & 63)) & 1u);
  }

  std::size_t size() const noexcept;
  bool empty() const noexcept;
  /// Largest element + 1, or 0 for the empty set.
  std::size_t extent() const noexcept;

  std::size_t word_count() const noexcept { return words_.size(); }
  std::uint64_t word(std::size_t i) const noexcept { return i < words_.size() ? words_[i] : 0; }
  /// Low word; the set must fit in 64 vertices.
  std::uint64_t mask() const;

  VertexSet& operator|=(const VertexSet& o);
  VertexSet& operator&=(const VertexSet& o);
  VertexSet& operator-=(const VertexSet& o);
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  std::size_t intersection_size(const VertexSet& o) const noexcept;
  bool intersects(const VertexSet& o) const noexcept;
  bool is_subset_of(const VertexSet& o) const noexcept;

  std::vector<Vertex> elements() const;

  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits) {
        fn(static_cast<Vertex>((w << 6) + std::countr_zero(bits)));
        bits &= bits - 1;
      }
    }
  }

  friend bool operator==(const VertexSet& a, const VertexSet& b) noexcept;
  /// Lexicographic on the sorted element lists.
  friend bool operator<(const VertexSet& a, const VertexSet& b);

  std::string to_string() const;

 private:
  void trim() noexcept;

  std::vector<std::uint64_t> words_;
};

}  // namespace dichro
