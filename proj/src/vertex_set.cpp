#include "dichro/vertex_set.hpp"

#include <algorithm>

#include "dichro/errors.hpp"

namespace dichro {

VertexSet::VertexSet(std::initializer_list<Vertex> vs) {
  for (Vertex v : vs) insert(v);
}

VertexSet VertexSet::from_mask(std::uint64_t mask) {
  VertexSet s;
  if (mask) s.words_.push_back(mask);
  return s;
}

VertexSet VertexSet::from_vertices(const std::vector<Vertex>& vs) {
  VertexSet s;
  for (Vertex v : vs) s.insert(v);
  return s;
}

VertexSet VertexSet::range(std::size_t n) {
  VertexSet s;
  s.words_.assign((n + 63) / 64, ~std::uint64_t{0});
  if (n % 64) s.words_.back() = (std::uint64_t{1} << (n % 64)) - 1;
  return s;
}

void VertexSet::insert(Vertex v) {
  const std::size_t w = v >> 6;
  if (w >= words_.size()) words_.resize(w + 1, 0);
  words_[w] |= std::uint64_t{1} << (v & 63);
}

void VertexSet::erase(Vertex v) {
  const std::size_t w = v >> 6;
  if (w >= words_.size()) return;
  words_[w] &= ~(std::uint64_t{1} << (v & 63));
  trim();
}

std::size_t VertexSet::size() const noexcept {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

bool VertexSet::empty() const noexcept {
  return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

std::size_t VertexSet::extent() const noexcept {
  for (std::size_t w = words_.size(); w-- > 0;)
    if (words_[w]) return (w << 6) + 64 - static_cast<std::size_t>(std::countl_zero(words_[w]));
  return 0;
}

std::uint64_t VertexSet::mask() const {
  for (std::size_t w = 1; w < words_.size(); ++w)
    if (words_[w]) throw InvalidArgument("vertex set does not fit in one 64-bit word");
  return word(0);
}

VertexSet& VertexSet::operator|=(const VertexSet& o) {
  if (o.words_.size() > words_.size()) words_.resize(o.words_.size(), 0);
  for (std::size_t i = 0; i < o.words_.size(); ++i) words_[i] |= o.words_[i];
  return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& o) {
  if (words_.size() > o.words_.size()) words_.resize(o.words_.size());
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
  trim();
  return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& o) {
  const std::size_t n = std::min(words_.size(), o.words_.size());
  for (std::size_t i = 0; i < n; ++i) words_[i] &= ~o.words_[i];
  trim();
  return *this;
}

std::size_t VertexSet::intersection_size(const VertexSet& o) const noexcept {
  const std::size_t n = std::min(words_.size(), o.words_.size());
  std::size_t c = 0;
  for (std::size_t i = 0; i < n; ++i) c += static_cast<std::size_t>(std::popcount(words_[i] & o.words_[i]));
  return c;
}

bool VertexSet::intersects(const VertexSet& o) const noexcept {
  const std::size_t n = std::min(words_.size(), o.words_.size());
  for (std::size_t i = 0; i < n; ++i)
    if (words_[i] & o.words_[i]) return true;
  return false;
}

bool VertexSet::is_subset_of(const VertexSet& o) const noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & ~o.word(i)) return false;
  return true;
}

std::vector<Vertex> VertexSet::elements() const {
  std::vector<Vertex> out;
  out.reserve(size());
  for_each([&](Vertex v) { out.push_back(v); });
  return out;
}

bool operator==(const VertexSet& a, const VertexSet& b) noexcept {
  const std::size_t n = std::max(a.words_.size(), b.words_.size());
  for (std::size_t i = 0; i < n; ++i)
    if (a.word(i) != b.word(i)) return false;
  return true;
}

bool operator<(const VertexSet& a, const VertexSet& b) {
  const auto ea = a.elements();
  const auto eb = b.elements();
  return std::lexicographical_compare(ea.begin(), ea.end(), eb.begin(), eb.end());
}

std::string VertexSet::to_string() const {
  std::string out = "{";
  bool first = true;
  for_each([&](Vertex v) {
    if (!first) out += ",";
    out += std::to_string(v);
    first = false;
  });
  return out + "}";
}

void VertexSet::trim() noexcept {
  while (!words_.empty() && words_.back() == 0) words_.pop_back();
}

}  // namespace dichro
