#include "dichro/kneser.hpp"

#include <algorithm>
#include <set>

#include "dichro/errors.hpp"
#include "dichro/rational.hpp"

namespace dichro {

namespace {

// Colex successor on a sorted combination of [1..n]; false after the last one.
bool next_colex(KneserVertex& s, std::uint32_t n) {
  const std::size_t k = s.size();
  for (std::size_t i = 0; i < k; ++i) {
    const std::uint32_t limit = i + 1 < k ? s[i + 1] : n + 1;
    if (s[i] + 1 < limit) {
      ++s[i];
      for (std::size_t j = 0; j < i; ++j) s[j] = static_cast<std::uint32_t>(j + 1);
      return true;
    }
  }
  return false;
}

// All size-`size` subsets of `pool` (sorted), colex over pool positions.
std::vector<KneserVertex> choose_from(const KneserVertex& pool, std::size_t size) {
  std::vector<KneserVertex> out;
  for (const auto& pick : k_subsets(static_cast<std::uint32_t>(pool.size()), static_cast<std::uint32_t>(size))) {
    KneserVertex s;
    for (auto p : pick) s.push_back(pool[p - 1]);
    out.push_back(std::move(s));
  }
  return out;
}

bool disjoint(const KneserVertex& a, const KneserVertex& b) {
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) return false;
    a[i] < b[j] ? ++i : ++j;
  }
  return true;
}

std::size_t checked_count(const BigInt& z, std::size_t cap, const char* what) {
  if (!z.fits_ulong_p() || z.get_ui() > cap)
    throw BudgetExceeded(what, z.fits_ulong_p() ? z.get_ui() : static_cast<std::size_t>(-1), cap);
  return z.get_ui();
}

}  // namespace

std::vector<KneserVertex> k_subsets(std::uint32_t n, std::uint32_t k) {
  std::vector<KneserVertex> out;
  if (k > n) return out;
  KneserVertex s(k);
  for (std::uint32_t i = 0; i < k; ++i) s[i] = i + 1;
  do out.push_back(s);
  while (k > 0 && next_colex(s, n));
  return out;
}

std::string subset_label(const KneserVertex& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(s[i]);
  }
  return out + "}";
}

Graph kneser_graph(std::uint32_t n, std::uint32_t k, const Limits& limits) {
  if (n < 1 || k < 1) throw InvalidArgument("kneser graph needs n >= 1 and k >= 1");
  checked_count(binomial(n, k), limits.graph_vertices, "kneser graph (vertices)");
  const auto verts = k_subsets(n, k);
  Graph g(verts.size());
  for (std::size_t i = 0; i < verts.size(); ++i) {
    g.set_label(i, subset_label(verts[i]));
    for (std::size_t j = i + 1; j < verts.size(); ++j)
      if (disjoint(verts[i], verts[j])) g.add_edge(i, j);
  }
  return g;
}

BlowUp blow_up(const Graph& h, std::size_t m, const Limits& limits) {
  if (m < 1) throw InvalidArgument("blow-up power must be at least 1");
  const std::size_t n = h.order();
  if (n != 0 && m > limits.graph_vertices / n) throw BudgetExceeded("blow-up (vertices)", n * m, limits.graph_vertices);
  BlowUp out{Graph(n * m), BlowUpMap{n, m}};
  for (const auto& [u, v] : h.edges())
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = 0; b < m; ++b) out.graph.add_edge(out.map.forward(u, a), out.map.forward(v, b));
  if (h.has_labels())
    for (Vertex v = 0; v < n; ++v)
      for (std::size_t c = 0; c < m; ++c) out.graph.set_label(out.map.forward(v, c), h.label(v) + "#" + std::to_string(c));
  return out;
}

std::string to_string(EmbeddingCase c) {
  switch (c) {
    case EmbeddingCase::general: return "general";
    case EmbeddingCase::below_t: return "below-t";
    case EmbeddingCase::equal_t: return "equal-t";
  }
  return "?";
}

std::size_t embedding_power(std::uint32_t k, std::uint32_t t, std::uint32_t x, EmbeddingCase c) {
  if (x >= static_cast<std::uint64_t>(k) * t) return 0;
  BigInt p;
  switch (c) {
    case EmbeddingCase::general:
      if (x > static_cast<std::uint64_t>(k) * (t - 1)) return 0;
      p = binomial(static_cast<std::uint64_t>(k) * (t - 1), x);
      break;
    case EmbeddingCase::below_t:
      if (x >= t) return 0;
      p = binomial(static_cast<std::uint64_t>(k) * t, x);
      break;
    case EmbeddingCase::equal_t:
      if (x != t) return 0;
      p = binomial(static_cast<std::uint64_t>(k) * t, x) - k;
      break;
  }
  if (sgn(p) <= 0) return 0;
  return p.fits_ulong_p() ? p.get_ui() : static_cast<std::size_t>(-1);
}

EmbeddingCase best_embedding_case(std::uint32_t k, std::uint32_t t, std::uint32_t x) {
  EmbeddingCase best = EmbeddingCase::general;
  for (auto c : {EmbeddingCase::below_t, EmbeddingCase::equal_t})
    if (embedding_power(k, t, x, c) > embedding_power(k, t, x, best)) best = c;
  return best;
}

EmbeddingWitness kneser_blowup_embedding(std::uint32_t n, std::uint32_t k, std::uint32_t t, std::uint32_t x,
                                         EmbeddingCase kind, const Limits& limits) {
  if (!(0 < k && k < n)) throw InvalidArgument("embedding needs 0 < k < n");
  if (t == 0 || x >= static_cast<std::uint64_t>(k) * t) throw InvalidArgument("embedding needs x < kt");
  const std::size_t power = embedding_power(k, t, x, kind);
  if (power == 0) throw InvalidArgument("case " + to_string(kind) + " does not apply to these parameters");

  EmbeddingWitness w;
  w.n = n;
  w.k = k;
  w.t = t;
  w.x = x;
  w.kind = kind;
  w.power = power;
  w.base = k_subsets(n, k);
  w.blowup = blow_up(kneser_graph(n, k, limits), power, limits);
  w.image.resize(w.blowup.graph.order());
  const std::size_t size = static_cast<std::size_t>(k) * t - x;

  for (Vertex v = 0; v < w.base.size(); ++v) {
    const auto& subset = w.base[v];
    KneserVertex pool;  // X x [t], already sorted under the encoding
    for (auto a : subset)
      for (std::uint32_t b = 1; b <= t; ++b) pool.push_back((a - 1) * t + b);

    std::vector<KneserVertex> images;
    if (kind == EmbeddingCase::general) {
      KneserVertex fixed, rest;
      for (auto a : subset) fixed.push_back((a - 1) * t + 1);
      for (auto e : pool)
        if ((e - 1) % t != 0) rest.push_back(e);
      for (auto extra : choose_from(rest, size - k)) {
        KneserVertex s = fixed;
        s.insert(s.end(), extra.begin(), extra.end());
        std::sort(s.begin(), s.end());
        images.push_back(std::move(s));
      }
    } else {
      for (auto s : choose_from(pool, size)) {
        if (kind == EmbeddingCase::equal_t) {
          std::set<std::uint32_t> proj;
          for (auto e : s) proj.insert((e - 1) / t + 1);
          if (proj.size() != k) continue;
        }
        images.push_back(std::move(s));
      }
    }
    if (images.size() != power) throw Error("embedding construction produced the wrong number of images");
    for (std::size_t c = 0; c < power; ++c) w.image[w.blowup.map.forward(v, c)] = std::move(images[c]);
  }
  return w;
}

EmbeddingCheck verify_embedding(const EmbeddingWitness& w) {
  EmbeddingCheck out;
  const auto& g = w.blowup.graph;
  if (w.image.size() != g.order()) {
    out.reason = "image count differs from blow-up order";
    return out;
  }
  if (w.power != embedding_power(w.k, w.t, w.x, w.kind) || w.blowup.map.m != w.power ||
      g.order() != w.base.size() * w.power) {
    out.reason = "power does not match the case formula";
    return out;
  }
  const std::size_t size = w.target_k();
  for (Vertex v = 0; v < g.order(); ++v) {
    const auto& s = w.image[v];
    bool fine = s.size() == size;
    for (std::size_t i = 0; fine && i < s.size(); ++i)
      fine = s[i] >= 1 && s[i] <= w.target_n() && (i == 0 || s[i - 1] < s[i]);
    if (!fine) {
      out.counterexample = std::make_pair(v, v);
      out.reason = "image of vertex " + std::to_string(v) + " is not a " + std::to_string(size) + "-subset";
      return out;
    }
  }
  std::vector<Vertex> ids(g.order());
  for (Vertex v = 0; v < ids.size(); ++v) ids[v] = v;
  std::sort(ids.begin(), ids.end(), [&](Vertex a, Vertex b) { return w.image[a] < w.image[b]; });
  for (std::size_t i = 1; i < ids.size(); ++i)
    if (w.image[ids[i - 1]] == w.image[ids[i]]) {
      out.counterexample = std::minmax(ids[i - 1], ids[i]);
      out.reason = "two vertices share an image";
      return out;
    }
  for (const auto& [u, v] : g.edges())
    if (!disjoint(w.image[u], w.image[v])) {
      out.counterexample = std::make_pair(u, v);
      out.reason = "adjacent vertices " + std::to_string(u) + " and " + std::to_string(v) + " have overlapping images";
      return out;
    }
  out.ok = true;
  return out;
}

}  // namespace dichro
