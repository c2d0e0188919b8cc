#include "dichro/blowup_orientation.hpp"

#include <algorithm>
#include <bit>
#include <map>

#include "dichro/errors.hpp"
#include "dichro/orientation.hpp"
#include "dichro/random.hpp"

namespace dichro {

namespace {

std::size_t ceil_div(std::size_t a, std::size_t b) { return (a + b - 1) / b; }

std::size_t fits(const BigInt& z, std::size_t cap, const char* what) {
  if (!z.fits_ulong_p() || z.get_ui() > cap)
    throw BudgetExceeded(what, z.fits_ulong_p() ? z.get_ui() : static_cast<std::size_t>(-1), cap);
  return z.get_ui();
}

// All r-subsets of {0..m-1} as masks, m <= 64.
std::vector<std::uint64_t> masks_of_size(std::size_t m, std::size_t r) {
  std::vector<std::uint64_t> out;
  if (r == 0 || r > m) return out;
  if (r == 64) return {~std::uint64_t{0}};
  std::uint64_t s = (std::uint64_t{1} << r) - 1;
  while (true) {
    out.push_back(s);
    const std::uint64_t c = s & (~s + 1);
    const std::uint64_t nr = s + c;
    if (nr == 0) break;  // ran past bit 63
    s = (((nr ^ s) >> 2) / c) | nr;
    if (m < 64 && (s >> m)) break;
  }
  return out;
}

// In-masks of the K_{m,m} block: vertices 0..m-1 are copies of u, m..2m-1 of v.
// bit (a * m + b) set means the arc runs v_b -> u_a.
void block_in_masks(const std::vector<std::uint64_t>& bits, std::size_t m, std::uint64_t* in) {
  std::fill(in, in + 2 * m, 0);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      const std::size_t idx = a * m + b;
      if ((bits[idx / 64] >> (idx % 64)) & 1)
        in[a] |= std::uint64_t{1} << (m + b);
      else
        in[m + b] |= std::uint64_t{1} << a;
    }
}

bool block_cyclic(const std::uint64_t* in, std::size_t m, const std::vector<std::uint64_t>& sides,
                  std::size_t& checked, std::uint64_t& bad) {
  for (auto a : sides)
    for (auto b : sides) {
      ++checked;
      const std::uint64_t s = a | (b << m);
      if (is_acyclic_mask(in, s)) {
        bad = s;
        return false;
      }
    }
  return true;
}

std::vector<Edge> original_edges(const Graph& g, const BlowUpMap& map) {
  std::vector<Edge> out;
  for (const auto& [a, b] : g.edges()) {
    const auto [u, cu] = map.backward(a);
    const auto [v, cv] = map.backward(b);
    if (cu == 0 && cv == 0) out.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

CopyCheck blowup_copies_cyclic(const Digraph& d, const BlowUpMap& map, std::size_t k, const Limits& limits) {
  if (k == 0 || map.m == 0) throw InvalidArgument("blow-up check needs k >= 1 and m >= 1");
  if (d.order() != map.original_order * map.m) throw InvalidArgument("digraph order does not match the blow-up map");
  if (map.m > 32) throw BudgetExceeded("blow-up check (copies per vertex)", map.m, 32);
  const std::size_t m = map.m;
  const std::size_t r = ceil_div(m, k);
  const auto edges = original_edges(d.base(), map);
  const BigInt per_edge = binomial(m, r) * binomial(m, r);

  CopyCheck out;
  out.all_cyclic = true;
  out.copies_total = fits(per_edge * static_cast<unsigned long>(edges.size()), limits.subset_checks, "blow-up copy check");
  const auto sides = masks_of_size(m, r);
  std::vector<std::uint64_t> in(2 * m);
  for (const auto& [u, v] : edges) {
    for (std::size_t a = 0; a < m; ++a) {
      in[a] = 0;
      in[m + a] = 0;
    }
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = 0; b < m; ++b) {
        if (d.has_arc(map.forward(v, b), map.forward(u, a)))
          in[a] |= std::uint64_t{1} << (m + b);
        else
          in[m + b] |= std::uint64_t{1} << a;
      }
    std::uint64_t bad = 0;
    if (!block_cyclic(in.data(), m, sides, out.copies_checked, bad)) {
      out.all_cyclic = false;
      out.edge = Edge{u, v};
      VertexSet copy;
      for (std::size_t i = 0; i < 2 * m; ++i)
        if ((bad >> i) & 1) copy.insert(i < m ? map.forward(u, i) : map.forward(v, i - m));
      out.acyclic_copy = copy;
      return out;
    }
  }
  return out;
}

bool blowup_condition(std::uint64_t m, std::uint64_t k) {
  if (m == 0 || k == 0) throw InvalidArgument("condition needs m >= 1 and k >= 1");
  const std::uint64_t r = (m + k - 1) / k;
  BigInt lhs = BigInt(static_cast<unsigned long>(m)) * static_cast<unsigned long>(m) * 4;
  BigInt rhs;
  mpz_ui_pow_ui(rhs.get_mpz_t(), 2, r);
  return lhs <= rhs;
}

Rational blowup_failure_bound(std::uint64_t m, std::uint64_t r) {
  BigInt num, den, mpow;
  mpz_ui_pow_ui(mpow.get_mpz_t(), m, 2 * r);
  mpz_ui_pow_ui(num.get_mpz_t(), 2, 2 * r);
  mpz_ui_pow_ui(den.get_mpz_t(), 2, r * r);
  Rational out(num * mpow, den);
  out.canonicalize();
  return out;
}

BlowUpOrientation orient_blowup(const Graph& h, std::size_t m, std::size_t k, std::uint64_t max_tries,
                                std::uint64_t seed, const Limits& limits) {
  if (k == 0) throw InvalidArgument("k must be at least 1");
  if (max_tries == 0) throw InvalidArgument("max_tries must be positive");
  if (m > 32) throw BudgetExceeded("blow-up orientation (copies per vertex)", m, 32);
  auto bu = blow_up(h, m, limits);
  const std::size_t r = ceil_div(m, k);
  const auto edges = h.edges();
  fits(binomial(m, r) * binomial(m, r), limits.subset_checks, "blow-up copy check");

  BlowUpOrientation out{Digraph(bu.graph, std::vector<bool>(bu.graph.edge_count(), false)),
                        bu.map, r, blowup_condition(m, k), blowup_failure_bound(m, r), 0, 0, {}};
  const auto sides = masks_of_size(m, r);
  std::vector<Arc> arcs;
  std::vector<std::uint64_t> bits((m * m + 63) / 64);
  std::vector<std::uint64_t> in(2 * m);

  for (std::size_t e = 0; e < edges.size(); ++e) {
    const auto [u, v] = edges[e];
    bool done = false;
    for (std::uint64_t attempt = 0; attempt < max_tries && !done; ++attempt) {
      Rng rng = substream(seed, (static_cast<std::uint64_t>(e) << 32) + attempt);
      for (auto& word : bits) word = rng();
      block_in_masks(bits, m, in.data());
      std::size_t checked = 0;
      std::uint64_t bad = 0;
      ++out.tries;
      if (block_cyclic(in.data(), m, sides, checked, bad)) {
        done = true;
        out.max_edge_tries = std::max<std::uint64_t>(out.max_edge_tries, attempt + 1);
      }
    }
    if (!done)
      throw TriesExhausted("edge " + std::to_string(u) + "-" + std::to_string(v) + " has no cyclic block orientation in " +
                               std::to_string(max_tries) + " tries",
                           max_tries);
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = 0; b < m; ++b) {
        const std::size_t idx = a * m + b;
        const Vertex ua = bu.map.forward(u, a), vb = bu.map.forward(v, b);
        if ((bits[idx / 64] >> (idx % 64)) & 1)
          arcs.emplace_back(vb, ua);
        else
          arcs.emplace_back(ua, vb);
      }
  }
  Digraph assembled = Digraph::from_arcs(bu.graph.order(), arcs);
  out.digraph = std::move(assembled);
  out.check = blowup_copies_cyclic(out.digraph, out.map, k, limits);
  return out;
}

std::optional<CompleteBlowUp> recognize_complete_blowup(const Graph& g) {
  const std::size_t n = g.order();
  if (n == 0) return std::nullopt;
  // Non-adjacency must be an equivalence relation with equal class sizes.
  std::vector<std::size_t> part(n, static_cast<std::size_t>(-1));
  CompleteBlowUp out;
  for (Vertex v = 0; v < n; ++v) {
    if (part[v] != static_cast<std::size_t>(-1)) continue;
    std::vector<Vertex> members;
    for (Vertex u = 0; u < n; ++u)
      if (u == v || !g.adjacent(u, v)) members.push_back(u);
    for (auto u : members) {
      if (part[u] != static_cast<std::size_t>(-1)) return std::nullopt;
      part[u] = out.parts.size();
    }
    out.parts.push_back(std::move(members));
  }
  out.n = out.parts.size();
  out.k = out.parts.front().size();
  for (const auto& p : out.parts)
    if (p.size() != out.k) return std::nullopt;
  if (g.edge_count() != out.n * (out.n - 1) / 2 * out.k * out.k) return std::nullopt;
  return out;
}

std::uint64_t complete_blowup_t(std::uint64_t n, std::uint64_t k) {
  if (n == 0 || k == 0) throw InvalidArgument("n and k must be positive");
  // ceil(4 log2(nk)) = least c with 2^c >= (nk)^4.
  BigInt p4 = BigInt(static_cast<unsigned long>(n * k));
  p4 = p4 * p4 * p4 * p4;
  std::uint64_t c = 0;
  BigInt pow2 = 1;
  while (pow2 < p4) {
    pow2 *= 2;
    ++c;
  }
  return std::max<std::uint64_t>(c, 2 * k);
}

SubsetScan all_t_subsets_cyclic(const Digraph& d, std::size_t t, const Limits& limits) {
  const std::size_t n = d.order();
  SubsetScan out;
  if (t > n || t == 0) return out;
  if (n > 64) throw BudgetExceeded("t-subset scan (vertices)", n, 64);
  fits(binomial(n, t), limits.subset_checks, "t-subset scan");
  const auto& in = d.in_masks();
  for (auto s : masks_of_size(n, t)) {
    ++out.scanned;
    if (is_acyclic_mask(in.data(), s)) {
      out.all_cyclic = false;
      out.acyclic = VertexSet::from_mask(s);
      return out;
    }
  }
  return out;
}

CompleteBlowUpReport orient_complete_blowup(const Graph& g, std::optional<std::uint64_t> t_override,
                                            std::uint64_t max_tries, std::uint64_t seed, const Limits& limits) {
  const auto shape = recognize_complete_blowup(g);
  if (!shape) throw InvalidArgument("graph is not a balanced complete multipartite graph");
  if (max_tries == 0) throw InvalidArgument("max_tries must be positive");
  CompleteBlowUpReport out;
  out.n = shape->n;
  out.k = shape->k;
  const std::size_t nk = out.n * out.k;
  out.t_formula = complete_blowup_t(out.n, out.k);
  out.t = t_override ? *t_override : out.t_formula;
  if (out.t < 2) throw InvalidArgument("t must be at least 2");
  out.implied_bound = Rational(static_cast<unsigned long>(nk), static_cast<unsigned long>(out.t - 1));
  out.implied_bound.canonicalize();
  if (out.t > nk) {
    out.vacuous = true;
    out.certified = true;
    return out;
  }
  if (nk > 64) throw BudgetExceeded("t-subset scan (vertices)", nk, 64);
  fits(binomial(nk, out.t), limits.subset_checks, "t-subset scan");
  const auto subsets = masks_of_size(nk, out.t);
  const auto base = std::make_shared<const Graph>(g);
  for (std::uint64_t attempt = 0; attempt < max_tries; ++attempt) {
    Rng rng = substream(seed, attempt);
    Digraph d = random_orientation(base, rng);
    const auto& in = d.in_masks();
    bool ok = true;
    for (auto s : subsets) {
      ++out.subsets_checked;
      if (is_acyclic_mask(in.data(), s)) {
        ok = false;
        break;
      }
    }
    if (ok) {
      out.certified = true;
      out.tries = attempt + 1;
      out.digraph = std::move(d);
      return out;
    }
  }
  throw TriesExhausted("no orientation of K_" + std::to_string(out.n) + "^(" + std::to_string(out.k) +
                           ") with every " + std::to_string(out.t) + "-subset cyclic in " +
                           std::to_string(max_tries) + " tries",
                       max_tries);
}

}  // namespace dichro
