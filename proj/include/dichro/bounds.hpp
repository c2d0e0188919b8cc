#pragma once

#include <cstdint>

#include "dichro/rational.hpp"

namespace dichro {

/// n / (2 log2 n), the lower bound for the dichromatic number of K_n. n >= 2.
long double enl_bound(std::uint64_t n);

/// min{nk / (4 log2(nk)), n / 2}, the bound for K_n^(k). nk >= 2.
long double complete_blowup_bound(std::uint64_t n, std::uint64_t k);

/// floor((n - 2k + 2) / (8 log2(n / k))) for n >= 2k, k >= 1.
std::int64_t kneser_dichromatic_bound(std::uint64_t n, std::uint64_t k);

/// Sides of 2 + 2 log2 m <= ceil(m / z) with the exact verdict 4 m^2 <= 2^ceil(m / z).
struct InequalityCheck {
  std::uint64_t m = 0;
  std::uint64_t divisor = 0;
  long double lhs = 0;       // 2 + 2 log2 m
  std::uint64_t rhs = 0;     // ceil(m / divisor)
  bool holds = false;
};

InequalityCheck power_inequality(std::uint64_t m, std::uint64_t divisor);

/// m = C(2r, x) with r = floor(k / 2), x = r (k even) or r - 1 (k odd),
/// divisor floor(2^(k/2 - 2)). Needs k >= 4.
InequalityCheck kneser_family_large(std::uint64_t k);

/// m = C(r + 2, 4) with r = floor(k / 2), divisor floor((k + 1) / 8). Needs k >= 7.
InequalityCheck kneser_family_small(std::uint64_t k);

/// Least integer n >= from with n >= base + coeff * log2(n / k).
std::uint64_t least_n_satisfying(std::uint64_t from, std::uint64_t base, std::uint64_t coeff, std::uint64_t k);

}  // namespace dichro
