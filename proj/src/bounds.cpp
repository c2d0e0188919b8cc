#include "dichro/bounds.hpp"

#include <algorithm>
#include <cmath>

#include "dichro/blowup_orientation.hpp"
#include "dichro/errors.hpp"

namespace dichro {

long double enl_bound(std::uint64_t n) {
  if (n < 2) throw InvalidArgument("enl needs n >= 2");
  const long double x = static_cast<long double>(n);
  return x / (2.0L * std::log2(x));
}

long double complete_blowup_bound(std::uint64_t n, std::uint64_t k) {
  if (n == 0 || k == 0 || n * k < 2) throw InvalidArgument("bucg needs n, k >= 1 and nk >= 2");
  const long double nk = static_cast<long double>(n) * static_cast<long double>(k);
  return std::min(nk / (4.0L * std::log2(nk)), static_cast<long double>(n) / 2.0L);
}

std::int64_t kneser_dichromatic_bound(std::uint64_t n, std::uint64_t k) {
  if (k == 0 || n < 2 * k) throw InvalidArgument("kneser-z needs k >= 1 and n >= 2k");
  const long double num = static_cast<long double>(n) - 2.0L * static_cast<long double>(k) + 2.0L;
  const long double den = 8.0L * std::log2(static_cast<long double>(n) / static_cast<long double>(k));
  return static_cast<std::int64_t>(std::floor(num / den));
}

InequalityCheck power_inequality(std::uint64_t m, std::uint64_t divisor) {
  if (m == 0 || divisor == 0) throw InvalidArgument("inequality needs m >= 1 and a positive divisor");
  InequalityCheck c;
  c.m = m;
  c.divisor = divisor;
  c.lhs = 2.0L + 2.0L * std::log2(static_cast<long double>(m));
  c.rhs = (m + divisor - 1) / divisor;
  c.holds = blowup_condition(m, divisor);
  return c;
}

InequalityCheck kneser_family_large(std::uint64_t k) {
  if (k < 4) throw InvalidArgument("family needs k >= 4");
  const std::uint64_t r = k / 2;
  const std::uint64_t x = k % 2 == 0 ? r : r - 1;
  const BigInt m = binomial(2 * r, x);
  // floor(2^((k - 4) / 2)); for odd k this is the integer square root of 2^(k - 4).
  BigInt p2;
  mpz_ui_pow_ui(p2.get_mpz_t(), 2, k - 4);
  BigInt divisor;
  mpz_sqrt(divisor.get_mpz_t(), p2.get_mpz_t());
  if (!m.fits_ulong_p() || !divisor.fits_ulong_p()) throw BudgetExceeded("inequality family (k)", k, 120);
  return power_inequality(m.get_ui(), divisor.get_ui());
}

InequalityCheck kneser_family_small(std::uint64_t k) {
  if (k < 7) throw InvalidArgument("family needs k >= 7");
  const std::uint64_t r = k / 2;
  const BigInt m = binomial(r + 2, 4);
  if (!m.fits_ulong_p()) throw BudgetExceeded("inequality family (k)", k, 1000);
  return power_inequality(m.get_ui(), (k + 1) / 8);
}

std::uint64_t least_n_satisfying(std::uint64_t from, std::uint64_t base, std::uint64_t coeff, std::uint64_t k) {
  if (k == 0 || from == 0) throw InvalidArgument("least_n needs k >= 1 and from >= 1");
  for (std::uint64_t n = from;; ++n) {
    const long double rhs = static_cast<long double>(base) +
                            static_cast<long double>(coeff) * std::log2(static_cast<long double>(n) / k);
    if (static_cast<long double>(n) >= rhs) return n;
  }
}

}  // namespace dichro
