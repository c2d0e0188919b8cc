#include "dichro/rational.hpp"

#include <cctype>
#include <cmath>

#include "dichro/errors.hpp"

namespace dichro {

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

BigInt parse_integer(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  return BigInt(std::string(s), 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const auto num = text.substr(0, slash);
  if (!is_integer_literal(num)) throw ParseError("malformed rational '" + std::string(text) + "'");
  if (slash == std::string_view::npos) return Rational(parse_integer(num));
  const auto den = text.substr(slash + 1);
  if (!is_integer_literal(den) || den.front() == '-' || den.front() == '+')
    throw ParseError("malformed rational '" + std::string(text) + "'");
  BigInt d = parse_integer(den);
  if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  Rational r(parse_integer(num), d);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string to_string(const BigInt& z) { return z.get_str(); }

BigInt floor(const Rational& r) {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

BigInt ceil(const Rational& r) {
  BigInt q;
  mpz_cdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

BigInt binomial(std::uint64_t n, std::uint64_t k) {
  BigInt out;
  if (k > n) return out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

BigInt factorial(std::uint64_t n) {
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

long double to_long_double(const BigInt& z) {
  // mpz_get_d truncates to double; go through the exponent for large values.
  long exp = 0;
  const double mant = mpz_get_d_2exp(&exp, z.get_mpz_t());
  return std::ldexp(static_cast<long double>(mant), static_cast<int>(exp));
}

long double to_long_double(const Rational& r) {
  // Scale so the integer quotient carries 64+ significant bits.
  const long shift = 80 + static_cast<long>(mpz_sizeinbase(r.get_den_mpz_t(), 2)) -
                     static_cast<long>(mpz_sizeinbase(r.get_num_mpz_t(), 2));
  BigInt scaled = r.get_num();
  if (shift > 0) scaled <<= static_cast<unsigned long>(shift);
  else scaled >>= static_cast<unsigned long>(-shift);
  BigInt q = scaled / r.get_den();
  return std::ldexp(to_long_double(q), static_cast<int>(-shift));
}

long double log2(const BigInt& z) {
  long exp = 0;
  const double mant = mpz_get_d_2exp(&exp, z.get_mpz_t());
  return static_cast<long double>(exp) + std::log2(static_cast<long double>(mant));
}

namespace {

Rational make_rational(long num, long den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace

const Rational& euler_lower() {
  static const Rational e_lo = make_rational(2718281828L, 1000000000L);
  return e_lo;
}

const Rational& euler_upper() {
  static const Rational e_hi = make_rational(2718281829L, 1000000000L);
  return e_hi;
}

}  // namespace dichro
