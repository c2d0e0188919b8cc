#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace dichro {

/// Exact rational in canonical form. mpq_class keeps gcd = 1 and a positive
/// denominator after every arithmetic operation.
using Rational = mpq_class;
using BigInt = mpz_class;

/// Parses "p/q" or "p" (optional sign, decimal digits). Throws ParseError on
/// anything else, including a zero denominator.
Rational parse_rational(std::string_view text);

/// Always "p/q", including integers ("4/1").
std::string to_string(const Rational& r);
std::string to_string(const BigInt& z);

BigInt floor(const Rational& r);
BigInt ceil(const Rational& r);
BigInt binomial(std::uint64_t n, std::uint64_t k);
BigInt factorial(std::uint64_t n);

/// Converts to long double; exact for values representable in the mantissa.
long double to_long_double(const Rational& r);
long double to_long_double(const BigInt& z);

/// log2 of a positive big integer, accurate to long double precision.
long double log2(const BigInt& z);

/// Rational bracket around Euler's number: kEulerLower < e < kEulerUpper.
const Rational& euler_lower();
const Rational& euler_upper();

}  // namespace dichro
