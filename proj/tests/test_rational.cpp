#include <doctest.h>

#include "dichro/errors.hpp"
#include "dichro/rational.hpp"

using namespace dichro;

TEST_CASE("parse and print rationals") {
  CHECK(to_string(parse_rational("6/4")) == "3/2");
  CHECK(to_string(parse_rational("5")) == "5/1");
  CHECK(to_string(parse_rational("-2/6")) == "-1/3");
  CHECK(to_string(parse_rational("0/7")) == "0/1");
  CHECK_THROWS_AS(parse_rational("3/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("1.5"), ParseError);
  CHECK_THROWS_AS(parse_rational(""), ParseError);
  CHECK_THROWS_AS(parse_rational("1/"), ParseError);
  CHECK_THROWS_AS(parse_rational("/2"), ParseError);
}

TEST_CASE("floor and ceil follow the mathematical definitions for negatives") {
  CHECK(floor(parse_rational("7/2")) == 3);
  CHECK(ceil(parse_rational("7/2")) == 4);
  CHECK(floor(parse_rational("-7/2")) == -4);
  CHECK(ceil(parse_rational("-7/2")) == -3);
  CHECK(floor(parse_rational("4")) == 4);
  CHECK(ceil(parse_rational("4")) == 4);
}

TEST_CASE("binomials and factorials") {
  CHECK(binomial(6, 3) == 20);
  CHECK(binomial(3, 5) == 0);
  CHECK(binomial(10, 0) == 1);
  CHECK(factorial(8) == 40320);
  CHECK(factorial(0) == 1);
}

TEST_CASE("euler bracket") {
  CHECK(to_string(euler_lower()) == "679570457/250000000");
  CHECK(euler_lower() < euler_upper());
  CHECK(to_long_double(euler_lower()) < 2.718281828459045L);
  CHECK(to_long_double(euler_upper()) > 2.718281828459045L);
}

TEST_CASE("log2 of big integers") {
  BigInt big;
  mpz_ui_pow_ui(big.get_mpz_t(), 2, 300);
  CHECK(log2(big) == doctest::Approx(300.0));
  CHECK(log2(BigInt(1024)) == doctest::Approx(10.0));
}
