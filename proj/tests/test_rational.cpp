#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "fps/rational.hpp"

using fps::Integer;
using fps::Rational;

TEST_CASE("rationals are canonical after construction") {
  REQUIRE(Rational(2, 4).str() == "1/2");
  REQUIRE(Rational(-2, 4).str() == "-1/2");
  REQUIRE(Rational(2, -4).str() == "-1/2");  // sign moves to the numerator
  REQUIRE(Rational(-2, -4).str() == "1/2");
  REQUIRE(Rational(0, 7).str() == "0");
  REQUIRE(Rational(6, 3).str() == "2");
  REQUIRE_THROWS_AS(Rational(1, 0), fps::precondition_error);
}

TEST_CASE("parsing accepts p and p/q, rejects everything else") {
  REQUIRE(Rational::parse("3/2") == Rational(3, 2));
  REQUIRE(Rational::parse("-3/2") == Rational(-3, 2));
  REQUIRE(Rational::parse("+3") == Rational(3));
  REQUIRE(Rational::parse("0") == Rational(0));
  REQUIRE(Rational::parse("4/6") == Rational(2, 3));  // canonicalized on input

  for (const char* bad : {"", "1.5", "3/-2", "-", "1/", "/2", "a", "1/0", "1 / 2", "2e3"})
    REQUIRE_THROWS_AS(Rational::parse(bad), fps::parse_error);
}

TEST_CASE("arithmetic and comparisons are exact") {
  const Rational a(1, 3), b(1, 6);
  REQUIRE(a + b == Rational(1, 2));
  REQUIRE(a - b == Rational(1, 6));
  REQUIRE(a * b == Rational(1, 18));
  REQUIRE(a / b == Rational(2));
  REQUIRE(-a == Rational(-1, 3));
  REQUIRE(a > b);
  REQUIRE(Rational(-5, 3) < Rational(-3, 2));
  REQUIRE_THROWS_AS(a / Rational(0), fps::precondition_error);
  REQUIRE(Rational(-7, 2).abs() == Rational(7, 2));
  REQUIRE(Rational(7, 3).floor() == Integer(2));
  REQUIRE(Rational(-7, 3).floor() == Integer(-3));
}

TEST_CASE("integer powers") {
  REQUIRE(Rational(2, 3).pow(3) == Rational(8, 27));
  REQUIRE(Rational(2, 3).pow(0) == Rational(1));
  REQUIRE(Rational(2, 3).pow(-2) == Rational(9, 4));
  REQUIRE_THROWS_AS(Rational(0).pow(-1), fps::precondition_error);
}

TEST_CASE("string round trip on random values") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 500; ++i) {
    const long num = static_cast<long>(rng() % 20001) - 10000;
    const long den = static_cast<long>(rng() % 999) + 1;
    const Rational r(num, den);
    REQUIRE(Rational::parse(r.str()) == r);
  }
}

TEST_CASE("decimal rendering with significant digits") {
  REQUIRE(Rational(1000, 1999).decimal(5) == "0.50025");
  REQUIRE(Rational(-1000000, 3996001).decimal(5) == "-0.25025");
  REQUIRE(Rational(500000, 7988005999L).decimal(5) == "0.000062594");
  REQUIRE(Rational(1).decimal(3) == "1.00");
  REQUIRE(Rational(123).decimal(3) == "123");
  REQUIRE(Rational(999, 1000).decimal(2) == "1.0");  // carry across the point
  REQUIRE(Rational(0).decimal(4) == "0");
  REQUIRE(Rational(1, 3).decimal(4) == "0.3333");
  REQUIRE(Rational(2, 3).decimal(4) == "0.6667");
}

TEST_CASE("pochhammer rising factorial") {
  REQUIRE(fps::pochhammer(Rational(5, 7), 0) == Rational(1));
  REQUIRE(fps::pochhammer(Rational(1, 2), 2) == Rational(3, 4));
  REQUIRE(fps::pochhammer(Rational(3), 3) == Rational(60));
  REQUIRE(fps::pochhammer(Rational(-2), 4) == Rational(0));  // hits zero factor
}

TEST_CASE("factorials and binomials") {
  REQUIRE(fps::factorial(0) == Integer(1));
  REQUIRE(fps::factorial(10) == Integer(3628800));
  REQUIRE(fps::binomial(10, 3) == Integer(120));
  REQUIRE(fps::binomial(4, 0) == Integer(1));
}
