#include <doctest.h>

#include <stdexcept>

#include <limits>
#include <numeric>

#include "borda/rational.hpp"

using borda::Rational;

TEST_CASE("rationals are stored reduced with a positive denominator") {
  const Rational r(6, -4);
  CHECK(r.numerator() == -3);
  CHECK(r.denominator() == 2);
  CHECK(Rational(0, 7) == Rational(0));
  CHECK(Rational(0, 7).denominator() == 1);
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("arithmetic agrees with cross-multiplication on a grid") {
  for (int a = -6; a <= 6; ++a) {
    for (int b = 1; b <= 6; ++b) {
      for (int c = -6; c <= 6; ++c) {
        for (int d = 1; d <= 6; ++d) {
          const Rational x(a, b), y(c, d);
          CHECK((x + y) == Rational(a * d + c * b, b * d));
          CHECK((x - y) == Rational(a * d - c * b, b * d));
          CHECK((x * y) == Rational(a * c, b * d));
          if (c != 0) CHECK((x / y) == Rational(a * d, b * c));
          CHECK(((x < y) == (a * d < c * b)));
          CHECK(std::gcd(std::abs((x + y).numerator()), (x + y).denominator()) == 1);
        }
      }
    }
  }
}

TEST_CASE("text round trip and rejection of decimals") {
  CHECK(Rational::parse("3/4") == Rational(3, 4));
  CHECK(Rational::parse("-2/6") == Rational(-1, 3));
  CHECK(Rational::parse("5") == Rational(5));
  CHECK(Rational(9, 10).to_string() == "9/10");
  CHECK(Rational(4, 2).to_string() == "2");
  CHECK(Rational::parse(Rational(-7, 3).to_string()) == Rational(-7, 3));
  CHECK_THROWS_AS(Rational::parse("0.5"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1/"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("a/b"), std::invalid_argument);
}

TEST_CASE("overflow is reported, not wrapped") {
  const Rational big(std::numeric_limits<std::int64_t>::max());
  CHECK_THROWS_AS(big + Rational(1), std::overflow_error);
  CHECK_THROWS_AS(big * Rational(2), std::overflow_error);
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("helpers") {
  CHECK(Rational(-3, 2).abs() == Rational(3, 2));
  CHECK(Rational(-3, 2).sign() == -1);
  CHECK(Rational(0).is_zero());
  CHECK(Rational(4, 2).is_integer());
  CHECK(Rational(1, 4).to_double() == doctest::Approx(0.25));
}
