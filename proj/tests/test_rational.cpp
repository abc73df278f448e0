#include <doctest.h>

#include <limits>

#include "divlie/gaussian.hpp"

using divlie::Rational;
using divlie::Scalar;

TEST_CASE("rational arithmetic is exact and normalised") {
  Rational a(1, 3);
  Rational b(1, 6);
  CHECK(a + b == Rational(1, 2));
  CHECK(a - b == Rational(1, 6));
  CHECK(a * b == Rational(1, 18));
  CHECK(a / b == Rational(2));
  CHECK(Rational(-4, -6) == Rational(2, 3));
  CHECK(Rational(3, -6).str() == "-1/2");
  CHECK_THROWS(Rational(1, 0));
}

TEST_CASE("rational overflow spills to arbitrary precision and back") {
  const long long big = std::numeric_limits<long long>::max();
  Rational x(big);
  Rational y = x * x;
  CHECK_FALSE(y.is_small());
  CHECK(y.numerator() == mpz_class("85070591730234615847396907784232501249"));
  Rational z = y / x;
  CHECK(z.is_small());
  CHECK(z == x);
  Rational s = x + Rational(1);
  CHECK(s - Rational(1) == x);
  CHECK((Rational(std::numeric_limits<long long>::min()) * Rational(-1)).str() == "9223372036854775808");
}

TEST_CASE("rational parsing and ordering") {
  CHECK(Rational::parse("1/3") == Rational(1, 3));
  CHECK(Rational::parse("-7") == Rational(-7));
  CHECK(Rational::parse("123456789012345678901234567890/2").str() == "61728394506172839450617283945");
  CHECK_THROWS(Rational::parse("1/0"));
  CHECK_THROWS(Rational::parse("abc"));
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 3) > Rational(-1, 2));
}

TEST_CASE("gaussian rationals form a field") {
  Scalar i = Scalar::i();
  CHECK(i * i == Scalar(-1));
  Scalar z(Rational(1, 2), Rational(-3));
  Scalar w = Scalar(1) / z;
  CHECK(z * w == Scalar(1));
  CHECK(divlie::parse_scalar("1+i") == Scalar(1) + i);
  CHECK(divlie::parse_scalar("1/3") == Scalar(Rational(1, 3)));
  CHECK(divlie::parse_scalar("-2i") == Scalar(Rational(0), Rational(-2)));
  CHECK(z.str() == "1/2-3i");
  CHECK_THROWS(Scalar(1) / Scalar(0));
}
