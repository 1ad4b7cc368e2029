#include <doctest.h>

#include "hyperdyn/rational.hpp"

using namespace hyperdyn;

TEST_CASE("rationals stay reduced with positive denominators") {
  Rational r(BigInt(6), BigInt(8));
  CHECK(r.numerator() == 3);
  CHECK(r.denominator() == 4);
  Rational n(BigInt(3), BigInt(-6));
  CHECK(n.numerator() == -1);
  CHECK(n.denominator() == 2);
  CHECK(Rational(BigInt(0), BigInt(7)).is_zero());
}

TEST_CASE("parse and str round-trip") {
  CHECK(Rational::parse("-3/4").str() == "-3/4");
  CHECK(Rational::parse("2").str() == "2");
  CHECK(Rational::parse("4/2").str() == "2");
  CHECK(Rational::parse("0").str() == "0");
  CHECK_THROWS_AS(Rational::parse("1/0"), InputError);
  CHECK_THROWS_AS(Rational::parse("3/-4"), InputError);
  CHECK_THROWS_AS(Rational::parse("a"), InputError);
  CHECK_THROWS_AS(Rational::parse(""), InputError);
  CHECK_THROWS_AS(Rational::parse("1.5"), InputError);
  CHECK_THROWS_AS(Rational(BigInt(1), BigInt(0)), InputError);
}

TEST_CASE("ordering and arithmetic are exact") {
  Rational third(BigInt(1), BigInt(3));
  Rational half(BigInt(1), BigInt(2));
  CHECK(third < half);
  CHECK((half - third).str() == "1/6");
  CHECK((third * half).str() == "1/6");
  CHECK((half / third).str() == "3/2");
  CHECK(dist(third, half).str() == "1/6");
  CHECK_THROWS_AS(half / Rational(0), InputError);
}

TEST_CASE("floor, ceil, powers of two") {
  CHECK(floor_of(Rational(BigInt(7), BigInt(2))) == 3);
  CHECK(ceil_of(Rational(BigInt(7), BigInt(2))) == 4);
  CHECK(floor_of(Rational(BigInt(-7), BigInt(2))) == -4);
  CHECK(ceil_of(Rational(BigInt(-7), BigInt(2))) == -3);
  CHECK(floor_of(Rational(5)) == 5);
  CHECK(pow2(5).str() == "32");
  CHECK(pow2(-3).str() == "1/8");
  CHECK(log2_exact(pow2(-17)) == -17);
  CHECK(log2_exact(Rational(1)) == 0);
  CHECK(!log2_exact(Rational(BigInt(3), BigInt(4))));
  CHECK(!log2_exact(Rational(-4)));
  CHECK(!log2_exact(Rational(0)));
}
