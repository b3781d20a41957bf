#include <doctest.h>

#include "deo/exact_scalar.hpp"

using deo::ExactScalar;
using deo::Rational;

TEST_CASE("rationals canonicalize") {
  CHECK(deo::make_rational(6, -4) == Rational(-3, 2));
  CHECK(deo::to_string(deo::make_rational(6, -4)) == "-3/2");
  CHECK(deo::to_string(Rational(4)) == "4");
}

TEST_CASE("parse_rational accepts integers, fractions and decimals") {
  CHECK(deo::parse_rational("7") == 7);
  CHECK(deo::parse_rational("-3/12") == Rational(-1, 4));
  CHECK(deo::parse_rational("-0.125") == Rational(-1, 8));
  CHECK(deo::parse_rational("2.5") == Rational(5, 2));
  CHECK(deo::parse_rational("010") == 10);
  CHECK(deo::parse_rational("0.09") == Rational(9, 100));
  CHECK(deo::parse_rational("08/09") == Rational(8, 9));
  CHECK_THROWS(deo::parse_rational("1/0"));
  CHECK_THROWS(deo::parse_rational("abc"));
  CHECK_THROWS(deo::parse_rational(""));
}

TEST_CASE("complex arithmetic is exact") {
  ExactScalar a(Rational(1, 2), Rational(1, 3));
  ExactScalar b = ExactScalar::i();
  CHECK(b * b == ExactScalar(-1));
  CHECK((a * a.conj()).is_real());
  CHECK((a * a.conj()).re() == a.norm());
  CHECK(a / a == ExactScalar(1));
  CHECK((a - a).is_zero());
  CHECK(deo::pow(ExactScalar(2), 10) == ExactScalar(1024));
  CHECK(deo::pow(b, 4) == ExactScalar(1));
  CHECK_THROWS_AS(a / ExactScalar(0), std::domain_error);
}

TEST_CASE("string forms") {
  CHECK(ExactScalar::ratio(3, 2).str() == "3/2");
  CHECK(ExactScalar::i().str() == "i");
  CHECK(ExactScalar(1, 2).str() == "1+2*i");
  CHECK(ExactScalar(0, Rational(-1, 2)).str() == "-1/2*i");
  CHECK(ExactScalar().str() == "0");
}

TEST_CASE("long double conversion keeps more than double precision") {
  Rational third(1, 3);
  long double x = deo::to_long_double(third);
  CHECK(static_cast<double>(std::fabs(x * 3 - 1.0L)) < 1e-18);
  CHECK(ExactScalar::ratio(1, 4).to_complex() == std::complex<double>(0.25, 0));
}

TEST_CASE("ordering used by containers is strict") {
  deo::ScalarLess less;
  ExactScalar a(1), b(1, 1), c(2);
  CHECK(less(a, b));
  CHECK(less(b, c));
  CHECK_FALSE(less(a, a));
}
