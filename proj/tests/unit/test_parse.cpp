#include <doctest.h>

#include "deo/errors.hpp"
#include "deo/parse.hpp"

using namespace deo;

TEST_CASE("grammar coverage") {
  CHECK(parse_expr("exp(t)+exp(2*t)") == parse_expr("exp(t) + exp(2t)"));
  CHECK(parse_expr("-exp(-t)") == -ExpPoly::exp(-1));
  CHECK(parse_expr("t^3") == ExpPoly::term(1, 3, 0));
  CHECK(parse_expr("2*(t + 1)*exp(t)") == parse_expr("2*t*exp(t) + 2*exp(t)"));
  CHECK(parse_expr("cos(1/2*t)") == ExpPoly::cos(Rational(1, 2)));
  CHECK(parse_expr("sin(t)") == ExpPoly::sin(1));
  CHECK(parse_expr("3/4") == ExpPoly::constant(ExactScalar::ratio(3, 4)));
  CHECK(parse_expr("0").is_zero());
  CHECK(parse_expr("010*exp(t)") == parse_expr("10*exp(t)"));
}

TEST_CASE("errors carry an offset and the expected set") {
  try {
    parse_expr("exp(t) +* 2");
    FAIL("no throw");
  } catch (const ParseError& e) {
    CHECK(e.position() == 8);
    CHECK_FALSE(e.expected().empty());
  }
  CHECK_THROWS_AS(parse_expr(""), ParseError);
  CHECK_THROWS_AS(parse_expr("exp(t"), ParseError);
  CHECK_THROWS_AS(parse_expr("log(t)"), ParseError);
  CHECK_THROWS_AS(parse_expr("exp(t) exp(t)"), ParseError);
  CHECK_THROWS_AS(parse_expr("t^-1"), ParseError);
}
