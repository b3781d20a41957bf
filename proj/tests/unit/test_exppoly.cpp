#include <doctest.h>

#include <cmath>

#include "deo/errors.hpp"
#include "deo/exppoly.hpp"
#include "deo/parse.hpp"

using namespace deo;

namespace {
ExpPoly P(const char* s) { return parse_expr(s); }
}  // namespace

TEST_CASE("zero is the empty sum and atoms are unique") {
  ExpPoly f = P("exp(t) - exp(t)");
  CHECK(f.is_zero());
  CHECK(P("exp(t) + exp(t)") == P("2*exp(t)"));
  CHECK(P("0").size() == 0);
  CHECK_THROWS_AS(ExpPoly::term(1, -1, 1), InvalidOrder);
}

TEST_CASE("squares expand") {
  // (e^t + e^{2t})^2 = e^{2t} + 2e^{3t} + e^{4t}
  CHECK(pow(P("exp(t) + exp(2*t)"), 2) == P("exp(2*t) + 2*exp(3*t) + exp(4*t)"));
  CHECK(pow(P("exp(t)"), 0) == ExpPoly::constant(1));
}

TEST_CASE("derivatives") {
  CHECK(derivative(P("t*exp(2*t)")) == P("exp(2*t) + 2*t*exp(2*t)"));
  CHECK(derivative(P("t^2")) == P("2*t"));
  CHECK(derivative(P("exp(t)"), 3) == P("exp(t)"));
  CHECK(derivative(P("cos(t)"), 2) == -P("cos(t)"));
  CHECK(derivative(P("sin(t)")) == P("cos(t)"));
}

TEST_CASE("antiderivative from minus infinity") {
  CHECK(antiderivative(P("t*exp(t)")) == P("t*exp(t) - exp(t)"));
  CHECK(derivative(antiderivative(P("2*exp(t) + t^2*exp(3*t)"))) == P("2*exp(t) + t^2*exp(3*t)"));
  CHECK(signed_derivative(P("exp(2*t)"), -2) == P("1/4*exp(2*t)"));
  CHECK(signed_derivative(P("exp(2*t)"), 0) == P("exp(2*t)"));
  CHECK_THROWS_AS(antiderivative(P("cos(t)")), NonIntegrableAtom);
  CHECK_THROWS_AS(antiderivative(P("exp(-t)")), NonIntegrableAtom);
  CHECK_THROWS_AS(antiderivative(P("1")), NonIntegrableAtom);
}

TEST_CASE("primitive handles constant atoms") {
  CHECK(derivative(primitive(P("3 + t + cos(t)"))) == P("3 + t + cos(t)"));
}

TEST_CASE("reciprocal of single atoms") {
  CHECK(recip_single_atom(P("2*exp(3*t)")) == P("1/2*exp(-3*t)"));
  CHECK_THROWS_AS(recip_single_atom(P("exp(t) + exp(2*t)")), NotReciprocable);
  CHECK_THROWS_AS(recip_single_atom(P("t*exp(t)")), NotReciprocable);
  CHECK_THROWS_AS(recip_single_atom(P("0")), NotReciprocable);
}

TEST_CASE("real and antiderivable classification") {
  CHECK(P("cos(2*t)").is_real());
  CHECK_FALSE(P("cos(t)").antiderivable());
  CHECK(P("exp(t) + t*exp(3*t)").antiderivable());
  CHECK(P("exp(3*t)").is_single_exponential());
  CHECK_FALSE(P("t*exp(3*t)").is_single_exponential());
}

TEST_CASE("evaluation") {
  CHECK(eval(P("exp(t) + exp(2*t)"), 1.0).value == doctest::Approx(10.1073379273897).epsilon(1e-13));
  CHECK(eval(P("cos(t)"), 0.3).value == doctest::Approx(std::cos(0.3)).epsilon(1e-15));
  CHECK(std::fabs(eval(P("sin(t)"), 0.7).imag_residue) < 1e-15);
  ClosedFormValue v = eval_exact(P("3*t^2*exp(t)"), Rational(0));
  CHECK(v.is_zero());
  CHECK(eval_exact(P("3 + t"), Rational(1, 2)).as_scalar() == ExactScalar::ratio(7, 2));
}

TEST_CASE("definite integrals") {
  // (e^2 - 1)/2
  ClosedFormValue e = definite_integral(P("exp(2*t)"), Rational(0), Rational(1));
  CHECK(e.value() == doctest::Approx((std::exp(2.0) - 1) / 2).epsilon(1e-14));
  // tau/2 + sin(2 tau)/4 at tau = 1
  ClosedFormValue c = definite_integral(pow(P("cos(t)"), 2), Rational(0), Rational(1));
  CHECK(c.value() == doctest::Approx(0.727324356706420).epsilon(1e-14));
  CHECK(definite_integral(P("exp(t)"), Rational(2), Rational(2)).is_zero());
}

TEST_CASE("to_string round trips through the parser") {
  for (const char* s : {"exp(t) + exp(2*t)", "3/2*t^2*exp(t)", "-t*exp(-2*t) + 5", "2*exp(t) + t^2*exp(3*t)"}) {
    ExpPoly f = P(s);
    CHECK(parse_expr(to_string(f)) == f);
  }
}
