#include <doctest.h>

#include <random>

#include "deo/decomposition.hpp"
#include "deo/errors.hpp"
#include "deo/parse.hpp"

using namespace deo;

namespace {
ExpPoly P(const char* s) { return parse_expr(s); }

// Random exp-polys with positive rates, so every order is defined.
ExpPoly random_poly(std::mt19937& rng) {
  std::uniform_int_distribution<int> n_atoms(1, 3), coeff(-4, 4), deg(0, 2), rate(1, 3), den(1, 3);
  ExpPoly f;
  int n = n_atoms(rng);
  for (int i = 0; i < n; ++i) {
    int c = coeff(rng);
    if (c == 0) c = 1;
    f += ExpPoly::term(ExactScalar::ratio(c, den(rng)), deg(rng), ExactScalar::ratio(rate(rng), den(rng)));
  }
  return f;
}
}  // namespace

TEST_CASE("binomial") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(6, 0) == 1);
  CHECK(binomial(3, 4) == 0);
  CHECK(binomial(30, 15) == 155117520);
}

TEST_CASE("square plan rows") {
  auto plan = decompose_square(4);
  REQUIRE(plan.terms.size() == 4);
  int binoms[] = {1, 3, 3, 1}, orders[] = {4, 2, 0, -2};
  for (int i = 0; i < 4; ++i) {
    CHECK(plan.terms[i].binom == binoms[i]);
    CHECK(plan.terms[i].order == orders[i]);
    CHECK(plan.terms[i].operand_deriv == i);
    CHECK(plan.terms[i].family == OperatorFamily::psi_plus());
  }
  CHECK(decompose_square(3, Variant::PlusMinus).terms.size() == 6);
  CHECK_THROWS_AS(decompose_square(0), InvalidOrder);
  CHECK_THROWS_AS(decompose_power(2, 1, Variant::PlusOnly), InvalidOrder);
}

TEST_CASE("cube plan uses Gamma plus with a first-power cofactor") {
  auto plan = decompose_cube(3);
  CHECK(plan.terms.size() == 6);
  for (const auto& t : plan.terms) {
    CHECK(t.family == OperatorFamily::gamma_plus());
    CHECK(t.cofactor_power == 1);
  }
  CHECK(verify(plan, P("t*exp(2*t)")).is_zero());
}

TEST_CASE("general powers nest sub-plans") {
  auto plan = decompose_power(3, 5, Variant::PlusOnly);
  bool nested = false;
  for (const auto& t : plan.terms) {
    CHECK(t.prefactor == Rational(5, 4));
    if (t.subplan) {
      nested = true;
      CHECK(t.subplan->n == 3);
      CHECK(t.subplan->v == t.cofactor_deriv);
    }
  }
  CHECK(nested);
}

TEST_CASE("plans reproduce d^v f^n exactly") {
  for (const char* s : {"exp(t) + exp(2*t)", "t*exp(2*t)", "2*exp(t) + t^2*exp(3*t)", "exp(3*t)", "0"}) {
    ExpPoly f = P(s);
    for (int n = 2; n <= 4; ++n)
      for (int v = 1; v <= 4; ++v) {
        CHECK(verify(decompose_power(v, n, Variant::PlusOnly), f).is_zero());
        CHECK(verify(decompose_power(v, n, Variant::PlusMinus), f).is_zero());
      }
  }
}

TEST_CASE("trigonometric inputs are limited by negative orders") {
  ExpPoly c = P("cos(t)");
  CHECK(verify(decompose_square(2), c).is_zero());
  CHECK(verify(decompose_power(2, 4, Variant::PlusMinus), c).is_zero());
  CHECK_THROWS_AS(verify(decompose_square(5), c), NonIntegrableAtom);
}

TEST_CASE("random exp-polys satisfy the plan and coefficient identities") {
  std::mt19937 rng(20261016);
  for (int trial = 0; trial < 12; ++trial) {
    ExpPoly f = random_poly(rng);
    CAPTURE(to_string(f));
    int v = 1 + trial % 4, n = 2 + trial % 3;
    CHECK(verify(decompose_power(v, n, Variant::PlusMinus), f).is_zero());
    CHECK(a_plus(v, f).agree());
    CHECK(a_minus(v, f).agree());
    CHECK(chain_rule_residual(OperatorFamily::eta(), v - 2, f).is_zero());
  }
}

TEST_CASE("substitution replaces the family everywhere") {
  auto plan = substitute_family(decompose_power(3, 4, Variant::PlusOnly), OperatorFamily::theta_plus(4),
                                OperatorFamily::theta_plus(4).negate());
  ExpPoly f = P("exp(t) + exp(2*t)");
  CHECK(materialize(plan, f) == -derivative(pow(f, 4), 3));
  auto eta = substitute_family(decompose_square(3), OperatorFamily::psi_plus(), OperatorFamily::eta());
  CHECK(verify(eta, f).is_zero());
}

TEST_CASE("capital A and B") {
  ExpPoly f = P("exp(2*t)");
  CHECK(cap_B(1, true, 4, f) == P("6*exp(4*t)"));
  CHECK(cap_A(2, f) == ExactScalar::ratio(3, 2) * derivative(apply(OperatorFamily::psi_plus(), 1, f)));
  CHECK_THROWS_AS(cap_A(0, f), InvalidOrder);
}

TEST_CASE("negative powers and unity") {
  for (const char* s : {"exp(3*t)", "-2*exp(t)", "exp(-t)"}) {
    ExpPoly f = P(s);
    for (int n = 2; n <= 3; ++n)
      for (int v = 1; v <= 2; ++v) CHECK(decompose_negative(v, n, f).is_zero());
    CHECK(decompose_unity(1, f).is_zero());
    CHECK(decompose_unity(2, f).is_zero());
  }
  // f^{-2} d f^3 = 9 e^{3t} and f^3 d f^{-2} = -6 e^{3t} for f = e^{3t}
  ExpPoly f = P("exp(3*t)"), h = recip_single_atom(f);
  CHECK(pow(h, 2) * materialize(decompose_power(1, 3, Variant::PlusOnly), f) == P("9*exp(3*t)"));
  CHECK(pow(f, 3) * materialize(decompose_square(1), h) == P("-6*exp(3*t)"));
  CHECK_THROWS_AS(decompose_unity(3, f), UnsupportedOrder);
  CHECK_THROWS_AS(decompose_unity(0, f), InvalidOrder);
  CHECK_THROWS_AS(decompose_unity(1, P("exp(t) + exp(2*t)")), NotReciprocable);
  CHECK_THROWS_AS(decompose_negative(1, 2, P("exp(t) + exp(2*t)")), NotReciprocable);
}

TEST_CASE("Taylor coefficients of f") {
  auto c = taylor_coefficient_decomposition(P("exp(2*t)"), Rational(0), 3);
  REQUIRE(c.size() == 4);
  CHECK(c[0].value.as_scalar() == ExactScalar(1));
  CHECK(c[1].value.as_scalar() == ExactScalar(2));
  CHECK(c[2].value.as_scalar() == ExactScalar(2));
  CHECK(c[3].value.as_scalar() == ExactScalar::ratio(4, 3));
  CHECK(c[1].path == CoefficientPath::UnityReduction);
  CHECK(c[3].path == CoefficientPath::Direct);
  for (const auto& x : c) CHECK(x.checked);

  auto k = taylor_coefficient_decomposition(P("cos(t)"), Rational(0), 4);
  CHECK(k[0].value.as_scalar() == ExactScalar(1));
  CHECK(k[1].value.is_zero());
  CHECK(k[2].value.as_scalar() == ExactScalar::ratio(-1, 2));
  CHECK(k[3].value.is_zero());
  CHECK(k[4].value.as_scalar() == ExactScalar::ratio(1, 24));
  CHECK_THROWS_AS(taylor_coefficient_decomposition(ExpPoly::exp(ExactScalar::i()), Rational(0), 2), InvalidInput);
}
