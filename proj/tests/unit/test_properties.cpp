#include <doctest.h>

#include "deo/decomposition.hpp"
#include "deo/errors.hpp"
#include "deo/parse.hpp"
#include "deo/properties.hpp"

using namespace deo;

namespace {
ExpPoly P(const char* s) { return parse_expr(s); }
const char* kTrigFree[] = {"exp(t) + exp(2*t)", "t*exp(2*t)", "2*exp(t) + t^2*exp(3*t)", "exp(3*t)", "0"};
}  // namespace

TEST_CASE("mirror identities") {
  ExpPoly f = P("exp(t) + exp(2*t)");
  CHECK(prop1_residuals(3, f).is_zero());
  Prop1Residuals one = prop1_residuals(1, P("t*exp(2*t)"));
  CHECK(one.is_zero());
  CHECK((apply(OperatorFamily::psi_plus(), 2, f) - apply(OperatorFamily::psi_plus(), 0, derivative(f))).is_zero());
  for (const char* s : kTrigFree)
    for (int k = -3; k <= 5; ++k) CHECK(prop1_residuals(k, P(s)).is_zero());
  CHECK_THROWS_AS(prop1_residuals(0, P("cos(t)")), NonIntegrableAtom);
}

TEST_CASE("sum and difference witnesses") {
  CHECK(image_sum_difference_identities(0, P("t*exp(2*t)")).is_zero());
  CHECK(image_sum_difference_identities(1, P("exp(t) + exp(2*t)")).is_zero());
  CHECK(image_sum_difference_identities(4, P("0")).is_zero());
  CHECK(image_sum_difference_identities(2, P("cos(t)")).is_zero());
}

TEST_CASE("kernels") {
  for (int k = -2; k <= 4; ++k) CHECK(kernel_member(OperatorFamily::psi_minus(), k, P("exp(3*t)")));
  CHECK(kernel_member(OperatorFamily::psi_plus(), 1, P("0")));
  CHECK_FALSE(kernel_member(OperatorFamily::psi_plus(), 1, P("exp(t) + exp(2*t)")));
  for (const auto& fam : all_families())
    for (int k = -2; k <= 3; ++k) CHECK(kernel_negation_invariant(fam, k, P("t*exp(2*t)")));
}

TEST_CASE("membership window") {
  MembershipReport r = s_minus_membership(P("exp(t) + exp(2*t)"), 4);
  CHECK(r.verdict);
  CHECK(r.k_lo == -4);
  CHECK(r.k_hi == 4);
  CHECK(r.psi_plus_nonzero.size() == 9);
  CHECK(r.psi_minus_nonzero.size() == 8);
  CHECK(r.psi_minus_nonzero.count(1) == 0);
  CHECK_FALSE(s_minus_membership(P("exp(2*t)"), 2).verdict);
  CHECK_FALSE(s_minus_membership(P("0"), 1).verdict);
  CHECK_THROWS_AS(s_minus_membership(P("cos(t)"), 2), NonIntegrableAtom);
}

TEST_CASE("folded a_p^+") {
  ExpPoly f = P("exp(t) + exp(2*t)");
  CHECK(simplified_a_plus(2, f) == ExactScalar(2) * apply(OperatorFamily::psi_plus(), 2, f));
  CHECK(simplified_a_plus(2, f) ==
        apply(OperatorFamily::psi_plus(), 2, f) + apply(OperatorFamily::psi_plus(), 0, derivative(f)));
  CHECK(simplified_a_plus(3, f) == ExactScalar(2) * apply(OperatorFamily::psi_plus(), 3, f) +
                                       ExactScalar(2) * apply(OperatorFamily::psi_plus(), 1, derivative(f)));
  CHECK(simplified_a_plus(5, P("t*exp(2*t)")) == a_plus(5, P("t*exp(2*t)")).binomial_sum);
  for (const char* s : kTrigFree)
    for (int p = 1; p <= 6; ++p) CHECK(simplified_a_plus(p, P(s)) == derivative(pow(P(s), 2), p));
  // the folded form only needs nonnegative orders
  CHECK(simplified_a_plus(6, P("cos(t)")) == derivative(pow(P("cos(t)"), 2), 6));
}

TEST_CASE("coefficient recovery and uniqueness") {
  ExpPoly f = P("exp(t) + exp(2*t)");
  CHECK(uniqueness_residual({1, 2}, reference_coefficients(OperatorFamily::eta()), 2, f).certified());
  CHECK(uniqueness_residual({ExactScalar::ratio(3, 2), 0}, reference_coefficients(OperatorFamily::gamma_plus()), 3, f)
            .certified());
  CHECK_FALSE(uniqueness_residual({1, 1}, {1, 2}, 2, f).certified());
  CHECK(family_decomposition_residual(OperatorFamily::theta_plus(5), {2, 0}, 3, f).is_zero());
  CHECK(family_decomposition_residual(OperatorFamily::theta_minus(5), {0, 2}, 3, f).is_zero());
  for (int k : {0, 2, 3})
    for (const auto& fam : all_families({2, 4, 5, 7})) {
      auto c = solve_coefficients(fam, k, f);
      REQUIRE(c.has_value());
      CHECK(*c == reference_coefficients(fam));
    }
  // single atoms have dependent images: no certificate
  CHECK_FALSE(independence_witness(2, P("exp(3*t)")).has_value());
  CHECK_FALSE(solve_coefficients(OperatorFamily::eta(), 2, P("exp(3*t)")).has_value());
}
