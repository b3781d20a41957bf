#include <doctest.h>

#include "deo/errors.hpp"
#include "deo/operators.hpp"
#include "deo/parse.hpp"

using namespace deo;

namespace {
ExpPoly P(const char* s) { return parse_expr(s); }
const OperatorFamily kPlus = OperatorFamily::psi_plus();
const OperatorFamily kMinus = OperatorFamily::psi_minus();
}  // namespace

TEST_CASE("psi minus on e^t + e^{2t} is (1 - 2^{k-1}) e^{3t}") {
  ExpPoly f = P("exp(t) + exp(2*t)");
  CHECK(apply(kMinus, 0, f) == P("1/2*exp(3*t)"));
  CHECK(apply(kMinus, 2, f) == P("-exp(3*t)"));
  CHECK(apply(kMinus, 3, f) == P("-3*exp(3*t)"));
  CHECK(apply(kMinus, 1, f).is_zero());
}

TEST_CASE("psi plus values") {
  CHECK(apply(kPlus, 1, P("exp(t) + exp(2*t)")) == P("2*exp(2*t) + 6*exp(3*t) + 4*exp(4*t)"));
  CHECK(apply(kPlus, -1, P("exp(t)")) == P("2*exp(2*t)"));
  CHECK(apply(kPlus, 1, P("0")).is_zero());
  CHECK(apply(kPlus, 1, P("exp(t)")) == derivative(P("exp(2*t)")));
}

TEST_CASE("single atoms are annihilated by psi minus at every order") {
  for (int k = -4; k <= 5; ++k) CHECK(apply(kMinus, k, P("exp(3*t)")).is_zero());
}

TEST_CASE("derived families") {
  ExpPoly f = P("t*exp(2*t) + exp(t)");
  CHECK(apply(OperatorFamily::gamma_plus(), 2, f) == ExactScalar::ratio(3, 2) * apply(kPlus, 2, f));
  CHECK(apply(OperatorFamily::theta_plus(5), 3, f) == ExactScalar(2) * apply(kPlus, 3, f));
  CHECK(apply(OperatorFamily::theta_minus(4), 0, f) == ExactScalar::ratio(3, 2) * apply(kMinus, 0, f));
  CHECK(apply(OperatorFamily::eta(), 2, f) == apply(kPlus, 2, f) + ExactScalar(2) * apply(kMinus, 2, f));
  CHECK(apply(kPlus.negate(), 2, f) == -apply(kPlus, 2, f));
  CHECK_THROWS_AS(OperatorFamily::theta_plus(1), InvalidOrder);
}

TEST_CASE("operand derivatives are taken at net order") {
  ExpPoly f = P("exp(t) + exp(2*t)");
  CHECK(apply(kPlus, 0, f, 1) == apply(kPlus, 0, derivative(f)));
  CHECK(apply(kPlus, -1, f, 2) == apply(kPlus, -1, derivative(f, 2)));
  // cos(t) at net order 0 only
  ExpPoly c = P("cos(t)");
  CHECK(apply(kPlus, 0, c, 1) == derivative(c, 2) * c + derivative(c) * derivative(c));
  CHECK_THROWS_AS(apply(kPlus, 0, c), NonIntegrableAtom);
  CHECK_THROWS_AS(apply(kPlus, -1, c, 3), NonIntegrableAtom);
}

TEST_CASE("Teager-Kaiser bilinear form") {
  ExpPoly f = P("exp(t) + exp(2*t)");
  CHECK(p_minus_bilinear(f, f) == apply(kMinus, 2, f));
  CHECK(p_minus_bilinear(P("exp(t)"), P("exp(t)")).is_zero());
  ExpPoly g = P("t*exp(3*t)");
  CHECK(p_minus_bilinear(f, g) == p_minus_bilinear(g, f));
}

TEST_CASE("chain rule holds for every family") {
  ExpPoly f = P("2*exp(t) + t^2*exp(3*t)");
  for (const auto& fam : all_families())
    for (int k = -3; k <= 4; ++k) CHECK(chain_rule_residual(fam, k, f).is_zero());
  for (int k = 1; k <= 4; ++k) CHECK(chain_rule_residual(kMinus, k, P("cos(t)")).is_zero());
}

TEST_CASE("family names round trip") {
  for (const auto& fam : all_families({2, 4, 7})) {
    CHECK(OperatorFamily::parse(fam.name()) == fam);
    CHECK(OperatorFamily::parse(fam.negate().name()) == fam.negate());
  }
  CHECK_THROWS_AS(OperatorFamily::parse("psi*"), InvalidInput);
  CHECK_THROWS_AS(OperatorFamily::parse("theta+:x"), InvalidInput);
  CHECK(all_families().size() == 10);
}

TEST_CASE("the mutation guard is scoped") {
  ExpPoly f = P("exp(3*t)");
  {
    testing::ScopedMutation m(testing::Mutation::FlipPsiMinusSelfTerm);
    CHECK_FALSE(apply(kMinus, 2, f).is_zero());
  }
  CHECK(apply(kMinus, 2, f).is_zero());
  CHECK(testing::active_mutation() == testing::Mutation::None);
}
