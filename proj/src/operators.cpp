#include "deo/operators.hpp"

#include <atomic>

#include "deo/errors.hpp"

namespace deo {

namespace {

std::atomic<testing::Mutation> g_mutation{testing::Mutation::None};

void require_theta_power(int p) {
  if (p < 2) throw InvalidOrder("theta families need p >= 2, got " + std::to_string(p));
}

}  // namespace

OperatorFamily OperatorFamily::theta_plus(int p) {
  require_theta_power(p);
  return {Family::ThetaPlus, p};
}

OperatorFamily OperatorFamily::theta_minus(int p) {
  require_theta_power(p);
  return {Family::ThetaMinus, p};
}

std::string OperatorFamily::name() const {
  std::string base;
  switch (tag) {
    case Family::PsiPlus: base = "psi+"; break;
    case Family::PsiMinus: base = "psi-"; break;
    case Family::GammaPlus: base = "gamma+"; break;
    case Family::ThetaPlus: base = "theta+:" + std::to_string(p); break;
    case Family::ThetaMinus: base = "theta-:" + std::to_string(p); break;
    case Family::Eta: base = "eta"; break;
  }
  return negated ? "-" + base : base;
}

OperatorFamily OperatorFamily::parse(std::string_view name) {
  bool neg = false;
  std::string_view s = name;
  if (!s.empty() && s.front() == '-') {
    neg = true;
    s.remove_prefix(1);
  }
  OperatorFamily out;
  if (s == "psi+") {
    out = psi_plus();
  } else if (s == "psi-") {
    out = psi_minus();
  } else if (s == "gamma+") {
    out = gamma_plus();
  } else if (s == "eta") {
    out = eta();
  } else if (s.starts_with("theta+:") || s.starts_with("theta-:")) {
    std::string digits(s.substr(7));
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
      throw InvalidInput("bad theta power in '" + std::string(name) + "'");
    int p = std::stoi(digits);
    out = s[5] == '+' ? theta_plus(p) : theta_minus(p);
  } else {
    throw InvalidInput("unknown operator family '" + std::string(name) +
                       "' (expected psi+, psi-, gamma+, theta+:p, theta-:p, eta)");
  }
  out.negated = neg;
  return out;
}

std::vector<OperatorFamily> all_families(const std::vector<int>& theta_powers) {
  std::vector<OperatorFamily> out{OperatorFamily::psi_plus(), OperatorFamily::psi_minus(),
                                  OperatorFamily::gamma_plus()};
  for (int p : theta_powers) {
    out.push_back(OperatorFamily::theta_plus(p));
    out.push_back(OperatorFamily::theta_minus(p));
  }
  out.push_back(OperatorFamily::eta());
  return out;
}

ExpPoly apply(const OperatorFamily& family, int k, const ExpPoly& f, int operand_order) {
  if (k < 0 && !f.antiderivable())
    throw NonIntegrableAtom("operator order " + std::to_string(k) +
                            " needs integrals from -infinity, which diverge for " + to_string(f));

  // f-derivatives at net order; operand_order + 1 is the derivative of the operand.
  ExpPoly d1 = signed_derivative(f, operand_order + 1);
  ExpPoly g0 = operand_order == 0 ? f : signed_derivative(f, operand_order);
  ExpPoly gkm1 = signed_derivative(f, operand_order + k - 1);
  ExpPoly gk = signed_derivative(f, operand_order + k);

  ExpPoly cross = d1 * gkm1;  // dot g * g^{(k-1)}
  ExpPoly self = g0 * gk;     // g * g^{(k)}

  auto psi_minus = [&] {
    if (testing::active_mutation() == testing::Mutation::FlipPsiMinusSelfTerm) return cross + self;
    return cross - self;
  };

  ExpPoly out;
  switch (family.tag) {
    case Family::PsiPlus: out = cross + self; break;
    case Family::PsiMinus: out = psi_minus(); break;
    case Family::GammaPlus: out = ExactScalar::ratio(3, 2) * (cross + self); break;
    case Family::ThetaPlus:
      require_theta_power(family.p);
      out = ExactScalar::ratio(family.p - 1, 2) * (cross + self);
      break;
    case Family::ThetaMinus:
      require_theta_power(family.p);
      out = ExactScalar::ratio(family.p - 1, 2) * psi_minus();
      break;
    case Family::Eta: out = ExactScalar(3) * cross - self; break;
  }
  return family.negated ? -out : out;
}

ExpPoly p_minus_bilinear(const ExpPoly& f, const ExpPoly& g) {
  ExpPoly df = derivative(f), dg = derivative(g);
  ExactScalar half = ExactScalar::ratio(1, 2);
  return half * (df * dg + dg * df) - half * (f * derivative(dg) + derivative(df) * g);
}

ExpPoly chain_rule_residual(const OperatorFamily& family, int k, const ExpPoly& f) {
  return derivative(apply(family, k, f)) - apply(family, k + 1, f) - apply(family, k - 1, f, 1);
}

namespace testing {

Mutation active_mutation() { return g_mutation.load(std::memory_order_relaxed); }

ScopedMutation::ScopedMutation(Mutation m) : previous_(g_mutation.exchange(m)) {}

ScopedMutation::~ScopedMutation() { g_mutation.store(previous_); }

}  // namespace testing

}  // namespace deo
