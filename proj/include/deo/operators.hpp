#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "deo/exppoly.hpp"

namespace deo {

enum class Family { PsiPlus, PsiMinus, GammaPlus, ThetaPlus, ThetaMinus, Eta };

/// One differential energy operator family, indexed by its integer order k.
///
/// Theta families carry their power parameter p >= 2. `negated` selects -S_k,
/// which only the kernel negation-invariance checks use.
struct OperatorFamily {
  Family tag = Family::PsiPlus;
  int p = 0;
  bool negated = false;

  static OperatorFamily psi_plus() { return {Family::PsiPlus}; }
  static OperatorFamily psi_minus() { return {Family::PsiMinus}; }
  static OperatorFamily gamma_plus() { return {Family::GammaPlus}; }
  static OperatorFamily theta_plus(int p);
  static OperatorFamily theta_minus(int p);
  static OperatorFamily eta() { return {Family::Eta}; }

  OperatorFamily negate() const {
    OperatorFamily out = *this;
    out.negated = !negated;
    return out;
  }

  // "psi+", "psi-", "gamma+", "theta+:p", "theta-:p", "eta"; a leading '-' marks negation.
  std::string name() const;
  static OperatorFamily parse(std::string_view name);

  friend bool operator==(const OperatorFamily&, const OperatorFamily&) = default;
};

// {Psi+, Psi-, Gamma+, theta+-(p) for each p, eta}
std::vector<OperatorFamily> all_families(const std::vector<int>& theta_powers = {2, 4, 7});

/// Applies S_k to the operand f^{(operand_order)}.
///
/// Signed derivatives of the operand are taken at net order on f, so
/// Psi_0(d_t f) reads (d_t f)^{(-1)} as f. A negative operator order k needs
/// iterated integrals from -infinity and therefore an antiderivable f; any
/// negative net order does as well. Both raise NonIntegrableAtom otherwise.
ExpPoly apply(const OperatorFamily& family, int k, const ExpPoly& f, int operand_order = 0);

// Teager-Kaiser cross form (1/2)[f'g' + g'f'] - (1/2)[f g'' + f'' g]; P_-(f, f) = Psi-_2(f).
ExpPoly p_minus_bilinear(const ExpPoly& f, const ExpPoly& g);

// d_t S_k(f) - S_{k+1}(f) - S_{k-1}(d_t f); zero for every admissible family.
ExpPoly chain_rule_residual(const OperatorFamily& family, int k, const ExpPoly& f);

namespace testing {

enum class Mutation { None, FlipPsiMinusSelfTerm };

Mutation active_mutation();

// Installs a deliberate defect in Psi- for the lifetime of the guard. Only the
// acceptance canary and `verify-suite --mutant` use this.
class ScopedMutation {
 public:
  explicit ScopedMutation(Mutation m);
  ~ScopedMutation();
  ScopedMutation(const ScopedMutation&) = delete;
  ScopedMutation& operator=(const ScopedMutation&) = delete;

 private:
  Mutation previous_;
};

}  // namespace testing

}  // namespace deo
