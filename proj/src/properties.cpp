#include "deo/properties.hpp"

#include "deo/decomposition.hpp"
#include "deo/errors.hpp"

namespace deo {

namespace {

const OperatorFamily kPlus = OperatorFamily::psi_plus();
const OperatorFamily kMinus = OperatorFamily::psi_minus();

ExactScalar coeff_of(const ExpPoly& f, const Atom& a) {
  auto it = f.terms().find(a);
  return it == f.terms().end() ? ExactScalar() : it->second;
}

}  // namespace

Prop1Residuals prop1_residuals(int k, const ExpPoly& f) {
  const int mirror = 2 - k;
  const int shift = k - 1;
  ExpPoly pk = apply(kPlus, k, f), mk = apply(kMinus, k, f);
  ExpPoly pm = apply(kPlus, mirror, f, shift), mm = apply(kMinus, mirror, f, shift);
  return {pk - pm, mk + mm, (pk + mk) - (pm - mm)};
}

ImageResiduals image_sum_difference_identities(int k, const ExpPoly& f) {
  ExpPoly pk = apply(kPlus, k, f), mk = apply(kMinus, k, f);
  ExpPoly two_self = ExactScalar(2) * (f * signed_derivative(f, k));
  ExpPoly two_cross = ExactScalar(2) * (derivative(f) * signed_derivative(f, k - 1));
  return {pk - mk - two_self, pk + mk - two_cross};
}

bool kernel_member(const OperatorFamily& family, int k, const ExpPoly& f) {
  return apply(family, k, f).is_zero();
}

bool kernel_negation_invariant(const OperatorFamily& family, int k, const ExpPoly& f) {
  return kernel_member(family, k, f) == kernel_member(family.negate(), k, f);
}

MembershipReport s_minus_membership(const ExpPoly& f, int K) {
  if (K < 1) throw InvalidOrder("membership window K must be >= 1");
  MembershipReport r;
  r.k_lo = -K;
  r.k_hi = K;
  r.verdict = true;
  for (int k = -K; k <= K; ++k) {
    bool plus = !kernel_member(kPlus, k, f);
    r.psi_plus_nonzero[k] = plus;
    r.verdict = r.verdict && plus;
    if (k == 1) continue;
    bool minus = !kernel_member(kMinus, k, f);
    r.psi_minus_nonzero[k] = minus;
    r.verdict = r.verdict && minus;
  }
  return r;
}

ExpPoly simplified_a_plus(int p, const ExpPoly& f) {
  if (p < 1) throw InvalidOrder("a_p^+ needs p >= 1");
  if (p == 1) return apply(kPlus, 1, f);
  ExpPoly sum;
  const int s = p / 2;
  if (p % 2 == 0) {
    for (int k = s; k <= 2 * s - 1; ++k)
      sum += ExactScalar(binomial(2 * s - 1, k)) * apply(kPlus, 2 * (k + 1) - 2 * s, f, 2 * s - k - 1);
    return ExactScalar(2) * sum;
  }
  for (int k = s + 1; k <= 2 * s; ++k)
    sum += ExactScalar(binomial(2 * s, k)) * apply(kPlus, 2 * (k + 1) - 2 * s - 1, f, 2 * s - k);
  return ExactScalar(2) * sum + ExactScalar(binomial(2 * s, s)) * apply(kPlus, 1, f, s);
}

std::optional<IndependenceWitness> independence_witness(int k, const ExpPoly& f) {
  ExpPoly pk = apply(kPlus, k, f), mk = apply(kMinus, k, f);
  std::vector<Atom> atoms;
  for (const auto& [a, c] : pk.terms()) atoms.push_back(a);
  for (const auto& [a, c] : mk.terms())
    if (!pk.terms().count(a)) atoms.push_back(a);
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    for (std::size_t j = i + 1; j < atoms.size(); ++j) {
      ExactScalar minor = coeff_of(pk, atoms[i]) * coeff_of(mk, atoms[j]) -
                          coeff_of(pk, atoms[j]) * coeff_of(mk, atoms[i]);
      if (!minor.is_zero()) return IndependenceWitness{atoms[i], atoms[j], minor};
    }
  }
  return std::nullopt;
}

UniquenessResult uniqueness_residual(const CoefficientPair& beta, const CoefficientPair& alpha, int k,
                                     const ExpPoly& f) {
  UniquenessResult out;
  out.residual = (alpha.first - beta.first) * apply(kPlus, k, f) +
                 (alpha.second - beta.second) * apply(kMinus, k, f);
  out.witness = independence_witness(k, f);
  return out;
}

ExpPoly family_decomposition_residual(const OperatorFamily& family, const CoefficientPair& c, int k,
                                      const ExpPoly& f) {
  return apply(family, k, f) - c.first * apply(kPlus, k, f) - c.second * apply(kMinus, k, f);
}

std::optional<CoefficientPair> solve_coefficients(const OperatorFamily& family, int k, const ExpPoly& f) {
  auto w = independence_witness(k, f);
  if (!w) return std::nullopt;
  ExpPoly pk = apply(kPlus, k, f), mk = apply(kMinus, k, f), sk = apply(family, k, f);
  // Cramer on the witness rows: [p_i m_i; p_j m_j] (c1, c2) = (s_i, s_j).
  ExactScalar pi = coeff_of(pk, w->first), pj = coeff_of(pk, w->second);
  ExactScalar mi = coeff_of(mk, w->first), mj = coeff_of(mk, w->second);
  ExactScalar si = coeff_of(sk, w->first), sj = coeff_of(sk, w->second);
  CoefficientPair c{(si * mj - sj * mi) / w->minor, (pi * sj - pj * si) / w->minor};
  if (!family_decomposition_residual(family, c, k, f).is_zero()) return std::nullopt;
  return c;
}

CoefficientPair reference_coefficients(const OperatorFamily& family) {
  CoefficientPair c;
  switch (family.tag) {
    case Family::PsiPlus: c = {1, 0}; break;
    case Family::PsiMinus: c = {0, 1}; break;
    case Family::GammaPlus: c = {ExactScalar::ratio(3, 2), 0}; break;
    case Family::ThetaPlus: c = {ExactScalar::ratio(family.p - 1, 2), 0}; break;
    case Family::ThetaMinus: c = {0, ExactScalar::ratio(family.p - 1, 2)}; break;
    case Family::Eta: c = {1, 2}; break;
  }
  if (family.negated) c = {-c.first, -c.second};
  return c;
}

}  // namespace deo
