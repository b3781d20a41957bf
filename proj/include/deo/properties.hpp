#pragma once

#include <map>
#include <optional>
#include <utility>

#include "deo/exppoly.hpp"
#include "deo/operators.hpp"

namespace deo {

struct Prop1Residuals {
  ExpPoly ra;  // Psi+_k(f) - Psi+_{2-k}(d^{k-1} f)
  ExpPoly rb;  // Psi-_k(f) + Psi-_{2-k}(d^{k-1} f)
  ExpPoly rc;  // (Psi+_k + Psi-_k)(f) - (Psi+_{2-k} - Psi-_{2-k})(d^{k-1} f)
  bool is_zero() const { return ra.is_zero() && rb.is_zero() && rc.is_zero(); }
};

Prop1Residuals prop1_residuals(int k, const ExpPoly& f);

struct ImageResiduals {
  ExpPoly d_res;  // Psi+_k - Psi-_k - 2 f f^{(k)}
  ExpPoly e_res;  // Psi+_k + Psi-_k - 2 f' f^{(k-1)}
  bool is_zero() const { return d_res.is_zero() && e_res.is_zero(); }
};

ImageResiduals image_sum_difference_identities(int k, const ExpPoly& f);

bool kernel_member(const OperatorFamily& family, int k, const ExpPoly& f);
// Ker(-S_k) = Ker(S_k)
bool kernel_negation_invariant(const OperatorFamily& family, int k, const ExpPoly& f);

/// Window-relative s^-(R) verdict over k in [-K, K].
struct MembershipReport {
  int k_lo = 0;
  int k_hi = 0;
  std::map<int, bool> psi_plus_nonzero;
  std::map<int, bool> psi_minus_nonzero;  // k = 1 is never listed
  bool verdict = false;
};

MembershipReport s_minus_membership(const ExpPoly& f, int K);

// Folded a_p^+: only the upper half of the binomial row, doubled.
ExpPoly simplified_a_plus(int p, const ExpPoly& f);

using CoefficientPair = std::pair<ExactScalar, ExactScalar>;

// Two atoms whose 2x2 minor of (Psi+_k f, Psi-_k f) is nonzero. Its presence
// means the two images are linearly independent, so residual zero forces alpha = beta.
struct IndependenceWitness {
  Atom first;
  Atom second;
  ExactScalar minor;
};

struct UniquenessResult {
  ExpPoly residual;  // (a1 - b1) Psi+_k(f) + (a2 - b2) Psi-_k(f)
  std::optional<IndependenceWitness> witness;
  // residual is zero and the witness exists, hence alpha = beta.
  bool certified() const { return residual.is_zero() && witness.has_value(); }
};

std::optional<IndependenceWitness> independence_witness(int k, const ExpPoly& f);

UniquenessResult uniqueness_residual(const CoefficientPair& beta, const CoefficientPair& alpha, int k,
                                     const ExpPoly& f);

// S_k(f) - c1 Psi+_k(f) - c2 Psi-_k(f)
ExpPoly family_decomposition_residual(const OperatorFamily& family, const CoefficientPair& c, int k,
                                      const ExpPoly& f);

// Recovers (c1, c2) with S_k(f) = c1 Psi+_k(f) + c2 Psi-_k(f) through the witness minor.
// Empty when the images are dependent or S_k(f) leaves their span.
std::optional<CoefficientPair> solve_coefficients(const OperatorFamily& family, int k, const ExpPoly& f);

// The (c1, c2) each family is built from: eta = (1, 2), Gamma+ = (3/2, 0), theta+-(p) = ((p-1)/2) Psi+-.
CoefficientPair reference_coefficients(const OperatorFamily& family);

}  // namespace deo
