#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "deo/closed_form.hpp"
#include "deo/exppoly.hpp"
#include "deo/operators.hpp"

namespace deo {

enum class Variant { PlusOnly, PlusMinus };

struct DecompositionPlan;

/// binom * prefactor * S_order(d^operand_deriv f) * d^cofactor_deriv (f^cofactor_power)
///
/// When `subplan` is set it decomposes the cofactor d^cofactor_deriv f^cofactor_power.
struct PlanTerm {
  std::int64_t binom = 1;
  Rational prefactor = 1;
  OperatorFamily family;
  int order = 1;
  int operand_deriv = 0;
  int cofactor_power = 0;
  int cofactor_deriv = 0;
  std::shared_ptr<const DecompositionPlan> subplan;
};

/// Data form of one decomposition of d_t^v f^n.
struct DecompositionPlan {
  int n = 2;
  int v = 1;
  std::vector<PlanTerm> terms;
};

std::int64_t binomial(int n, int k);

// Pascal rule: d^v f^2 = sum_i C(v-1, i) Psi_{v-2i}(d^i f), orders descending.
DecompositionPlan decompose_square(int v, Variant variant = Variant::PlusOnly);
// d^{m+1} f^3 = sum_k C(m,k) A_{k+1}(f) d^{m-k} f with A_i = d^{i-1} Gamma+_1 expanded.
DecompositionPlan decompose_cube(int v);
// d^{s+1} f^n = sum_k C(s,k) n/(n-1) (B+_{k+1} [+ B-_{k+1}])(f) d^{s-k} f^{n-2}.
DecompositionPlan decompose_power(int v, int n, Variant variant);

// Replaces every occurrence of `from` (including inside subplans).
DecompositionPlan substitute_family(const DecompositionPlan& plan, const OperatorFamily& from,
                                    const OperatorFamily& to);

ExpPoly materialize(const DecompositionPlan& plan, const ExpPoly& f);
// materialize(plan, f) - d^v f^n
ExpPoly verify(const DecompositionPlan& plan, const ExpPoly& f);

// Three routes to the same quantity; agree() is the identity being checked.
struct CoefficientForms {
  ExpPoly binomial_sum;
  ExpPoly derivative_form;
  ExpPoly reference;  // d^s f^2 for a_plus, zero for a_minus
  bool agree() const { return binomial_sum == derivative_form && derivative_form == reference; }
};

CoefficientForms a_plus(int s, const ExpPoly& f);
CoefficientForms a_minus(int s, const ExpPoly& f);

// A_i(f) = d^{i-1} Gamma+_1(f)
ExpPoly cap_A(int i, const ExpPoly& f);
// B^{+-}_i(f) = d^{i-1} theta^{+-}_1(f) for theta with power p
ExpPoly cap_B(int i, bool plus, int p, const ExpPoly& f);

struct NegativePowerCheck {
  ExpPoly plan_residual;    // verify(decompose_power(v, n), 1/f)
  ExpPoly direct_residual;  // materialize - d^v (recip(f^n)), computed without h
  bool is_zero() const { return plan_residual.is_zero() && direct_residual.is_zero(); }
};

NegativePowerCheck decompose_negative(int v, int n, const ExpPoly& f);

// d^k f rebuilt as d^k (f^3 f^{-2}) from plan-decomposed factors; residual against d^k f.
ExpPoly decompose_unity(int k, const ExpPoly& f);

enum class CoefficientPath { Direct, UnityReduction };

struct TaylorCoefficient {
  int k = 0;
  ClosedFormValue value;  // d^k f(t0) / k!
  CoefficientPath path = CoefficientPath::Direct;
  bool checked = true;  // the reduction route reproduced the direct derivative
};

std::vector<TaylorCoefficient> taylor_coefficient_decomposition(const ExpPoly& f, const Rational& t0,
                                                                int K);

}  // namespace deo
