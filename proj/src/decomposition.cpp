#include "deo/decomposition.hpp"

#include <map>

#include "deo/errors.hpp"

namespace deo {

std::int64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

namespace {

void require_order(int v, int n) {
  if (v < 1) throw InvalidOrder("derivative order v must be >= 1, got " + std::to_string(v));
  if (n < 2) throw InvalidOrder("power n must be >= 2, got " + std::to_string(n));
}

std::vector<OperatorFamily> families_for(Variant variant, const OperatorFamily& plus,
                                         const OperatorFamily& minus) {
  if (variant == Variant::PlusOnly) return {plus};
  return {plus, minus};
}

}  // namespace

DecompositionPlan decompose_square(int v, Variant variant) {
  require_order(v, 2);
  DecompositionPlan plan{2, v, {}};
  for (const auto& fam : families_for(variant, OperatorFamily::psi_plus(), OperatorFamily::psi_minus())) {
    for (int i = 0; i < v; ++i) {
      PlanTerm t;
      t.binom = binomial(v - 1, i);
      t.family = fam;
      t.order = v - 2 * i;
      t.operand_deriv = i;
      plan.terms.push_back(std::move(t));
    }
  }
  return plan;
}

DecompositionPlan decompose_cube(int v) {
  require_order(v, 3);
  DecompositionPlan plan{3, v, {}};
  const int m = v - 1;
  for (int k = 0; k <= m; ++k) {
    for (int r = 0; r <= k; ++r) {
      PlanTerm t;
      t.binom = binomial(m, k) * binomial(k, r);
      t.family = OperatorFamily::gamma_plus();
      t.order = k + 1 - 2 * r;
      t.operand_deriv = r;
      t.cofactor_power = 1;
      t.cofactor_deriv = m - k;
      plan.terms.push_back(std::move(t));
    }
  }
  return plan;
}

DecompositionPlan decompose_power(int v, int n, Variant variant) {
  require_order(v, n);
  if (n == 2) return decompose_square(v, variant);

  DecompositionPlan plan{n, v, {}};
  const int s = v - 1;
  const Rational prefactor = make_rational(n, n - 1);
  std::map<int, std::shared_ptr<const DecompositionPlan>> subplans;
  auto subplan_for = [&](int deriv) -> std::shared_ptr<const DecompositionPlan> {
    if (n - 2 < 2 || deriv < 1) return nullptr;
    auto& slot = subplans[deriv];
    if (!slot) slot = std::make_shared<const DecompositionPlan>(decompose_power(deriv, n - 2, variant));
    return slot;
  };

  for (const auto& fam :
       families_for(variant, OperatorFamily::theta_plus(n), OperatorFamily::theta_minus(n))) {
    for (int k = 0; k <= s; ++k) {
      for (int r = 0; r <= k; ++r) {
        PlanTerm t;
        t.binom = binomial(s, k) * binomial(k, r);
        t.prefactor = prefactor;
        t.family = fam;
        t.order = k + 1 - 2 * r;
        t.operand_deriv = r;
        t.cofactor_power = n - 2;
        t.cofactor_deriv = s - k;
        t.subplan = subplan_for(s - k);
        plan.terms.push_back(std::move(t));
      }
    }
  }
  return plan;
}

DecompositionPlan substitute_family(const DecompositionPlan& plan, const OperatorFamily& from,
                                    const OperatorFamily& to) {
  DecompositionPlan out = plan;
  for (auto& t : out.terms) {
    if (t.family == from) t.family = to;
    if (t.subplan)
      t.subplan = std::make_shared<const DecompositionPlan>(substitute_family(*t.subplan, from, to));
  }
  return out;
}

namespace {

class Materializer {
 public:
  explicit Materializer(const ExpPoly& f) : f_(f) {}

  ExpPoly run(const DecompositionPlan& plan) {
    ExpPoly sum;
    for (const auto& t : plan.terms) {
      ExpPoly cof = cofactor(t);
      if (cof.is_zero()) continue;
      ExpPoly op = apply(t.family, t.order, f_, t.operand_deriv);
      ExactScalar c = ExactScalar(Rational(mpz_class(static_cast<long>(t.binom)))) * ExactScalar(t.prefactor);
      sum += c * (op * cof);
    }
    return sum;
  }

 private:
  ExpPoly cofactor(const PlanTerm& t) {
    if (t.subplan) {
      auto it = sub_cache_.find(t.subplan.get());
      if (it != sub_cache_.end()) return it->second;
      ExpPoly value = run(*t.subplan);
      sub_cache_.emplace(t.subplan.get(), value);
      return value;
    }
    return derivative(power(t.cofactor_power), t.cofactor_deriv);
  }

  const ExpPoly& power(int p) {
    auto it = pow_cache_.find(p);
    if (it == pow_cache_.end()) it = pow_cache_.emplace(p, pow(f_, p)).first;
    return it->second;
  }

  const ExpPoly& f_;
  std::map<int, ExpPoly> pow_cache_;
  std::map<const DecompositionPlan*, ExpPoly> sub_cache_;
};

}  // namespace

ExpPoly materialize(const DecompositionPlan& plan, const ExpPoly& f) { return Materializer(f).run(plan); }

ExpPoly verify(const DecompositionPlan& plan, const ExpPoly& f) {
  return materialize(plan, f) - derivative(pow(f, plan.n), plan.v);
}

namespace {

CoefficientForms coefficient_forms(int s, const ExpPoly& f, const OperatorFamily& fam) {
  if (s < 1) throw InvalidOrder("coefficient index s must be >= 1");
  CoefficientForms out;
  for (int k = 0; k <= s - 1; ++k)
    out.binomial_sum +=
        ExactScalar(binomial(s - 1, k)) * apply(fam, 2 * (k + 1) - s, f, s - k - 1);
  out.derivative_form = derivative(apply(fam, 1, f), s - 1);
  return out;
}

}  // namespace

CoefficientForms a_plus(int s, const ExpPoly& f) {
  CoefficientForms out = coefficient_forms(s, f, OperatorFamily::psi_plus());
  out.reference = derivative(f * f, s);
  return out;
}

CoefficientForms a_minus(int s, const ExpPoly& f) {
  CoefficientForms out = coefficient_forms(s, f, OperatorFamily::psi_minus());
  return out;  // reference stays the zero function
}

ExpPoly cap_A(int i, const ExpPoly& f) {
  if (i < 1) throw InvalidOrder("A_i needs i >= 1");
  return derivative(apply(OperatorFamily::gamma_plus(), 1, f), i - 1);
}

ExpPoly cap_B(int i, bool plus, int p, const ExpPoly& f) {
  if (i < 1) throw InvalidOrder("B_i needs i >= 1");
  auto fam = plus ? OperatorFamily::theta_plus(p) : OperatorFamily::theta_minus(p);
  return derivative(apply(fam, 1, f), i - 1);
}

NegativePowerCheck decompose_negative(int v, int n, const ExpPoly& f) {
  ExpPoly h = recip_single_atom(f);
  DecompositionPlan plan = decompose_power(v, n, Variant::PlusOnly);
  ExpPoly m = materialize(plan, h);
  NegativePowerCheck out;
  out.plan_residual = m - derivative(pow(h, n), v);
  out.direct_residual = m - derivative(recip_single_atom(pow(f, n)), v);
  return out;
}

ExpPoly decompose_unity(int k, const ExpPoly& f) {
  if (k < 1) throw InvalidOrder("decompose_unity needs k >= 1");
  if (k > 2) throw UnsupportedOrder("decompose_unity only covers k in {1, 2}, got " + std::to_string(k));
  ExpPoly h = recip_single_atom(f);
  ExpPoly f3 = pow(f, 3);
  ExpPoly fm2 = pow(h, 2);
  ExpPoly d1f3 = materialize(decompose_power(1, 3, Variant::PlusOnly), f);
  ExpPoly d1fm2 = materialize(decompose_power(1, 2, Variant::PlusOnly), h);
  ExpPoly rebuilt;
  if (k == 1) {
    rebuilt = fm2 * d1f3 + f3 * d1fm2;
  } else {
    ExpPoly d2f3 = materialize(decompose_power(2, 3, Variant::PlusOnly), f);
    ExpPoly d2fm2 = materialize(decompose_power(2, 2, Variant::PlusOnly), h);
    rebuilt = ExactScalar(2) * (d1fm2 * d1f3) + f3 * d2fm2 + fm2 * d2f3;
  }
  return rebuilt - derivative(f, k);
}

std::vector<TaylorCoefficient> taylor_coefficient_decomposition(const ExpPoly& f, const Rational& t0,
                                                                int K) {
  if (!f.is_real()) throw InvalidInput("Taylor coefficient decomposition needs a real function");
  if (K < 0) throw InvalidOrder("K must be >= 0");
  std::vector<TaylorCoefficient> out;
  ExpPoly dk = f;
  Rational factorial = 1;
  for (int k = 0; k <= K; ++k) {
    if (k > 0) {
      dk = derivative(dk);
      factorial *= k;
    }
    TaylorCoefficient c;
    c.k = k;
    c.value = eval_exact(dk, t0) * ExactScalar(Rational(1 / factorial));
    if ((k == 1 || k == 2) && f.is_single_exponential()) {
      c.path = CoefficientPath::UnityReduction;
      c.checked = decompose_unity(k, f).is_zero();
    }
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace deo
