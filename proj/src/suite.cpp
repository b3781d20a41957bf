#include "deo/suite.hpp"

#include <algorithm>
#include <functional>

#include "deo/decomposition.hpp"
#include "deo/energy_taylor.hpp"
#include "deo/errors.hpp"
#include "deo/parse.hpp"

namespace deo {

namespace {

constexpr std::size_t kMaxFailureLabels = 8;

const std::vector<std::string> kGroups = {
    "pascal",         "chain-rule",       "a-minus",      "coefficient-forms", "power-plans",
    "variant-agreement", "cube-plan",     "eta-substitution", "uniqueness",    "prop1",
    "image-witness",  "kernel-negation",  "kernel-subset", "psi-minus-1",      "p-minus",
    "folded-a-plus",  "negative-power",   "unity",        "taylor-routes",
};

class Tally {
 public:
  explicit Tally(GroupResult& g) : g_(g) {}

  // fn returns true when the identity holds.
  void run(const std::string& label, const std::function<bool()>& fn) {
    try {
      record(fn(), label);
    } catch (const DomainError&) {
      ++g_.skip;
    } catch (const std::exception& e) {
      record(false, label + " (" + e.what() + ")");
    }
  }

 private:
  void record(bool ok, const std::string& label) {
    if (ok) {
      ++g_.pass;
      return;
    }
    ++g_.fail;
    if (g_.failures.size() < kMaxFailureLabels) g_.failures.push_back(label);
  }

  GroupResult& g_;
};

std::string lbl(const CorpusEntry& e, const std::string& what) { return e.expr + ": " + what; }

std::vector<GroupResult> run_entry(const CorpusEntry& e, const SuiteConfig& cfg) {
  std::vector<GroupResult> out;
  for (const auto& name : kGroups) out.push_back({name});
  auto tally = [&](const std::string& name) {
    auto it = std::find(kGroups.begin(), kGroups.end(), name);
    return Tally(out[it - kGroups.begin()]);
  };
  const ExpPoly& f = e.f;
  const auto families = all_families(cfg.theta_powers);
  const std::string sv = "v=", sk = "k=";

  {
    Tally t = tally("pascal");
    for (int v = 1; v <= cfg.v_max; ++v)
      t.run(lbl(e, sv + std::to_string(v)), [&] {
        auto plan = decompose_square(v);
        for (int i = 0; i < v; ++i)
          if (plan.terms[i].binom != binomial(v - 1, i) || plan.terms[i].order != v - 2 * i) return false;
        return verify(plan, f).is_zero();
      });
  }
  {
    Tally t = tally("chain-rule");
    for (const auto& fam : families)
      for (int k = cfg.k_lo; k <= cfg.k_hi; ++k)
        t.run(lbl(e, fam.name() + " " + sk + std::to_string(k)),
              [&] { return chain_rule_residual(fam, k, f).is_zero(); });
  }
  {
    Tally a = tally("a-minus");
    Tally c = tally("coefficient-forms");
    for (int s = 1; s <= cfg.v_max; ++s) {
      a.run(lbl(e, "s=" + std::to_string(s)), [&] { return a_minus(s, f).agree(); });
      c.run(lbl(e, "s=" + std::to_string(s)), [&] { return a_plus(s, f).agree(); });
    }
  }
  {
    Tally p = tally("power-plans");
    Tally d = tally("variant-agreement");
    for (int n = 2; n <= cfg.n_max; ++n) {
      for (int v = 1; v <= cfg.v_max; ++v) {
        const std::string at = "n=" + std::to_string(n) + " v=" + std::to_string(v);
        p.run(lbl(e, at + " plus_only"),
              [&] { return verify(decompose_power(v, n, Variant::PlusOnly), f).is_zero(); });
        p.run(lbl(e, at + " plus_minus"),
              [&] { return verify(decompose_power(v, n, Variant::PlusMinus), f).is_zero(); });
        d.run(lbl(e, at), [&] {
          return materialize(decompose_power(v, n, Variant::PlusOnly), f) ==
                 materialize(decompose_power(v, n, Variant::PlusMinus), f);
        });
      }
    }
  }
  {
    Tally t = tally("cube-plan");
    for (int v = 1; v <= cfg.v_max; ++v)
      t.run(lbl(e, sv + std::to_string(v)), [&] { return verify(decompose_cube(v), f).is_zero(); });
  }
  {
    Tally t = tally("eta-substitution");
    for (int v = 1; v <= cfg.eta_v_max; ++v)
      t.run(lbl(e, sv + std::to_string(v)), [&] {
        auto plan = substitute_family(decompose_square(v), OperatorFamily::psi_plus(), OperatorFamily::eta());
        return verify(plan, f).is_zero();
      });
  }
  {
    Tally t = tally("uniqueness");
    std::vector<int> powers = cfg.theta_powers;
    if (std::find(powers.begin(), powers.end(), 5) == powers.end()) powers.push_back(5);
    for (int k : cfg.uniqueness_orders) {
      for (const auto& fam : all_families(powers)) {
        const std::string at = fam.name() + " " + sk + std::to_string(k);
        t.run(lbl(e, at + " residual"), [&] {
          return family_decomposition_residual(fam, reference_coefficients(fam), k, f).is_zero();
        });
        // Certification needs Psi+_k(f), Psi-_k(f) independent; otherwise f is outside s^-.
        bool independent = false;
        try {
          independent = independence_witness(k, f).has_value();
        } catch (const DomainError&) {
        }
        if (!independent) continue;
        t.run(lbl(e, at + " certified"), [&] {
          auto ref = reference_coefficients(fam);
          auto solved = solve_coefficients(fam, k, f);
          return solved && *solved == ref && uniqueness_residual(*solved, ref, k, f).certified();
        });
      }
    }
  }
  {
    Tally p1 = tally("prop1");
    Tally iw = tally("image-witness");
    for (int k = -3; k <= cfg.k_hi; ++k) {
      p1.run(lbl(e, sk + std::to_string(k)), [&] { return prop1_residuals(k, f).is_zero(); });
      iw.run(lbl(e, sk + std::to_string(k)), [&] { return image_sum_difference_identities(k, f).is_zero(); });
    }
  }
  {
    Tally neg = tally("kernel-negation");
    Tally sub = tally("kernel-subset");
    for (int k = cfg.k_lo; k <= cfg.k_hi; ++k) {
      for (const auto& fam : families)
        neg.run(lbl(e, fam.name() + " " + sk + std::to_string(k)),
                [&] { return kernel_negation_invariant(fam, k, f); });
      sub.run(lbl(e, sk + std::to_string(k)), [&] {
        ExpPoly p = apply(OperatorFamily::psi_plus(), k, f), m = apply(OperatorFamily::psi_minus(), k, f);
        if (!(p.is_zero() && m.is_zero())) return true;
        return (p - m).is_zero() && (p + m).is_zero();
      });
    }
  }
  tally("psi-minus-1").run(lbl(e, "k=1"), [&] { return apply(OperatorFamily::psi_minus(), 1, f).is_zero(); });
  tally("p-minus").run(lbl(e, "P-(f,f)"),
                       [&] { return p_minus_bilinear(f, f) == apply(OperatorFamily::psi_minus(), 2, f); });
  {
    Tally t = tally("folded-a-plus");
    for (int p = 1; p <= cfg.v_max; ++p)
      t.run(lbl(e, "p=" + std::to_string(p)), [&] {
        ExpPoly folded = simplified_a_plus(p, f);
        return folded == a_plus(p, f).binomial_sum && folded == derivative(f * f, p);
      });
  }
  {
    Tally t = tally("negative-power");
    for (int n = 2; n <= 3; ++n)
      for (int v = 1; v <= 2; ++v)
        t.run(lbl(e, "n=-" + std::to_string(n) + " v=" + std::to_string(v)),
              [&] { return decompose_negative(v, n, f).is_zero(); });
  }
  {
    Tally t = tally("unity");
    for (int k = 1; k <= 2; ++k)
      t.run(lbl(e, sk + std::to_string(k)), [&] { return decompose_unity(k, f).is_zero(); });
  }
  tally("taylor-routes").run(lbl(e, "K=" + std::to_string(cfg.taylor_K)), [&] {
    if (!f.is_real()) throw NonIntegrableAtom("complex function");
    return taylor_report(f, Rational(0), Rational(0), Rational(1), cfg.taylor_K).routes_agree;
  });
  return out;
}

}  // namespace

void GroupResult::merge(const GroupResult& o) {
  pass += o.pass;
  fail += o.fail;
  skip += o.skip;
  for (const auto& s : o.failures)
    if (failures.size() < kMaxFailureLabels) failures.push_back(s);
}

bool SuiteReport::passed() const {
  return std::all_of(groups.begin(), groups.end(), [](const GroupResult& g) { return g.ok(); });
}

const GroupResult* SuiteReport::group(const std::string& name) const {
  for (const auto& g : groups)
    if (g.name == name) return &g;
  return nullptr;
}

const std::vector<std::string>& suite_group_names() { return kGroups; }

CorpusEntry corpus_entry(const std::string& expr) { return {expr, parse_expr(expr)}; }

std::vector<CorpusEntry> builtin_corpus() {
  std::vector<CorpusEntry> out;
  for (const char* s : {"exp(t) + exp(2*t)", "t*exp(2*t)", "2*exp(t) + t^2*exp(3*t)", "cos(t)", "exp(3*t)", "0"})
    out.push_back(corpus_entry(s));
  return out;
}

SuiteReport run_suite(const std::vector<CorpusEntry>& corpus, const SuiteConfig& cfg, kernels::Execution exec) {
  const int n = static_cast<int>(corpus.size());
  std::vector<std::vector<GroupResult>> per_entry(n);
  std::vector<MembershipLine> membership(n);
#pragma omp parallel for schedule(dynamic) if (exec == kernels::Execution::Parallel)
  for (int i = 0; i < n; ++i) {
    per_entry[i] = run_entry(corpus[i], cfg);
    membership[i].function = corpus[i].expr;
    try {
      membership[i].report = s_minus_membership(corpus[i].f, cfg.membership_K);
    } catch (const std::exception& e) {
      membership[i].error = e.what();
    }
  }
  SuiteReport r;
  for (const auto& name : kGroups) r.groups.push_back({name});
  for (const auto& entry : per_entry)
    for (std::size_t g = 0; g < entry.size(); ++g) r.groups[g].merge(entry[g]);
  r.membership = std::move(membership);
  return r;
}

}  // namespace deo
