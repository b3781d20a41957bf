#include <CLI11.hpp>

#include <algorithm>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "deo/decomposition.hpp"
#include "deo/energy_taylor.hpp"
#include "deo/errors.hpp"
#include "deo/json_io.hpp"
#include "deo/numeric_oracle.hpp"
#include "deo/parse.hpp"
#include "deo/properties.hpp"
#include "deo/suite.hpp"
#include "table.hpp"

namespace {

using namespace deo;
using cli::num;
using cli::Table;
using cli::yes_no;

enum Exit { kPass = 0, kIdentityFailure = 1, kConfigError = 2, kDomainError = 3 };

struct Global {
  std::string output = "table";
  std::optional<double> tol;
  std::optional<int> kmin, kmax;
  unsigned seed = 1;
};

struct IntRange {
  int lo = 0, hi = 0;
};

IntRange parse_range(const std::string& text, const char* what) {
  IntRange r;
  try {
    std::size_t pos = 0;
    auto colon = text.find(':');
    if (colon == std::string::npos) {
      r.lo = r.hi = std::stoi(text, &pos);
      if (pos != text.size()) throw std::invalid_argument(text);
    } else {
      std::string a = text.substr(0, colon), b = text.substr(colon + 1);
      r.lo = std::stoi(a, &pos);
      if (pos != a.size()) throw std::invalid_argument(text);
      r.hi = std::stoi(b, &pos);
      if (pos != b.size()) throw std::invalid_argument(text);
    }
  } catch (const std::logic_error&) {
    throw InvalidInput(std::string(what) + ": expected an integer or 'a:b', got '" + text + "'");
  }
  if (r.lo > r.hi) throw InvalidInput(std::string(what) + ": empty range '" + text + "'");
  return r;
}

Rational real_arg(const std::string& text, const char* what) {
  try {
    return parse_rational(text);
  } catch (const std::exception&) {
    throw InvalidInput(std::string(what) + ": expected a rational or decimal, got '" + text + "'");
  }
}

bool json_out(const Global& g) { return g.output == "json"; }
bool csv_out(const Global& g) { return g.output == "csv"; }

void emit(const Global& g, const Table& t) {
  if (csv_out(g))
    t.print_csv(std::cout);
  else
    t.print(std::cout);
}

// Random exp-polys with Re(lambda) in {1, 2, 3} so every negative order is defined.
std::vector<CorpusEntry> random_corpus(int count, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> atoms(1, 2), coeff(1, 3), deg(0, 1), rate(1, 3), sign(0, 1);
  std::vector<CorpusEntry> out;
  for (int i = 0; i < count; ++i) {
    std::string expr;
    int n = atoms(rng);
    for (int j = 0; j < n; ++j) {
      int c = coeff(rng), m = deg(rng), l = rate(rng);
      expr += (j == 0 ? (sign(rng) ? "-" : "") : (sign(rng) ? " - " : " + "));
      expr += std::to_string(c) + (m ? "*t" : "") + "*exp(" + std::to_string(l) + "*t)";
    }
    out.push_back(corpus_entry(expr));
  }
  return out;
}

// ---------------------------------------------------------------- parse / eval

int cmd_parse(const Global& g, const std::vector<std::string>& exprs) {
  Json out = Json::array();
  Table t({"input", "canonical", "atoms", "real"});
  for (const auto& e : exprs) {
    ExpPoly f = parse_expr(e);
    Json atoms = Json::array();
    for (const auto& [a, c] : f.terms())
      atoms.push_back({{"coeff", c.str()}, {"m", a.m}, {"lambda", a.lambda.str()}});
    out.push_back({{"input", e}, {"canonical", to_string(f)}, {"atoms", atoms}, {"real", f.is_real()}});
    t.row({e, to_string(f), std::to_string(f.size()), yes_no(f.is_real())});
  }
  if (json_out(g))
    std::cout << out.dump(2) << '\n';
  else
    emit(g, t);
  return kPass;
}

int cmd_eval(const Global& g, const std::vector<std::string>& exprs, const std::vector<std::string>& ts) {
  Json out = Json::array();
  Table t({"f", "t", "value", "exact"});
  for (const auto& e : exprs) {
    ExpPoly f = parse_expr(e);
    for (const auto& ts_text : ts) {
      Rational tv = real_arg(ts_text, "--t");
      ClosedFormValue v = eval_exact(f, tv);
      out.push_back({{"f", to_string(f)}, {"t", ts_text}, {"value", v.value()}, {"exact", v.str()}});
      t.row({to_string(f), ts_text, num(v.value(), 15), v.str()});
    }
  }
  if (json_out(g))
    std::cout << out.dump(2) << '\n';
  else
    emit(g, t);
  return kPass;
}

// ---------------------------------------------------------------- decompose

struct DecomposeArgs {
  std::vector<std::string> f;
  std::string n = "2", v = "1";
  std::string variant = "plus_only";
  std::string family;
};

void plan_rows(Table& t, const DecompositionPlan& plan, const std::string& indent) {
  for (const auto& term : plan.terms) {
    std::string cof = term.cofactor_power == 0
                          ? "1"
                          : "d^" + std::to_string(term.cofactor_deriv) + " f^" + std::to_string(term.cofactor_power);
    if (term.subplan) cof += " (subplan)";
    t.row({indent + std::to_string(term.binom), to_string(term.prefactor), term.family.name(),
           std::to_string(term.order), std::to_string(term.operand_deriv), cof});
    if (term.subplan) plan_rows(t, *term.subplan, indent + "  ");
  }
}

// n <= -2: plan on h = 1/f; n = 1: d^v f rebuilt from f^3 f^{-2}.
int decompose_special(const Global& g, const std::string& expr, const ExpPoly& f, int n, int v, Json& out) {
  if (n == 0 || n == -1) throw InvalidOrder("--n must be >= 1 or <= -2, got " + std::to_string(n));
  bool ok;
  std::string what;
  Json j = {{"f", to_string(f)}, {"n", n}, {"v", v}};
  if (n == 1) {
    ExpPoly r = decompose_unity(v, f);
    ok = r.is_zero();
    what = "d^" + std::to_string(v) + " (f^3 f^-2) residual: " + to_string(r);
    j["residual"] = to_string(r);
  } else {
    NegativePowerCheck c = decompose_negative(v, -n, f);
    ok = c.is_zero();
    what = "d^" + std::to_string(v) + " f^" + std::to_string(n) + " via h = " + to_string(recip_single_atom(f)) +
           "\nplan residual: " + to_string(c.plan_residual) + "\ndirect residual: " + to_string(c.direct_residual);
    j["plan"] = to_json(decompose_power(v, -n, Variant::PlusOnly));
    j["plan_residual"] = to_string(c.plan_residual);
    j["direct_residual"] = to_string(c.direct_residual);
  }
  j["ok"] = ok;
  if (json_out(g))
    out.push_back(std::move(j));
  else
    std::cout << expr << ": " << what << (ok ? "  (ok)" : "  (FAIL)") << "\n\n";
  return ok ? kPass : kIdentityFailure;
}

int cmd_decompose(const Global& g, const DecomposeArgs& a) {
  IntRange nr = parse_range(a.n, "--n"), vr = parse_range(a.v, "--v");
  Variant variant;
  bool cube = false;
  if (a.variant == "plus_only")
    variant = Variant::PlusOnly;
  else if (a.variant == "plus_minus")
    variant = Variant::PlusMinus;
  else if (a.variant == "cube")
    variant = Variant::PlusOnly, cube = true;
  else
    throw InvalidInput("--variant must be plus_only, plus_minus or cube");
  std::optional<OperatorFamily> substitute;
  if (!a.family.empty()) substitute = OperatorFamily::parse(a.family);

  int code = kPass;
  Json out = Json::array();
  for (const auto& expr : a.f) {
    ExpPoly f = parse_expr(expr);
    for (int n = nr.lo; n <= nr.hi; ++n) {
      for (int v = vr.lo; v <= vr.hi; ++v) {
        if (n < 2) {
          code = std::max(code, decompose_special(g, expr, f, n, v, out));
          continue;
        }
        if (cube && n != 3) throw InvalidInput("--variant cube needs --n 3");
        DecompositionPlan plan = cube ? decompose_cube(v) : decompose_power(v, n, variant);
        if (substitute) plan = substitute_family(plan, OperatorFamily::psi_plus(), *substitute);
        ExpPoly residual = verify(plan, f);
        bool ok = residual.is_zero();
        if (!ok) code = kIdentityFailure;
        if (json_out(g)) {
          out.push_back({{"f", to_string(f)}, {"n", n}, {"v", v}, {"plan", to_json(plan)},
                         {"residual", to_string(residual)}, {"ok", ok}});
          continue;
        }
        Table t({"binom", "prefactor", "family", "k", "operand_deriv", "cofactor"});
        plan_rows(t, plan, "");
        if (!csv_out(g))
          std::cout << "d^" << v << " (" << to_string(f) << ")^" << n << "  [" << plan.terms.size() << " terms]\n";
        emit(g, t);
        if (!csv_out(g))
          std::cout << "residual: " << to_string(residual) << (ok ? "  (ok)" : "  (FAIL)") << "\n\n";
      }
    }
  }
  if (json_out(g)) std::cout << out.dump(2) << '\n';
  return code;
}

// ---------------------------------------------------------------- verify-suite

struct SuiteArgs {
  std::vector<std::string> f;
  bool no_builtin = false;
  int n_max = 5, v_max = 6, K = 12, membership_K = 4, random = 0;
  bool mutant = false;
  bool serial = false;
};

int cmd_verify_suite(const Global& g, const SuiteArgs& a) {
  std::vector<CorpusEntry> corpus;
  if (!a.no_builtin) corpus = builtin_corpus();
  for (const auto& e : a.f) corpus.push_back(corpus_entry(e));
  for (auto& e : random_corpus(a.random, g.seed)) corpus.push_back(std::move(e));
  if (corpus.empty()) throw InvalidInput("verify-suite: empty corpus");

  SuiteConfig cfg;
  cfg.n_max = a.n_max;
  cfg.v_max = a.v_max;
  cfg.taylor_K = a.K;
  cfg.membership_K = a.membership_K;
  if (g.kmin) cfg.k_lo = *g.kmin;
  if (g.kmax) cfg.k_hi = *g.kmax;
  if (cfg.n_max < 2 || cfg.v_max < 1 || cfg.k_lo > cfg.k_hi) throw InvalidInput("verify-suite: bad bounds");

  std::optional<testing::ScopedMutation> mutation;
  if (a.mutant) mutation.emplace(testing::Mutation::FlipPsiMinusSelfTerm);
  auto exec = a.serial ? kernels::Execution::Serial : kernels::Execution::Parallel;
  SuiteReport r = run_suite(corpus, cfg, exec);

  if (json_out(g)) {
    std::cout << to_json(r).dump(2) << '\n';
  } else {
    Table t({"identity", "pass", "fail", "skip", "status"});
    for (const auto& gr : r.groups)
      t.row({gr.name, std::to_string(gr.pass), std::to_string(gr.fail), std::to_string(gr.skip),
             gr.ok() ? "ok" : "FAIL"});
    emit(g, t);
    if (!csv_out(g)) {
      for (const auto& gr : r.groups)
        for (const auto& f : gr.failures) std::cout << "  " << gr.name << " failed: " << f << '\n';
      std::cout << "\ns^- membership over k in [-" << cfg.membership_K << ", " << cfg.membership_K
                << "] (reported, not asserted)\n";
      for (const auto& m : r.membership)
        std::cout << "  " << m.function << ": "
                  << (m.report ? (m.report->verdict ? "in s^-" : "not in s^-") : "undecided (" + m.error + ")")
                  << '\n';
      std::cout << (r.passed() ? "all identities hold\n" : "identity failures\n");
    }
  }
  return r.passed() ? kPass : kIdentityFailure;
}

// ---------------------------------------------------------------- properties

struct PropertiesArgs {
  std::vector<std::string> f;
  std::string k;
  int K = 4;
  int p_max = 6;
};

int cmd_properties(const Global& g, const PropertiesArgs& a) {
  IntRange kr{g.kmin.value_or(-3), g.kmax.value_or(5)};
  if (!a.k.empty()) kr = parse_range(a.k, "--k");
  if (kr.lo > kr.hi) throw InvalidInput("properties: empty k range");

  bool ok = true;
  Json out = Json::array();
  for (const auto& expr : a.f) {
    ExpPoly f = parse_expr(expr);
    Json rows = Json::array();
    Table t({"k", "prop1 a", "prop1 b", "prop1 c", "witness d", "witness e", "Ker psi+", "Ker psi-", "negation"});
    for (int k = kr.lo; k <= kr.hi; ++k) {
      try {
        Prop1Residuals p = prop1_residuals(k, f);
        ImageResiduals w = image_sum_difference_identities(k, f);
        bool kp = kernel_member(OperatorFamily::psi_plus(), k, f);
        bool km = kernel_member(OperatorFamily::psi_minus(), k, f);
        bool neg = true;
        for (const auto& fam : all_families()) neg = neg && kernel_negation_invariant(fam, k, f);
        ok = ok && p.is_zero() && w.is_zero() && neg;
        rows.push_back({{"k", k}, {"ra", p.ra.is_zero()}, {"rb", p.rb.is_zero()}, {"rc", p.rc.is_zero()},
                        {"d", w.d_res.is_zero()}, {"e", w.e_res.is_zero()}, {"ker_psi_plus", kp},
                        {"ker_psi_minus", km}, {"negation_invariant", neg}});
        auto z = [](const ExpPoly& e) { return e.is_zero() ? std::string("0") : std::string("NONZERO"); };
        t.row({std::to_string(k), z(p.ra), z(p.rb), z(p.rc), z(w.d_res), z(w.e_res), yes_no(kp), yes_no(km),
               neg ? "ok" : "FAIL"});
      } catch (const DomainError& e) {
        rows.push_back({{"k", k}, {"skipped", e.what()}});
        t.row({std::to_string(k), "n/a (domain)"});
      }
    }

    Json folded = Json::array();
    Table ft({"p", "folded a_p^+ = unfolded"});
    for (int p = 1; p <= a.p_max; ++p) {
      try {
        bool eq = simplified_a_plus(p, f) == a_plus(p, f).binomial_sum;
        ok = ok && eq;
        folded.push_back({{"p", p}, {"equal", eq}});
        ft.row({std::to_string(p), eq ? "yes" : "NO"});
      } catch (const DomainError&) {
        folded.push_back({{"p", p}, {"skipped", "unfolded form needs negative orders"}});
        ft.row({std::to_string(p), "n/a (domain)"});
      }
    }

    Json uniq = Json::array();
    Table ut({"k", "family", "solved (c+, c-)", "expected", "certified"});
    for (int k : {0, 2, 3}) {
      for (const auto& fam : all_families({2, 4, 5, 7})) {
        try {
          auto solved = solve_coefficients(fam, k, f);
          auto ref = reference_coefficients(fam);
          bool cert = solved && *solved == ref && uniqueness_residual(*solved, ref, k, f).certified();
          ok = ok && family_decomposition_residual(fam, ref, k, f).is_zero();
          std::string s = solved ? "(" + solved->first.str() + ", " + solved->second.str() + ")" : "dependent";
          uniq.push_back({{"k", k}, {"family", fam.name()}, {"solved", s}, {"certified", cert}});
          ut.row({std::to_string(k), fam.name(), s, "(" + ref.first.str() + ", " + ref.second.str() + ")",
                  yes_no(cert)});
        } catch (const DomainError&) {
          ut.row({std::to_string(k), fam.name(), "n/a (domain)"});
        }
      }
    }

    Json member;
    std::string member_text;
    try {
      MembershipReport m = s_minus_membership(f, a.K);
      member = to_json(m);
      member_text = m.verdict ? "in s^-" : "not in s^-";
    } catch (const DomainError& e) {
      member = {{"error", e.what()}};
      member_text = std::string("undecided (") + e.what() + ")";
    }

    if (json_out(g)) {
      out.push_back({{"f", to_string(f)}, {"k_rows", rows}, {"folded_a_plus", folded}, {"uniqueness", uniq},
                     {"membership", member}});
      continue;
    }
    if (!csv_out(g)) std::cout << "f = " << to_string(f) << '\n';
    emit(g, t);
    if (csv_out(g)) continue;
    std::cout << '\n';
    ft.print(std::cout);
    std::cout << '\n';
    ut.print(std::cout);
    std::cout << "\ns^- membership over k in [-" << a.K << ", " << a.K << "]: " << member_text << "\n\n";
  }
  if (json_out(g)) std::cout << out.dump(2) << '\n';
  return ok ? kPass : kIdentityFailure;
}

// ---------------------------------------------------------------- taylor / cos-example

struct TaylorArgs {
  std::string f;
  bool cos = false;
  std::string A = "1", a = "0", tau0 = "0", tau = "1";
  int K = 12;
};

void print_taylor(const Global& g, const TaylorReport& r) {
  if (csv_out(g)) {
    std::cout << taylor_csv(r);
    return;
  }
  Table t({"k", "c_k", "value", "partial_sum", "error"});
  for (std::size_t k = 0; k < r.coeffs.size(); ++k)
    t.row({std::to_string(k), r.coeffs[k].str(), num(r.coeffs[k].value(), 12), num(r.partial_sums[k], 15),
           num(r.errors[k], 3)});
  t.print(std::cout);
  std::cout << "exact energy: " << num(r.exact_energy.value(), 15) << "  (" << r.exact_energy.str() << ")\n";
  std::cout << "coefficient routes agree: " << yes_no(r.routes_agree) << '\n';
  std::cout << "final error: " << num(r.final_error(), 3) << '\n';
  std::cout << "ratio sequence:";
  for (const auto& e : r.ratio_seq) std::cout << ' ' << (e.value ? num(*e.value, 6) : std::string("0/0"));
  std::cout << '\n';
}

void print_cos(const Global& g, const CosExampleReport& r) {
  if (csv_out(g)) {
    std::cout << taylor_csv(r.taylor);
    return;
  }
  Table d({"p", "d^p Psi+_1(g)", "pattern", "d^{p+2} = -4 d^p"});
  for (const auto& row : r.derivatives)
    d.row({std::to_string(row.p), to_string(row.exact), row.matches ? "ok" : "MISMATCH", row.periodic ? "ok" : "NO"});
  d.print(std::cout);
  std::cout << '\n';
  Table b({"p", "max |d^p Psi+_1|", "2^{p+1} A^2", "|2^{2k+1} A^2|", "printed |2^{2k+1} A|", "holds"});
  for (const auto& row : r.bounds)
    b.row({std::to_string(row.p), num(row.max_abs), num(row.bound), num(row.parity_bound), num(row.printed_bound),
           yes_no(row.holds)});
  b.print(std::cout);
  std::cout << '\n';
  Table q({"p", "factor", "ratio", "4|tau-tau0|/(p+1)", "match"});
  for (const auto& row : r.ratios)
    q.row({std::to_string(row.p), row.factor.str(), num(row.value, 12), num(row.expected, 12), yes_no(row.matches)});
  q.print(std::cout);
  std::cout << '\n';
  Table s({"p", "distance", "telescoped", "displayed sum", "displayed bound", "match"});
  for (const auto& row : r.distances)
    s.row({std::to_string(row.p), num(row.distance), num(row.telescoped), num(row.displayed),
           num(row.displayed_bound), yes_no(row.matches)});
  s.print(std::cout);
  std::cout << "\nTaylor expansion of E(g) from a = 0\n";
  print_taylor(g, r.taylor);
  std::cout << "\npattern " << yes_no(r.pattern_ok) << ", periodicity " << yes_no(r.periodicity_ok) << ", bounds "
            << yes_no(r.bounds_ok) << ", ratio " << yes_no(r.ratio_ok) << ", ratio trend "
            << yes_no(r.ratio_trend_ok) << ", distances " << yes_no(r.distance_ok) << '\n';
  if (r.discrepancy_notes.empty())
    std::cout << "discrepancy notes: none (A = A^2, printed displays hold verbatim)\n";
  for (const auto& n : r.discrepancy_notes) std::cout << "note: " << n << '\n';
}

int cmd_taylor(const Global& g, const TaylorArgs& a) {
  Rational lower = real_arg(a.a, "--a"), tau0 = real_arg(a.tau0, "--tau0"), tau = real_arg(a.tau, "--tau");
  if (a.cos == !a.f.empty()) throw InvalidInput("taylor: give exactly one of --f or --cos");
  if (a.cos) {
    CosExampleReport r = cos_example(real_arg(a.A, "--A"), tau0, tau, a.K);
    bool ok = r.passed() && (!g.tol || r.taylor.final_error() <= *g.tol);
    if (json_out(g))
      std::cout << to_json(r).dump(2) << '\n';
    else
      print_cos(g, r);
    return ok ? kPass : kIdentityFailure;
  }
  TaylorReport r = taylor_report(parse_expr(a.f), lower, tau0, tau, a.K);
  bool ok = r.passed() && (!g.tol || r.final_error() <= *g.tol);
  if (json_out(g))
    std::cout << to_json(r).dump(2) << '\n';
  else
    print_taylor(g, r);
  return ok ? kPass : kIdentityFailure;
}

int cmd_cos_example(const Global& g, const TaylorArgs& a) {
  TaylorArgs c = a;
  c.cos = true;
  c.f.clear();
  return cmd_taylor(g, c);
}

// ---------------------------------------------------------------- cross-check

struct CrossArgs {
  std::vector<std::string> f;
  std::vector<double> t;
  double t_lo = -4, t_hi = 4, tail_start = -30;
  int n_points = 641;
  bool halving = false;
  bool serial = false;
};

int cmd_cross_check(const Global& g, const CrossArgs& a) {
  GridSpec grid{a.t_lo, a.t_hi, a.n_points, a.tail_start};
  grid.validate();
  const double tol = g.tol.value_or(1e-5);
  const int k_lo = g.kmin.value_or(-2), k_hi = g.kmax.value_or(4);
  std::vector<CorpusEntry> corpus;
  if (a.f.empty())
    corpus = builtin_corpus();
  else
    for (const auto& e : a.f) corpus.push_back(corpus_entry(e));
  const auto ts = a.t.empty() ? default_t_samples() : a.t;
  const auto exec = a.serial ? kernels::Execution::Serial : kernels::Execution::Parallel;

  bool ok = true;
  Json out = Json::array();
  Table t({"f", "evaluated", "failed", "skipped", "out of range", "max rel dev", "worst (family, k, t)", "halving gain",
           "status"});
  for (const auto& e : corpus) {
    CrossCheckReport r = cross_check(e.f, k_lo, k_hi, grid, ts, tol, all_families(), exec);
    bool pass = r.passed;
    std::string gain = "-";
    Json j = to_json(r);
    if (a.halving) {
      CrossCheckReport h = cross_check(e.f, k_lo, k_hi, grid.halved(), ts, tol, all_families(), exec);
      if (r.max_rel_dev > 0 && h.max_rel_dev > 0) {
        double ratio = r.max_rel_dev / h.max_rel_dev;
        gain = num(ratio, 4);
        pass = pass && ratio >= 8.0;
        j["halving_gain"] = ratio;
      }
    }
    ok = ok && pass;
    out.push_back(std::move(j));
    std::string worst = r.evaluated ? r.worst.family + ", " + std::to_string(r.worst.k) + ", " + num(r.worst.t, 4) : "-";
    t.row({e.expr, std::to_string(r.evaluated), std::to_string(r.failed), std::to_string(r.domain_skipped),
           std::to_string(r.out_of_range), num(r.max_rel_dev, 3), worst, gain, pass ? "ok" : "FAIL"});
  }
  if (json_out(g)) {
    std::cout << out.dump(2) << '\n';
  } else {
    emit(g, t);
    if (!csv_out(g))
      std::cout << "grid [" << a.t_lo << ", " << a.t_hi << "], n = " << a.n_points << ", h = " << num(static_cast<double>(grid.h()), 6)
                << ", tail from " << a.tail_start << ", k in [" << k_lo << ", " << k_hi << "], tol " << tol << '\n';
  }
  return ok ? kPass : kIdentityFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Differential energy operator decompositions over exponential polynomials"};
  app.require_subcommand(1);
  app.fallthrough();

  Global g;
  app.add_option("--output", g.output, "table, json or csv")->check(CLI::IsMember({"table", "json", "csv"}));
  app.add_option("--tol", g.tol, "tolerance override for floating-point checks");
  app.add_option("--kmin", g.kmin, "lowest operator order");
  app.add_option("--kmax", g.kmax, "highest operator order");
  app.add_option("--seed", g.seed, "seed for random corpus entries");

  std::vector<std::string> parse_f;
  auto* parse = app.add_subcommand("parse", "parse and canonicalize functions");
  parse->add_option("--f", parse_f, "function, e.g. \"exp(t) + t*exp(2*t)\"")->required();

  std::vector<std::string> eval_f, eval_t;
  auto* eval_cmd = app.add_subcommand("eval", "evaluate functions exactly at rational points");
  eval_cmd->add_option("--f", eval_f)->required();
  eval_cmd->add_option("--t", eval_t, "evaluation points (rational or decimal)")->required();

  DecomposeArgs dec;
  auto* decompose = app.add_subcommand("decompose", "build and verify a decomposition plan for d^v f^n");
  decompose->add_option("--f", dec.f)->required();
  decompose->add_option("--n", dec.n, "power n or range a:b (n = 1: unity reduction, n <= -2: 1/f powers)")->capture_default_str();
  decompose->add_option("--v", dec.v, "derivative order v or range a:b")->capture_default_str();
  decompose->add_option("--variant", dec.variant, "plus_only, plus_minus or cube")->capture_default_str();
  decompose->add_option("--family", dec.family, "substitute this family for psi+ (e.g. eta)");

  SuiteArgs suite;
  auto* verify_suite = app.add_subcommand("verify-suite", "run every identity family over the corpus");
  verify_suite->add_option("--f", suite.f, "extra corpus functions");
  verify_suite->add_flag("--no-builtin", suite.no_builtin, "skip the built-in corpus");
  verify_suite->add_option("--nmax", suite.n_max)->capture_default_str();
  verify_suite->add_option("--vmax", suite.v_max)->capture_default_str();
  verify_suite->add_option("--K", suite.K, "Taylor order for the coefficient-route check")->capture_default_str();
  verify_suite->add_option("--window", suite.membership_K, "s^- membership window")->capture_default_str();
  verify_suite->add_option("--random", suite.random, "add this many random corpus functions (see --seed)");
  verify_suite->add_flag("--serial", suite.serial, "run the corpus loop serially");
  verify_suite->add_flag("--mutant", suite.mutant)->group("");

  PropertiesArgs props;
  auto* properties = app.add_subcommand("properties", "Properties 1-2, kernels, s^- membership, folded a_p^+");
  properties->add_option("--f", props.f)->required();
  properties->add_option("--k", props.k, "k range a:b (default [-3, 5] or --kmin/--kmax)");
  properties->add_option("--K", props.K, "s^- membership window [-K, K]")->capture_default_str();
  properties->add_option("--pmax", props.p_max, "largest p for folded a_p^+")->capture_default_str();

  TaylorArgs tay;
  auto* taylor = app.add_subcommand("taylor", "Taylor expansion of the energy function");
  taylor->add_option("--f", tay.f);
  taylor->add_flag("--cos", tay.cos, "use g(t) = A cos(t)");
  taylor->add_option("--A", tay.A)->capture_default_str();
  taylor->add_option("--a", tay.a, "lower integration limit")->capture_default_str();
  taylor->add_option("--tau0", tay.tau0)->capture_default_str();
  taylor->add_option("--tau", tay.tau)->capture_default_str();
  taylor->add_option("--K", tay.K, "highest order p of d^p Psi+_1")->capture_default_str();

  TaylorArgs cosx;
  auto* cos_cmd = app.add_subcommand("cos-example", "the A cos(t) worked example with bounds and distances");
  cos_cmd->add_option("--A", cosx.A)->capture_default_str();
  cos_cmd->add_option("--tau0", cosx.tau0)->capture_default_str();
  cos_cmd->add_option("--tau", cosx.tau)->capture_default_str();
  cos_cmd->add_option("--K", cosx.K)->capture_default_str();

  CrossArgs cross;
  auto* cross_cmd = app.add_subcommand("cross-check", "compare exact operators with the finite-difference oracle");
  cross_cmd->add_option("--f", cross.f, "functions (default: built-in corpus)");
  cross_cmd->add_option("--t", cross.t, "sample points");
  cross_cmd->add_option("--t-lo", cross.t_lo)->capture_default_str();
  cross_cmd->add_option("--t-hi", cross.t_hi)->capture_default_str();
  cross_cmd->add_option("--n-points", cross.n_points)->capture_default_str();
  cross_cmd->add_option("--tail-start", cross.tail_start)->capture_default_str();
  cross_cmd->add_flag("--halving", cross.halving, "also require >= 8x gain on the halved grid");
  cross_cmd->add_flag("--serial", cross.serial, "serial sample loop");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kPass : kConfigError;
  }

  try {
    if (*parse) return cmd_parse(g, parse_f);
    if (*eval_cmd) return cmd_eval(g, eval_f, eval_t);
    if (*decompose) return cmd_decompose(g, dec);
    if (*verify_suite) return cmd_verify_suite(g, suite);
    if (*properties) return cmd_properties(g, props);
    if (*taylor) return cmd_taylor(g, tay);
    if (*cos_cmd) return cmd_cos_example(g, cosx);
    if (*cross_cmd) return cmd_cross_check(g, cross);
  } catch (const DomainError& e) {
    std::cerr << "domain error: " << e.what() << '\n';
    return kDomainError;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kConfigError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kConfigError;
  }
  return kConfigError;
}
