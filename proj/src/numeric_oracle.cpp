#include "deo/numeric_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include "deo/errors.hpp"

namespace deo {

namespace {

constexpr long double kNaN = std::numeric_limits<long double>::quiet_NaN();

void check_margin(int k, const GridSpec& g, long double t) {
  const long double margin = (std::abs(k) + 2) * 2 * g.h();
  if (t - g.t_lo < margin || g.t_hi - t < margin)
    throw StencilOutOfRange("t = " + std::to_string(static_cast<double>(t)) + " is within " +
                            std::to_string(static_cast<double>(margin)) + " of the grid edge for k = " +
                            std::to_string(k));
}

}  // namespace

long double envelope(const ExpPoly& f, long double t) {
  long double sum = 0;
  for (const auto& [atom, c] : f.terms())
    sum += std::abs(c.to_complex_ld()) * std::pow(std::fabs(t), atom.m) *
           std::exp(atom.lambda.to_complex_ld().real() * t);
  return sum;
}

void GridSpec::validate() const {
  if (!(t_lo < t_hi)) throw InvalidInput("grid needs t_lo < t_hi");
  if (n_points < 64) throw InvalidInput("grid needs n_points >= 64");
  if (!(tail_start < t_lo)) throw InvalidInput("grid needs tail_start < t_lo");
}

double tail_truncation_bound(const ExpPoly& f, const GridSpec& g, int k) {
  if (f.is_zero()) return 0.0;
  if (!f.antiderivable()) return std::numeric_limits<double>::infinity();
  long double min_re = std::numeric_limits<long double>::infinity();
  long double total = 0;
  const long double s = g.tail_start;
  for (const auto& [atom, c] : f.terms()) {
    long double re = atom.lambda.to_complex_ld().real();
    min_re = std::min(min_re, re);
    total += std::abs(c.to_complex_ld()) * std::pow(std::fabs(s), atom.m) * std::exp(re * s);
  }
  return static_cast<double>(total / std::pow(min_re, std::max(std::abs(k), 1)));
}

long double numeric_signed_derivative(const ExpPoly& f, int j, long double t, const GridSpec& g,
                                      kernels::Execution exec) {
  const long double h = g.h();
  if (j == 0) return eval_complex(f, t).real();
  if (j > 0) {
    auto v = kernels::sample(f, t - 2 * j * h, h, 4 * j + 1, exec);
    for (int i = 0; i < j; ++i) v = kernels::central_difference(v, h, exec);
    return v.front();
  }
  if (!f.antiderivable())
    throw NonIntegrableAtom("numeric integral from the tail needs Re(lambda) > 0 for " + to_string(f));
  const int steps = static_cast<int>(std::ceil((t - g.tail_start) / h));
  auto v = kernels::sample(f, t - steps * h, h, steps + 1, exec);
  for (int i = 0; i < -j; ++i) v = kernels::cumulative_integral(v, h);
  return v.back();
}

std::pair<long double, long double> term_weights(const OperatorFamily& family) {
  std::pair<long double, long double> w;
  switch (family.tag) {
    case Family::PsiPlus: w = {1, 1}; break;
    case Family::PsiMinus: w = {1, -1}; break;
    case Family::GammaPlus: w = {1.5L, 1.5L}; break;
    case Family::ThetaPlus: w = {(family.p - 1) / 2.0L, (family.p - 1) / 2.0L}; break;
    case Family::ThetaMinus: w = {(family.p - 1) / 2.0L, -(family.p - 1) / 2.0L}; break;
    case Family::Eta: w = {3, -1}; break;
  }
  if (family.negated) w = {-w.first, -w.second};
  return w;
}

NumericTerms numeric_terms(const OperatorFamily& family, int k, const ExpPoly& f, const GridSpec& g,
                           long double t) {
  check_margin(k, g, t);
  NumericTerms out;
  out.cross = numeric_signed_derivative(f, 1, t, g) * numeric_signed_derivative(f, k - 1, t, g);
  out.self = numeric_signed_derivative(f, 0, t, g) * numeric_signed_derivative(f, k, t, g);
  auto [c1, c2] = term_weights(family);
  out.value = c1 * out.cross + c2 * out.self;
  return out;
}

long double numeric_psi(const OperatorFamily& family, int k, const ExpPoly& f, const GridSpec& g,
                        long double t) {
  return numeric_terms(family, k, f, g, t).value;
}

std::vector<double> default_t_samples() { return {-3, -2, -1, -0.5, 0, 0.5, 1, 2, 3}; }

CrossCheckReport cross_check(const ExpPoly& f, int k_lo, int k_hi, const GridSpec& g,
                             const std::vector<double>& t_samples, double tol,
                             const std::vector<OperatorFamily>& families, kernels::Execution exec) {
  g.validate();
  if (k_lo > k_hi) throw InvalidInput("empty k range");
  CrossCheckReport r;
  r.function = to_string(f);
  r.k_lo = k_lo;
  r.k_hi = k_hi;
  r.grid = g;
  r.tol = tol;
  r.tail_bound = k_lo < 0 ? tail_truncation_bound(f, g, k_lo - 1) : 0.0;

  // Exact side: operator images and the two product terms per k.
  struct ExactK {
    bool ok = true;
    std::string error;
    ExpPoly d1, dkm1, dk;
    std::vector<ExpPoly> images;  // per family
  };
  std::map<int, ExactK> exact;
  for (int k = k_lo; k <= k_hi; ++k) {
    ExactK& e = exact[k];
    try {
      e.d1 = derivative(f);
      e.dkm1 = signed_derivative(f, k - 1);
      e.dk = signed_derivative(f, k);
      for (const auto& fam : families) e.images.push_back(apply(fam, k, f));
    } catch (const DomainError& err) {
      e.ok = false;
      e.error = err.what();
    }
  }

  // Numeric side: every signed derivative order any sample needs, once per t.
  const int o_lo = std::min(k_lo - 1, 0), o_hi = std::max(k_hi, 1);
  const int nt = static_cast<int>(t_samples.size());
  const int no = o_hi - o_lo + 1;
  std::vector<long double> deriv(static_cast<std::size_t>(nt) * no, kNaN);
  const bool par = exec == kernels::Execution::Parallel;
#pragma omp parallel for collapse(2) schedule(dynamic) if (par)
  for (int ti = 0; ti < nt; ++ti) {
    for (int oi = 0; oi < no; ++oi) {
      const int order = o_lo + oi;
      if (order < 0 && !f.antiderivable()) continue;
      try {
        deriv[ti * no + oi] = numeric_signed_derivative(f, order, t_samples[ti], g);
      } catch (const Error&) {
      }
    }
  }
  auto d = [&](int ti, int order) { return deriv[ti * no + (order - o_lo)]; };

  const int nf = static_cast<int>(families.size());
  const int nk = k_hi - k_lo + 1;
  const int total = nt * nf * nk;
  r.samples.resize(total);
#pragma omp parallel for schedule(static) if (par)
  for (int idx = 0; idx < total; ++idx) {
    const int ti = idx / (nf * nk);
    const int fi = (idx / nk) % nf;
    const int k = k_lo + idx % nk;
    CrossCheckSample& s = r.samples[idx];
    s.family = families[fi].name();
    s.k = k;
    s.t = t_samples[ti];
    const ExactK& e = exact.at(k);
    if (!e.ok) {
      s.error = "domain: " + e.error;
      continue;
    }
    try {
      check_margin(k, g, s.t);
    } catch (const StencilOutOfRange& err) {
      s.error = std::string("stencil: ") + err.what();
      continue;
    }
    auto [c1, c2] = term_weights(families[fi]);
    const long double t = s.t;
    const long double cross = d(ti, 1) * d(ti, k - 1);
    const long double self = d(ti, 0) * d(ti, k);
    const long double numeric = c1 * cross + c2 * self;
    const long double ex = eval_complex(e.images[fi], t).real();
    const long double scale = std::fabs(c1) * envelope(e.d1, t) * envelope(e.dkm1, t) +
                              std::fabs(c2) * envelope(f, t) * envelope(e.dk, t);
    s.exact = static_cast<double>(ex);
    s.numeric = static_cast<double>(numeric);
    s.scale = static_cast<double>(scale);
    s.abs_dev = static_cast<double>(std::fabs(numeric - ex));
    s.rel_dev = scale > 0 ? static_cast<double>(std::fabs(numeric - ex) / scale) : 0.0;
    s.pass = std::isfinite(s.abs_dev) && s.abs_dev <= std::max(tol * s.scale, r.abs_floor);
  }

  double worst_ratio = -1;
  for (const auto& s : r.samples) {
    if (!s.error.empty()) {
      if (s.error.rfind("domain", 0) == 0)
        ++r.domain_skipped;
      else
        ++r.out_of_range;
      continue;
    }
    ++r.evaluated;
    if (!s.pass) ++r.failed;
    r.max_abs_dev = std::max(r.max_abs_dev, s.abs_dev);
    r.max_rel_dev = std::max(r.max_rel_dev, s.rel_dev);
    double ratio = std::isfinite(s.abs_dev) ? s.abs_dev / std::max(tol * s.scale, r.abs_floor)
                                            : std::numeric_limits<double>::infinity();
    if (ratio > worst_ratio) {
      worst_ratio = ratio;
      r.worst = s;
    }
  }
  r.passed = r.failed == 0 && r.out_of_range == 0;
  return r;
}

}  // namespace deo
