#pragma once

#include <string>
#include <vector>

#include "deo/exppoly.hpp"
#include "deo/kernels.hpp"
#include "deo/operators.hpp"

namespace deo {

/// Sampling lattice for the floating-point oracle.
///
/// Stencils are laid out on a lattice of step h() anchored at the evaluation
/// point; [t_lo, t_hi] is the region in which evaluation points are admitted.
struct GridSpec {
  long double t_lo = -4;
  long double t_hi = 4;
  int n_points = 641;
  long double tail_start = -30;

  long double h() const { return (t_hi - t_lo) / (n_points - 1); }
  // Throws InvalidInput unless t_lo < t_hi, n_points >= 64 and tail_start < t_lo.
  void validate() const;
  // Same interval, half the step.
  GridSpec halved() const { return {t_lo, t_hi, 2 * (n_points - 1) + 1, tail_start}; }
};

// Estimate of the integral of |f| over (-inf, tail_start), repeated |k| times:
// sum |c| |s|^m e^{Re(lambda) s} / min Re(lambda)^{|k|}. Infinite if f is not antiderivable.
double tail_truncation_bound(const ExpPoly& f, const GridSpec& g, int k = 1);

// f^{(j)}(t): composed central differences for j > 0, cumulative quadrature from
// tail_start for j < 0.
long double numeric_signed_derivative(const ExpPoly& f, int j, long double t, const GridSpec& g,
                                      kernels::Execution exec = kernels::Execution::Serial);

struct NumericTerms {
  long double cross = 0;  // f' f^{(k-1)}
  long double self = 0;   // f f^{(k)}
  long double value = 0;  // c1 cross + c2 self for the family
};

// sum |c| |t|^m e^{Re(lambda) t}: the size of f at t before any cancellation between
// atoms. Deviations are judged against this, so zeros of f' do not collapse the scale.
long double envelope(const ExpPoly& f, long double t);

// (c1, c2) with S_k = c1 f' f^{(k-1)} + c2 f f^{(k)}
std::pair<long double, long double> term_weights(const OperatorFamily& family);

NumericTerms numeric_terms(const OperatorFamily& family, int k, const ExpPoly& f, const GridSpec& g,
                           long double t);
// Throws StencilOutOfRange when t is closer than (|k| + 2) stencil widths to an edge.
long double numeric_psi(const OperatorFamily& family, int k, const ExpPoly& f, const GridSpec& g,
                        long double t);

struct CrossCheckSample {
  std::string family;
  int k = 0;
  double t = 0;
  double exact = 0;
  double numeric = 0;
  // |c1| env(f') env(f^{(k-1)}) + |c2| env(f) env(f^{(k)}) from the exact engine
  double scale = 0;
  double abs_dev = 0;
  double rel_dev = 0;  // abs_dev / scale, 0 when scale = 0
  bool pass = false;
  std::string error;  // set when the sample could not be evaluated
};

struct CrossCheckReport {
  std::string function;
  int k_lo = 0, k_hi = 0;
  GridSpec grid;
  double tol = 0;
  double abs_floor = 1e-8;
  double max_abs_dev = 0;
  double max_rel_dev = 0;
  CrossCheckSample worst;  // largest abs_dev / max(tol * scale, abs_floor)
  std::vector<CrossCheckSample> samples;
  int evaluated = 0;
  int failed = 0;
  int out_of_range = 0;  // StencilOutOfRange samples
  int domain_skipped = 0;  // negative orders on non-antiderivable f
  double tail_bound = 0;
  bool passed = false;
};

std::vector<double> default_t_samples();

CrossCheckReport cross_check(const ExpPoly& f, int k_lo, int k_hi, const GridSpec& g,
                             const std::vector<double>& t_samples, double tol,
                             const std::vector<OperatorFamily>& families = all_families(),
                             kernels::Execution exec = kernels::Execution::Parallel);

}  // namespace deo
