#pragma once

#include <optional>
#include <string>
#include <vector>

#include "deo/closed_form.hpp"
#include "deo/exppoly.hpp"

namespace deo {

// E(f)(tau) = integral of f^2 from a to tau.
ClosedFormValue energy(const ExpPoly& f, const Rational& a, const Rational& tau);

struct RatioEntry {
  int p = 0;
  std::optional<double> value;  // empty when d^p Psi+_1(f)(tau0) = 0
};

/// Taylor expansion of E(f) around tau0, evaluated at tau.
///
/// K is the highest order p of d^p Psi+_1 that enters, so the series runs
/// through (tau - tau0)^{K+2}.
struct TaylorReport {
  Rational a, tau0, tau;
  int K = 0;
  std::vector<ClosedFormValue> coeffs;         // c_0 = E(tau0), c_1 = f^2(tau0), c_k = d^{k-2} Psi+_1 / k!
  std::vector<ClosedFormValue> direct_coeffs;  // d^k E(f)(tau0) / k! from d^{k-1} f^2
  bool routes_agree = false;
  std::vector<double> partial_sums;  // [j] sums the series through (tau - tau0)^j
  std::vector<double> errors;        // |partial_sums[j] - exact_energy|
  ClosedFormValue exact_energy;
  std::vector<RatioEntry> ratio_seq;  // |D^{p+1} / D^p| |tau - tau0| / (p+1), p = 0..K-1
  std::vector<std::string> bound_violations;

  double final_error() const { return errors.empty() ? 0.0 : errors.back(); }
  bool passed() const { return routes_agree && bound_violations.empty(); }
};

TaylorReport taylor_report(const ExpPoly& f, const Rational& a, const Rational& tau0, const Rational& tau,
                           int K);

struct CosDerivativeRow {
  int p = 0;
  ExpPoly exact;    // d^p Psi+_1(A cos t)
  ExpPoly pattern;  // (-1)^{k+1} 2^{2k+1} A^2 (cos sin | cos^2 - sin^2)
  bool matches = false;
  bool periodic = false;  // d^{p+2} = -4 d^p
};

struct CosBoundRow {
  int p = 0;
  double max_abs = 0;       // over the 64 samples in [-pi, pi]
  double bound = 0;         // 2^{p+1} A^2
  double parity_bound = 0;  // |2^{2k+1} A^2|, k = floor(p/2)
  double printed_bound = 0; // |2^{2k+1} A| as printed
  bool holds = false;       // max_abs within both corrected bounds
};

struct CosRatioRow {
  int p = 0;
  ExactScalar factor;  // d^{p+2} Psi+_1 = factor * d^p Psi+_1
  double value = 0;    // |factor| |tau - tau0| / (p+1)
  double expected = 0; // 4 |tau - tau0| / (p+1)
  bool matches = false;
};

struct CosDistanceRow {
  int p = 0;
  double distance = 0;    // |D^{p+1}(tau0)| - |D^2(tau0)|, or |D^{p+1}| - |D^p| for p in {0, 1}
  double telescoped = 0;  // sum of consecutive differences
  double displayed = 0;   // sum_{i=2}^{p+1} (4 |tau - tau0| / (i+1) - 1) |D^i(tau0)|
  double displayed_bound = 0;
  bool matches = false;
};

struct CosExampleReport {
  Rational A, tau0, tau;
  int Kmax = 0;
  std::vector<CosDerivativeRow> derivatives;
  std::vector<CosBoundRow> bounds;
  std::vector<CosRatioRow> ratios;
  std::vector<CosDistanceRow> distances;
  TaylorReport taylor;
  bool pattern_ok = false;
  bool periodicity_ok = false;
  bool bounds_ok = false;
  bool ratio_ok = false;
  bool ratio_trend_ok = false;
  bool distance_ok = false;
  std::vector<std::string> discrepancy_notes;

  bool passed() const {
    return pattern_ok && periodicity_ok && bounds_ok && ratio_ok && ratio_trend_ok && distance_ok &&
           taylor.passed();
  }
};

CosExampleReport cos_example(const Rational& A, const Rational& tau0, const Rational& tau, int Kmax = 12);

}  // namespace deo
