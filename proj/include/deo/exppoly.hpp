#pragma once

#include <complex>
#include <cstddef>
#include <map>
#include <string>

#include "deo/closed_form.hpp"
#include "deo/exact_scalar.hpp"

namespace deo {

/// Basis function t^m e^{lambda t}.
struct Atom {
  int m = 0;
  ExactScalar lambda;

  friend bool operator==(const Atom& a, const Atom& b) { return a.m == b.m && a.lambda == b.lambda; }
};

struct AtomLess {
  bool operator()(const Atom& a, const Atom& b) const {
    ScalarLess less;
    if (less(a.lambda, b.lambda)) return true;
    if (less(b.lambda, a.lambda)) return false;
    return a.m < b.m;
  }
};

/// Finite sum of c * t^m * e^{lambda t} with exact coefficients.
///
/// Always canonical: atoms are unique and no stored coefficient is zero, so the
/// zero function is the empty map and equality is structural.
class ExpPoly {
 public:
  using Terms = std::map<Atom, ExactScalar, AtomLess>;

  ExpPoly() = default;

  static ExpPoly constant(const ExactScalar& c);
  static ExpPoly term(const ExactScalar& coeff, int m, const ExactScalar& lambda);
  static ExpPoly exp(const ExactScalar& lambda) { return term(1, 0, lambda); }
  // cos(b t) and sin(b t) lowered to conjugate exponential pairs.
  static ExpPoly cos(const Rational& b);
  static ExpPoly sin(const Rational& b);

  const Terms& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  // Real function iff the term set is closed under conjugation.
  bool is_real() const;
  // Every atom has Re(lambda) > 0, so iterated integrals from -infinity exist.
  bool antiderivable() const;
  bool is_single_exponential() const;

  ExpPoly conj() const;

  ExpPoly& operator+=(const ExpPoly& o);
  ExpPoly& operator-=(const ExpPoly& o);
  ExpPoly& operator*=(const ExactScalar& c);

  friend ExpPoly operator+(ExpPoly a, const ExpPoly& b) { return a += b; }
  friend ExpPoly operator-(ExpPoly a, const ExpPoly& b) { return a -= b; }
  friend ExpPoly operator*(ExpPoly a, const ExactScalar& c) { return a *= c; }
  friend ExpPoly operator*(const ExactScalar& c, ExpPoly a) { return a *= c; }
  friend ExpPoly operator*(const ExpPoly& a, const ExpPoly& b);
  ExpPoly operator-() const;

  friend bool operator==(const ExpPoly& a, const ExpPoly& b) { return a.terms_ == b.terms_; }

  void add_term(const Atom& atom, const ExactScalar& coeff);

 private:
  Terms terms_;
};

ExpPoly add(const ExpPoly& f, const ExpPoly& g);
ExpPoly mul(const ExpPoly& f, const ExpPoly& g);

ExpPoly derivative(const ExpPoly& f);
ExpPoly derivative(const ExpPoly& f, int order);

// Integral from -infinity; throws NonIntegrableAtom unless antiderivable().
ExpPoly antiderivative(const ExpPoly& f);

// k > 0: k-fold derivative, k = 0: f, k < 0: |k|-fold antiderivative from -infinity.
ExpPoly signed_derivative(const ExpPoly& f, int k);

// Some antiderivative valid for every atom (lambda = 0 atoms use t^{m+1}/(m+1)).
ExpPoly primitive(const ExpPoly& f);

ExpPoly pow(const ExpPoly& f, int n);
// (1/c) e^{-lambda t} for f = c e^{lambda t}; NotReciprocable otherwise.
ExpPoly recip_single_atom(const ExpPoly& f);

struct EvalResult {
  double value = 0;        // real part
  double imag_residue = 0;  // nonzero only through rounding for real f
};

EvalResult eval(const ExpPoly& f, double t);
std::complex<long double> eval_complex(const ExpPoly& f, long double t);

// Exact point value at a rational t.
ClosedFormValue eval_exact(const ExpPoly& f, const Rational& t);

// F(b) - F(a) with F = primitive(f).
ClosedFormValue definite_integral(const ExpPoly& f, const Rational& a, const Rational& b);

std::string to_string(const ExpPoly& f);
std::string to_string(const Atom& a);

}  // namespace deo
