#pragma once

#include <complex>
#include <map>
#include <optional>
#include <string>

#include "deo/exact_scalar.hpp"

namespace deo {

/// Exact value of the form sum_j c_j * exp(mu_j) with rational-complex c_j, mu_j.
/// Point values of exp-polys at rational t and definite integrals land here;
/// sin(2)/4 has no rational form but is exactly (i/8) e^{-2i} - (i/8) e^{2i}.
class ClosedFormValue {
 public:
  using Terms = std::map<ExactScalar, ExactScalar, ScalarLess>;

  ClosedFormValue() = default;
  explicit ClosedFormValue(const ExactScalar& rational_value);

  static ClosedFormValue exp_term(const ExactScalar& coeff, const ExactScalar& exponent);

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  // Set when the value is a plain rational-complex number (only exponent 0 present).
  std::optional<ExactScalar> as_scalar() const;

  ClosedFormValue& operator+=(const ClosedFormValue& o);
  ClosedFormValue& operator-=(const ClosedFormValue& o);
  ClosedFormValue& operator*=(const ExactScalar& c);

  friend ClosedFormValue operator+(ClosedFormValue a, const ClosedFormValue& b) { return a += b; }
  friend ClosedFormValue operator-(ClosedFormValue a, const ClosedFormValue& b) { return a -= b; }
  friend ClosedFormValue operator*(ClosedFormValue a, const ExactScalar& c) { return a *= c; }
  friend bool operator==(const ClosedFormValue& a, const ClosedFormValue& b) {
    return a.terms_ == b.terms_;
  }

  std::complex<double> to_complex() const;
  std::complex<long double> to_complex_ld() const;
  double value() const { return to_complex().real(); }

  std::string str() const;

 private:
  void add_term(const ExactScalar& exponent, const ExactScalar& coeff);

  Terms terms_;
};

}  // namespace deo
