#pragma once

#include <gmpxx.h>

#include <complex>
#include <string>

namespace deo {

using Rational = mpq_class;

Rational make_rational(long num, long den = 1);
// Parses "p", "-p/q" or a finite decimal such as "-0.125" into an exact rational.
Rational parse_rational(const std::string& text);
std::string to_string(const Rational& q);

/// Complex number with exact rational real and imaginary parts.
class ExactScalar {
 public:
  ExactScalar() = default;
  ExactScalar(long value) : re_(value) {}  // NOLINT(google-explicit-constructor)
  ExactScalar(Rational re, Rational im = 0);

  static ExactScalar ratio(long num, long den) { return ExactScalar(make_rational(num, den)); }
  static ExactScalar i() { return ExactScalar(0, 1); }

  const Rational& re() const noexcept { return re_; }
  const Rational& im() const noexcept { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  ExactScalar conj() const { return ExactScalar(re_, -im_); }
  Rational norm() const { return Rational(re_ * re_ + im_ * im_); }

  ExactScalar& operator+=(const ExactScalar& o);
  ExactScalar& operator-=(const ExactScalar& o);
  ExactScalar& operator*=(const ExactScalar& o);
  ExactScalar& operator/=(const ExactScalar& o);

  friend ExactScalar operator+(ExactScalar a, const ExactScalar& b) { return a += b; }
  friend ExactScalar operator-(ExactScalar a, const ExactScalar& b) { return a -= b; }
  friend ExactScalar operator*(ExactScalar a, const ExactScalar& b) { return a *= b; }
  friend ExactScalar operator/(ExactScalar a, const ExactScalar& b) { return a /= b; }
  ExactScalar operator-() const { return ExactScalar(-re_, -im_); }

  friend bool operator==(const ExactScalar& a, const ExactScalar& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  std::complex<double> to_complex() const;
  std::complex<long double> to_complex_ld() const;

  // "3/2", "-1/2*i", "1+2*i"
  std::string str() const;

 private:
  Rational re_;
  Rational im_;
};

ExactScalar pow(const ExactScalar& base, unsigned exponent);

// Lexicographic on (re, im). Only used as a container ordering.
struct ScalarLess {
  bool operator()(const ExactScalar& a, const ExactScalar& b) const {
    int c = cmp(a.re(), b.re());
    if (c != 0) return c < 0;
    return cmp(a.im(), b.im()) < 0;
  }
};

long double to_long_double(const Rational& q);

}  // namespace deo
