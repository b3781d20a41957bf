#include "deo/exact_scalar.hpp"

#include <cctype>
#include <stdexcept>

#include "deo/errors.hpp"

namespace deo {

Rational make_rational(long num, long den) {
  if (den == 0) throw std::domain_error("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational parse_rational(const std::string& text) {
  std::string s = text;
  if (s.empty()) throw InvalidInput("empty number");
  bool neg = false;
  std::size_t pos = 0;
  if (s[pos] == '+' || s[pos] == '-') {
    neg = s[pos] == '-';
    ++pos;
  }
  Rational out;
  auto all_digits = [](const std::string& d) {
    if (d.empty()) return false;
    for (char c : d)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
  };
  std::string body = s.substr(pos);
  if (auto slash = body.find('/'); slash != std::string::npos) {
    std::string num = body.substr(0, slash), den = body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) throw InvalidInput("malformed rational '" + text + "'");
    mpz_class d(den, 10);
    if (d == 0) throw InvalidInput("zero denominator in '" + text + "'");
    out = Rational(mpz_class(num, 10), d);
  } else if (auto dot = body.find('.'); dot != std::string::npos) {
    std::string ip = body.substr(0, dot), fp = body.substr(dot + 1);
    if (ip.empty()) ip = "0";
    if (!all_digits(ip) || (!fp.empty() && !all_digits(fp)))
      throw InvalidInput("malformed decimal '" + text + "'");
    mpz_class scale = 1;
    for (std::size_t i = 0; i < fp.size(); ++i) scale *= 10;
    out = Rational(mpz_class(ip + fp, 10), scale);
  } else {
    if (!all_digits(body)) throw InvalidInput("malformed number '" + text + "'");
    out = Rational(mpz_class(body, 10));
  }
  out.canonicalize();
  return neg ? Rational(-out) : out;
}

std::string to_string(const Rational& q) { return q.get_str(); }

ExactScalar::ExactScalar(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {
  re_.canonicalize();
  im_.canonicalize();
}

ExactScalar& ExactScalar::operator+=(const ExactScalar& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

ExactScalar& ExactScalar::operator-=(const ExactScalar& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

ExactScalar& ExactScalar::operator*=(const ExactScalar& o) {
  if (is_real() && o.is_real()) {
    re_ *= o.re_;
    return *this;
  }
  Rational r = re_ * o.re_ - im_ * o.im_;
  Rational i = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(r);
  im_ = std::move(i);
  return *this;
}

ExactScalar& ExactScalar::operator/=(const ExactScalar& o) {
  if (o.is_zero()) throw std::domain_error("division by exact zero");
  if (o.is_real()) {
    re_ /= o.re_;
    im_ /= o.re_;
    return *this;
  }
  Rational d = o.norm();
  Rational r = (re_ * o.re_ + im_ * o.im_) / d;
  Rational i = (im_ * o.re_ - re_ * o.im_) / d;
  re_ = std::move(r);
  im_ = std::move(i);
  return *this;
}

long double to_long_double(const Rational& q) {
  // Two-double split of a 128-bit float keeps the extra long double mantissa bits.
  mpf_class f(q, 128);
  double hi = mpf_get_d(f.get_mpf_t());
  mpf_class rest = f - mpf_class(hi, 128);
  double lo = mpf_get_d(rest.get_mpf_t());
  return static_cast<long double>(hi) + static_cast<long double>(lo);
}

std::complex<double> ExactScalar::to_complex() const { return {re_.get_d(), im_.get_d()}; }

std::complex<long double> ExactScalar::to_complex_ld() const {
  return {to_long_double(re_), to_long_double(im_)};
}

std::string ExactScalar::str() const {
  if (is_real()) return re_.get_str();
  std::string im_part;
  if (im_ == 1)
    im_part = "i";
  else if (im_ == -1)
    im_part = "-i";
  else
    im_part = im_.get_str() + "*i";
  if (sgn(re_) == 0) return im_part;
  std::string out = re_.get_str();
  if (im_part[0] != '-') out += "+";
  return out + im_part;
}

ExactScalar pow(const ExactScalar& base, unsigned exponent) {
  ExactScalar result(1);
  ExactScalar b = base;
  while (exponent > 0) {
    if (exponent & 1u) result *= b;
    exponent >>= 1u;
    if (exponent > 0) b *= b;
  }
  return result;
}

}  // namespace deo
