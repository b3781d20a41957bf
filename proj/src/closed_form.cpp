#include "deo/closed_form.hpp"

#include <cmath>

namespace deo {

ClosedFormValue::ClosedFormValue(const ExactScalar& rational_value) {
  add_term(ExactScalar(0), rational_value);
}

ClosedFormValue ClosedFormValue::exp_term(const ExactScalar& coeff, const ExactScalar& exponent) {
  ClosedFormValue v;
  v.add_term(exponent, coeff);
  return v;
}

void ClosedFormValue::add_term(const ExactScalar& exponent, const ExactScalar& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(exponent, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

std::optional<ExactScalar> ClosedFormValue::as_scalar() const {
  if (terms_.empty()) return ExactScalar(0);
  if (terms_.size() == 1 && terms_.begin()->first.is_zero()) return terms_.begin()->second;
  return std::nullopt;
}

ClosedFormValue& ClosedFormValue::operator+=(const ClosedFormValue& o) {
  for (const auto& [mu, c] : o.terms_) add_term(mu, c);
  return *this;
}

ClosedFormValue& ClosedFormValue::operator-=(const ClosedFormValue& o) {
  for (const auto& [mu, c] : o.terms_) add_term(mu, -c);
  return *this;
}

ClosedFormValue& ClosedFormValue::operator*=(const ExactScalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [mu, coeff] : terms_) coeff *= c;
  return *this;
}

std::complex<long double> ClosedFormValue::to_complex_ld() const {
  std::complex<long double> sum = 0;
  for (const auto& [mu, c] : terms_) sum += c.to_complex_ld() * std::exp(mu.to_complex_ld());
  return sum;
}

std::complex<double> ClosedFormValue::to_complex() const {
  auto z = to_complex_ld();
  return {static_cast<double>(z.real()), static_cast<double>(z.imag())};
}

std::string ClosedFormValue::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [mu, c] : terms_) {
    if (!out.empty()) out += " + ";
    std::string cs = c.is_real() ? c.str() : "(" + c.str() + ")";
    if (mu.is_zero())
      out += cs;
    else
      out += cs + "*exp(" + mu.str() + ")";
  }
  return out;
}

}  // namespace deo
