#include "deo/exppoly.hpp"

#include <cmath>

#include "deo/errors.hpp"

namespace deo {

ExpPoly ExpPoly::constant(const ExactScalar& c) { return term(c, 0, ExactScalar(0)); }

ExpPoly ExpPoly::term(const ExactScalar& coeff, int m, const ExactScalar& lambda) {
  if (m < 0) throw InvalidOrder("atom degree must be nonnegative");
  ExpPoly f;
  f.add_term(Atom{m, lambda}, coeff);
  return f;
}

ExpPoly ExpPoly::cos(const Rational& b) {
  ExactScalar half = ExactScalar::ratio(1, 2);
  return term(half, 0, ExactScalar(0, b)) + term(half, 0, ExactScalar(0, -b));
}

ExpPoly ExpPoly::sin(const Rational& b) {
  // (e^{ibt} - e^{-ibt}) / (2i)
  ExactScalar c(0, make_rational(-1, 2));
  return term(c, 0, ExactScalar(0, b)) + term(-c, 0, ExactScalar(0, -b));
}

void ExpPoly::add_term(const Atom& atom, const ExactScalar& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(atom, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

bool ExpPoly::is_real() const {
  for (const auto& [atom, c] : terms_) {
    auto it = terms_.find(Atom{atom.m, atom.lambda.conj()});
    if (it == terms_.end() || !(it->second == c.conj())) return false;
  }
  return true;
}

bool ExpPoly::antiderivable() const {
  for (const auto& [atom, c] : terms_)
    if (sgn(atom.lambda.re()) <= 0) return false;
  return true;
}

bool ExpPoly::is_single_exponential() const {
  return terms_.size() == 1 && terms_.begin()->first.m == 0;
}

ExpPoly ExpPoly::conj() const {
  ExpPoly out;
  for (const auto& [atom, c] : terms_) out.add_term(Atom{atom.m, atom.lambda.conj()}, c.conj());
  return out;
}

ExpPoly& ExpPoly::operator+=(const ExpPoly& o) {
  for (const auto& [atom, c] : o.terms_) add_term(atom, c);
  return *this;
}

ExpPoly& ExpPoly::operator-=(const ExpPoly& o) {
  for (const auto& [atom, c] : o.terms_) add_term(atom, -c);
  return *this;
}

ExpPoly& ExpPoly::operator*=(const ExactScalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [atom, coeff] : terms_) coeff *= c;
  return *this;
}

ExpPoly ExpPoly::operator-() const {
  ExpPoly out = *this;
  for (auto& [atom, coeff] : out.terms_) coeff = -coeff;
  return out;
}

ExpPoly operator*(const ExpPoly& a, const ExpPoly& b) {
  ExpPoly out;
  for (const auto& [x, cx] : a.terms_)
    for (const auto& [y, cy] : b.terms_) out.add_term(Atom{x.m + y.m, x.lambda + y.lambda}, cx * cy);
  return out;
}

ExpPoly add(const ExpPoly& f, const ExpPoly& g) { return f + g; }
ExpPoly mul(const ExpPoly& f, const ExpPoly& g) { return f * g; }

ExpPoly derivative(const ExpPoly& f) {
  ExpPoly out;
  for (const auto& [atom, c] : f.terms()) {
    if (atom.m > 0) out.add_term(Atom{atom.m - 1, atom.lambda}, c * ExactScalar(atom.m));
    out.add_term(atom, c * atom.lambda);
  }
  return out;
}

ExpPoly derivative(const ExpPoly& f, int order) {
  if (order < 0) throw InvalidOrder("derivative order must be nonnegative");
  ExpPoly out = f;
  for (int i = 0; i < order && !out.is_zero(); ++i) out = derivative(out);
  return out;
}

namespace {

// e^{lambda t} sum_j (-1)^j m!/(m-j)! t^{m-j} / lambda^{j+1}, lambda != 0.
void add_exponential_primitive(ExpPoly& out, const Atom& atom, const ExactScalar& c) {
  ExactScalar inv = ExactScalar(1) / atom.lambda;
  ExactScalar falling(1);  // m!/(m-j)!
  ExactScalar inv_pow = inv;
  for (int j = 0; j <= atom.m; ++j) {
    ExactScalar coeff = c * falling * inv_pow;
    if (j % 2 == 1) coeff = -coeff;
    out.add_term(Atom{atom.m - j, atom.lambda}, coeff);
    falling *= ExactScalar(atom.m - j);
    inv_pow *= inv;
  }
}

}  // namespace

ExpPoly antiderivative(const ExpPoly& f) {
  ExpPoly out;
  for (const auto& [atom, c] : f.terms()) {
    if (sgn(atom.lambda.re()) <= 0)
      throw NonIntegrableAtom("integral from -infinity diverges for atom " + to_string(atom) +
                              " (needs Re(lambda) > 0)");
    add_exponential_primitive(out, atom, c);
  }
  return out;
}

ExpPoly signed_derivative(const ExpPoly& f, int k) {
  if (k >= 0) return derivative(f, k);
  ExpPoly out = f;
  for (int i = 0; i < -k; ++i) out = antiderivative(out);
  return out;
}

ExpPoly primitive(const ExpPoly& f) {
  ExpPoly out;
  for (const auto& [atom, c] : f.terms()) {
    if (atom.lambda.is_zero())
      out.add_term(Atom{atom.m + 1, atom.lambda}, c / ExactScalar(atom.m + 1));
    else
      add_exponential_primitive(out, atom, c);
  }
  return out;
}

ExpPoly pow(const ExpPoly& f, int n) {
  if (n < 0) throw InvalidOrder("pow needs a nonnegative exponent; use recip_single_atom");
  ExpPoly result = ExpPoly::constant(1);
  ExpPoly base = f;
  while (n > 0) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return result;
}

ExpPoly recip_single_atom(const ExpPoly& f) {
  if (!f.is_single_exponential())
    throw NotReciprocable("1/f leaves the exp-poly algebra unless f = c e^{lambda t}; got " +
                          to_string(f));
  const auto& [atom, c] = *f.terms().begin();
  return ExpPoly::term(ExactScalar(1) / c, 0, -atom.lambda);
}

std::complex<long double> eval_complex(const ExpPoly& f, long double t) {
  std::complex<long double> sum = 0;
  for (const auto& [atom, c] : f.terms()) {
    std::complex<long double> v = c.to_complex_ld() * std::exp(atom.lambda.to_complex_ld() * t);
    if (atom.m > 0) v *= std::pow(t, static_cast<long double>(atom.m));
    sum += v;
  }
  return sum;
}

EvalResult eval(const ExpPoly& f, double t) {
  auto z = eval_complex(f, t);
  return {static_cast<double>(z.real()), static_cast<double>(z.imag())};
}

ClosedFormValue eval_exact(const ExpPoly& f, const Rational& t) {
  ClosedFormValue out;
  ExactScalar ts(t);
  for (const auto& [atom, c] : f.terms()) {
    ExactScalar coeff = c * pow(ts, static_cast<unsigned>(atom.m));
    out += ClosedFormValue::exp_term(coeff, atom.lambda * ts);
  }
  return out;
}

ClosedFormValue definite_integral(const ExpPoly& f, const Rational& a, const Rational& b) {
  if (a == b) return {};
  ExpPoly F = primitive(f);
  return eval_exact(F, b) - eval_exact(F, a);
}

std::string to_string(const Atom& a) {
  std::string out;
  if (a.m == 1)
    out = "t";
  else if (a.m > 1)
    out = "t^" + std::to_string(a.m);
  if (!a.lambda.is_zero()) {
    if (!out.empty()) out += "*";
    if (a.lambda == ExactScalar(1))
      out += "exp(t)";
    else if (a.lambda.is_real())
      out += "exp(" + a.lambda.str() + "*t)";
    else
      out += "exp((" + a.lambda.str() + ")*t)";
  }
  return out.empty() ? "1" : out;
}

std::string to_string(const ExpPoly& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (const auto& [atom, c] : f.terms()) {
    std::string basis = to_string(atom);
    std::string cs = c.str();
    bool negative = c.is_real() && sgn(c.re()) < 0;
    if (negative) cs = ExactScalar(-c).str();
    if (!c.is_real()) cs = "(" + cs + ")";
    std::string piece;
    if (basis == "1")
      piece = cs;
    else if (cs == "1")
      piece = basis;
    else
      piece = cs + "*" + basis;
    if (out.empty())
      out = negative ? "-" + piece : piece;
    else
      out += negative ? " - " + piece : " + " + piece;
  }
  return out;
}

}  // namespace deo
