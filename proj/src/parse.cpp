#include "deo/parse.hpp"

#include <cctype>
#include <string>
#include <vector>

#include "deo/errors.hpp"

namespace deo {

namespace {

std::string join(const std::vector<std::string>& items) {
  std::string out;
  for (const auto& s : items) {
    if (!out.empty()) out += ", ";
    out += s;
  }
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view src) : src_(src) {}

  ExpPoly parse() {
    ExpPoly e = expr();
    skip_ws();
    if (pos_ != src_.size()) fail({"'+'", "'-'", "'*'", "end of input"});
    return e;
  }

 private:
  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < src_.size() && src_[pos_] == c;
  }

  bool accept(char c) {
    if (peek(c)) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail({std::string("'") + c + "'"});
  }

  bool peek_digit() {
    skip_ws();
    return pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]));
  }

  bool accept_word(std::string_view w) {
    skip_ws();
    if (src_.substr(pos_, w.size()) == w) {
      pos_ += w.size();
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(std::vector<std::string> expected) {
    skip_ws();
    std::string found = pos_ < src_.size() ? std::string("'") + src_[pos_] + "'" : "end of input";
    throw ParseError(pos_, std::move(expected), found);
  }

  mpz_class uint_literal() {
    if (!peek_digit()) fail({"unsigned integer"});
    std::size_t start = pos_;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    return mpz_class(std::string(src_.substr(start, pos_ - start)), 10);
  }

  Rational rational_literal() {
    bool neg = accept('-');
    mpz_class num = uint_literal();
    mpz_class den = 1;
    if (accept('/')) {
      std::size_t at = pos_;
      den = uint_literal();
      if (den == 0) throw ParseError(at, {"nonzero denominator"}, "'0'");
    }
    Rational q(num, den);
    q.canonicalize();
    return neg ? Rational(-q) : q;
  }

  // [rational ['*']] 't'  inside exp/cos/sin
  Rational rate() {
    Rational r = 1;
    if (peek('-') || peek_digit()) {
      bool neg = accept('-');
      if (peek_digit()) {
        r = rational_literal();
        accept('*');
      }
      if (neg) r = -r;
    }
    if (!accept('t')) fail({"'t'", "rational"});
    return r;
  }

  ExpPoly factor() {
    if (accept('(')) {
      ExpPoly e = expr();
      expect(')');
      return e;
    }
    if (accept_word("exp")) {
      expect('(');
      Rational r = rate();
      expect(')');
      return ExpPoly::exp(ExactScalar(r));
    }
    if (accept_word("cos")) {
      expect('(');
      Rational r = rate();
      expect(')');
      return ExpPoly::cos(r);
    }
    if (accept_word("sin")) {
      expect('(');
      Rational r = rate();
      expect(')');
      return ExpPoly::sin(r);
    }
    if (accept('t')) {
      int m = 1;
      if (accept('^')) {
        mpz_class e = uint_literal();
        if (!e.fits_sint_p()) fail({"small exponent"});
        m = static_cast<int>(e.get_si());
      }
      return ExpPoly::term(1, m, 0);
    }
    if (peek_digit()) return ExpPoly::constant(ExactScalar(rational_literal()));
    fail({"rational", "'t'", "'exp('", "'cos('", "'sin('", "'('"});
  }

  ExpPoly term() {
    ExpPoly f = factor();
    while (accept('*')) f = f * factor();
    return f;
  }

  ExpPoly expr() {
    bool negate_first = false;
    if (accept('-'))
      negate_first = true;
    else
      accept('+');
    ExpPoly e = term();
    if (negate_first) e = -e;
    while (true) {
      if (accept('+'))
        e += term();
      else if (accept('-'))
        e -= term();
      else
        break;
    }
    return e;
  }

  std::string_view src_;
  std::size_t pos_ = 0;
};

}  // namespace

ParseError::ParseError(std::size_t position, std::vector<std::string> expected, const std::string& found)
    : Error("parse error at offset " + std::to_string(position) + ": expected one of {" + join(expected) +
            "}, found " + found),
      position_(position),
      expected_(std::move(expected)) {}

ExpPoly parse_expr(std::string_view src) { return Parser(src).parse(); }

}  // namespace deo
