// Copyright 2026 The schurscope Authors
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#include "schurscope/textio.hpp"

#include <cctype>

namespace schurscope {

std::string to_text(const QPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int k = 0; k <= p.degree(); ++k) {
    const ExactScalar& c = p.coeffs()[k];
    if (c.is_zero()) continue;
    std::string term;
    std::string mono = k == 0 ? "" : (k == 1 ? "x" : "x^" + std::to_string(k));
    if (k == 0) {
      term = c.str();
    } else if (c.is_one()) {
      term = mono;
    } else if (c == ExactScalar(-1)) {
      term = "-" + mono;
    } else {
      term = c.str() + "*" + mono;
    }
    if (out.empty()) {
      out = term;
    } else if (term[0] == '-') {
      out += " - " + term.substr(1);
    } else {
      out += " + " + term;
    }
  }
  return out;
}

std::string to_text(const QRatFunc& f) { return "(" + to_text(f.num()) + ") / (" + to_text(f.den()) + ")"; }

namespace {

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  QRatFunc parse_all() {
    QRatFunc v = expr();
    skip();
    if (i_ != s_.size()) fail("unexpected trailing input");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at offset " + std::to_string(i_) + " in '" + std::string(s_) + "'");
  }
  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool eat(char c) {
    skip();
    if (i_ < s_.size() && s_[i_] == c) {
      ++i_;
      return true;
    }
    return false;
  }
  std::string digits() {
    skip();
    std::size_t b = i_;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
    if (b == i_) fail("expected integer");
    return std::string(s_.substr(b, i_ - b));
  }

  QRatFunc expr() {
    QRatFunc v = term();
    for (;;) {
      if (eat('+'))
        v = v + term();
      else if (eat('-'))
        v = v - term();
      else
        return v;
    }
  }
  QRatFunc term() {
    QRatFunc v = unary();
    for (;;) {
      if (eat('*'))
        v = v * unary();
      else if (eat('/'))
        v = v / unary();
      else
        return v;
    }
  }
  QRatFunc unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return power();
  }
  QRatFunc power() {
    QRatFunc base = atom();
    if (!eat('^')) return base;
    std::string e = digits();
    if (e.size() > 4) fail("exponent too large");
    return base.pow(static_cast<unsigned>(std::stoul(e)));
  }
  QRatFunc atom() {
    skip();
    if (i_ >= s_.size()) fail("unexpected end of input");
    char c = s_[i_];
    if (c == '(') {
      ++i_;
      QRatFunc v = expr();
      if (!eat(')')) fail("expected ')'");
      return v;
    }
    if (c == 'x' || c == 'X') {
      ++i_;
      return QRatFunc::x(ExactScalar());
    }
    if (s_.substr(i_, 4) == "sqrt") {
      i_ += 4;
      if (!eat('(')) fail("expected '(' after sqrt");
      bool neg = eat('-');
      long d = std::stol(digits());
      if (!eat(')')) fail("expected ')'");
      return QRatFunc::constant(ExactScalar::sqrt_of(neg ? -d : d));
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return QRatFunc::constant(ExactScalar(Rational(BigInt(digits()))));
    fail(std::string("unexpected character '") + c + "'");
  }

  std::string_view s_;
  std::size_t i_ = 0;
};

}  // namespace

QRatFunc parse_ratfunc(std::string_view text) {
  try {
    return Parser(text).parse_all();
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(e.what());
  }
}

ExactScalar parse_scalar(std::string_view text) {
  QRatFunc f = parse_ratfunc(text);
  if (!f.is_constant()) throw ParseError("expected a constant: " + std::string(text));
  return f.num().coeff(0);
}

}  // namespace schurscope
