// Copyright 2026 The schurscope Authors
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#include "schurscope/scalar.hpp"

#include "schurscope/errors.hpp"
#include "schurscope/ntheory.hpp"

namespace schurscope {

ExactScalar ExactScalar::quadratic(const Rational& a, const Rational& b, long d) {
  if (d == 1 || !is_squarefree(d))
    throw PreconditionError("quadratic field tag must be square-free and != 1: " + std::to_string(d));
  ExactScalar x;
  x.a_ = a;
  x.b_ = b;
  x.a_.canonicalize();
  x.b_.canonicalize();
  x.d_ = d;
  x.demote();
  return x;
}

long ExactScalar::common_tag(long d1, long d2) {
  if (d1 == 0) return d2;
  if (d2 == 0 || d1 == d2) return d1;
  throw FieldMismatch("field tags sqrt(" + std::to_string(d1) + ") and sqrt(" + std::to_string(d2) +
                      ") do not mix");
}

void ExactScalar::demote() {
  if (b_ == 0) d_ = 0;
}

ExactScalar ExactScalar::operator-() const {
  ExactScalar r = *this;
  r.a_ = -r.a_;
  r.b_ = -r.b_;
  return r;
}

ExactScalar& ExactScalar::operator+=(const ExactScalar& o) {
  d_ = common_tag(d_, o.d_);
  a_ += o.a_;
  b_ += o.b_;
  demote();
  return *this;
}

ExactScalar& ExactScalar::operator-=(const ExactScalar& o) {
  d_ = common_tag(d_, o.d_);
  a_ -= o.a_;
  b_ -= o.b_;
  demote();
  return *this;
}

ExactScalar& ExactScalar::operator*=(const ExactScalar& o) {
  long d = common_tag(d_, o.d_);
  if (d == 0) {
    a_ *= o.a_;
  } else {
    Rational na = a_ * o.a_ + b_ * o.b_ * d;
    Rational nb = a_ * o.b_ + b_ * o.a_;
    a_ = na;
    b_ = nb;
  }
  d_ = d;
  demote();
  return *this;
}

ExactScalar& ExactScalar::operator/=(const ExactScalar& o) { return *this *= o.inverse(); }

ExactScalar ExactScalar::inverse() const {
  if (is_zero()) throw PreconditionError("division by zero scalar");
  if (d_ == 0) {
    ExactScalar r;
    r.a_ = 1 / a_;
    return r;
  }
  Rational n = norm();
  ExactScalar r;
  r.a_ = a_ / n;
  r.b_ = -b_ / n;
  r.d_ = d_;
  return r;
}

ExactScalar ExactScalar::conj() const {
  ExactScalar r = *this;
  r.b_ = -r.b_;
  return r;
}

Rational ExactScalar::norm() const { return a_ * a_ - b_ * b_ * d_; }

std::string rational_str(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string ExactScalar::str() const {
  if (d_ == 0) return rational_str(a_);
  std::string root = "sqrt(" + std::to_string(d_) + ")";
  std::string s;
  if (b_ == 1) {
    s = root;
  } else if (b_ == -1) {
    s = "-" + root;
  } else {
    s = rational_str(b_) + "*" + root;
  }
  if (a_ == 0) return "(" + s + ")";
  if (s[0] == '-') return "(" + rational_str(a_) + " - " + s.substr(1) + ")";
  return "(" + rational_str(a_) + " + " + s + ")";
}

}  // namespace schurscope
