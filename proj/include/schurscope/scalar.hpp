// Copyright 2026 The schurscope Authors
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

// Exact scalars: rationals and elements a + b*sqrt(d) of a quadratic field.

#pragma once

#include <gmpxx.h>

#include <string>

namespace schurscope {

using Rational = mpq_class;
using BigInt = mpz_class;

// Rational numbers carry no field tag (tag 0) and combine with any quadratic
// field. An element with vanishing sqrt part is stored as a plain rational.
class ExactScalar {
 public:
  ExactScalar() = default;
  ExactScalar(long v) : a_(v) {}  // NOLINT(google-explicit-constructor)
  ExactScalar(const Rational& q) : a_(q) { a_.canonicalize(); }  // NOLINT
  static ExactScalar quadratic(const Rational& a, const Rational& b, long d);
  static ExactScalar sqrt_of(long d) { return quadratic(0, 1, d); }

  bool is_rational() const { return d_ == 0; }
  bool is_zero() const { return d_ == 0 && a_ == 0; }
  bool is_one() const { return d_ == 0 && a_ == 1; }
  long field_tag() const { return d_; }
  const Rational& rational_part() const { return a_; }
  const Rational& sqrt_part() const { return b_; }

  ExactScalar operator-() const;
  ExactScalar& operator+=(const ExactScalar& o);
  ExactScalar& operator-=(const ExactScalar& o);
  ExactScalar& operator*=(const ExactScalar& o);
  ExactScalar& operator/=(const ExactScalar& o);
  friend ExactScalar operator+(ExactScalar x, const ExactScalar& y) { return x += y; }
  friend ExactScalar operator-(ExactScalar x, const ExactScalar& y) { return x -= y; }
  friend ExactScalar operator*(ExactScalar x, const ExactScalar& y) { return x *= y; }
  friend ExactScalar operator/(ExactScalar x, const ExactScalar& y) { return x /= y; }
  friend bool operator==(const ExactScalar& x, const ExactScalar& y) {
    return x.d_ == y.d_ && x.a_ == y.a_ && x.b_ == y.b_;
  }

  ExactScalar inverse() const;
  ExactScalar conj() const;
  Rational norm() const;
  std::string str() const;

 private:
  static long common_tag(long d1, long d2);
  void demote();

  Rational a_{0};
  Rational b_{0};
  long d_ = 0;
};

// Coefficient-ring hooks used by the polynomial templates.
inline ExactScalar from_int_like(const ExactScalar&, long v) { return ExactScalar(v); }
inline bool is_zero(const ExactScalar& x) { return x.is_zero(); }

std::string rational_str(const Rational& q);

}  // namespace schurscope
