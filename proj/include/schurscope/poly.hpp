// Copyright 2026 The schurscope Authors
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

// Dense univariate polynomials over an exact coefficient field T.
//
// T needs the field operators plus free functions from_int_like(proto, v) and
// is_zero(x). Each polynomial keeps a zero prototype so that constants can be
// created without a global context.

#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "schurscope/errors.hpp"

namespace schurscope {

namespace detail {
template <class T>
bool coeff_zero(const T& x) {
  return is_zero(x);  // found by argument-dependent lookup
}
}  // namespace detail

template <class T>
class Poly {
 public:
  Poly() = default;
  explicit Poly(T zero) : zero_(std::move(zero)) {}
  Poly(std::vector<T> coeffs, T zero) : c_(std::move(coeffs)), zero_(std::move(zero)) { trim(); }

  static Poly constant(const T& c) { return Poly(std::vector<T>{c}, from_int_like(c, 0)); }
  static Poly monomial(const T& c, int k) {
    std::vector<T> v(static_cast<std::size_t>(k) + 1, from_int_like(c, 0));
    v[k] = c;
    return Poly(std::move(v), from_int_like(c, 0));
  }
  // The polynomial X with the prototype's field.
  static Poly x(const T& proto) { return monomial(from_int_like(proto, 1), 1); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  const std::vector<T>& coeffs() const { return c_; }
  const T& zero() const { return zero_; }
  T coeff(int i) const { return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : zero_; }
  const T& lead() const {
    if (c_.empty()) throw PreconditionError("leading coefficient of zero polynomial");
    return c_.back();
  }
  T one() const { return from_int_like(zero_, 1); }

  Poly operator-() const {
    Poly r = *this;
    for (auto& a : r.c_) a = -a;
    return r;
  }
  friend Poly operator+(const Poly& x, const Poly& y) {
    Poly r(x.c_.size() >= y.c_.size() ? x : y);
    const Poly& s = x.c_.size() >= y.c_.size() ? y : x;
    for (std::size_t i = 0; i < s.c_.size(); ++i) r.c_[i] = r.c_[i] + s.c_[i];
    r.trim();
    return r;
  }
  friend Poly operator-(const Poly& x, const Poly& y) { return x + (-y); }
  friend Poly operator*(const Poly& x, const Poly& y) {
    if (x.is_zero() || y.is_zero()) return Poly(x.zero_);
    std::vector<T> r(x.c_.size() + y.c_.size() - 1, x.zero_);
    for (std::size_t i = 0; i < x.c_.size(); ++i) {
      if (detail::coeff_zero(x.c_[i])) continue;
      for (std::size_t j = 0; j < y.c_.size(); ++j) r[i + j] += x.c_[i] * y.c_[j];
    }
    return Poly(std::move(r), x.zero_);
  }
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  friend bool operator==(const Poly& x, const Poly& y) { return x.c_ == y.c_; }

  Poly scaled(const T& s) const {
    Poly r = *this;
    for (auto& a : r.c_) a = a * s;
    r.trim();
    return r;
  }
  Poly pow(unsigned e) const {
    Poly r = constant(one()), b = *this;
    while (e) {
      if (e & 1) r = r * b;
      e >>= 1;
      if (e) b = b * b;
    }
    return r;
  }

  // Quotient and remainder; the divisor's leading coefficient must be invertible.
  std::pair<Poly, Poly> divmod(const Poly& d) const {
    if (d.is_zero()) throw PreconditionError("polynomial division by zero");
    if (degree() < d.degree()) return {Poly(zero_), *this};
    std::vector<T> rem = c_;
    std::vector<T> q(c_.size() - d.c_.size() + 1, zero_);
    T li = one() / d.lead();
    for (int i = degree() - d.degree(); i >= 0; --i) {
      T f = rem[i + d.degree()] * li;
      if (detail::coeff_zero(f)) continue;
      q[i] = f;
      for (int j = 0; j <= d.degree(); ++j) rem[i + j] -= f * d.c_[j];
    }
    rem.resize(d.c_.size() - 1, zero_);
    return {Poly(std::move(q), zero_), Poly(std::move(rem), zero_)};
  }
  Poly operator%(const Poly& d) const { return divmod(d).second; }
  Poly operator/(const Poly& d) const { return divmod(d).first; }

  Poly monic() const { return is_zero() ? *this : scaled(one() / lead()); }

  T eval(const T& x) const {
    T r = zero_;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
    return r;
  }
  Poly derivative() const {
    if (c_.size() <= 1) return Poly(zero_);
    std::vector<T> r;
    r.reserve(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) r.push_back(c_[i] * from_int_like(zero_, static_cast<long>(i)));
    return Poly(std::move(r), zero_);
  }
  // this(g(X))
  Poly compose(const Poly& g) const {
    Poly r(zero_);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * g + constant(*it);
    return r;
  }
  // Maps every coefficient through fn into another coefficient ring.
  template <class U, class Fn>
  Poly<U> map(const U& zero, Fn fn) const {
    std::vector<U> r;
    r.reserve(c_.size());
    for (const auto& a : c_) r.push_back(fn(a));
    return Poly<U>(std::move(r), zero);
  }

 private:
  void trim() {
    while (!c_.empty() && detail::coeff_zero(c_.back())) c_.pop_back();
  }

  std::vector<T> c_;
  T zero_{};
};

// Monic gcd; gcd(0, 0) = 0.
template <class T>
Poly<T> gcd(Poly<T> a, Poly<T> b) {
  while (!b.is_zero()) {
    Poly<T> r = a % b;
    a = std::move(b);
    b = r.monic();
  }
  return a.monic();
}

}  // namespace schurscope
