// Copyright 2026 The schurscope Authors
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

// Rational functions num/den with coprime parts and monic denominator.

#pragma once

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "schurscope/poly.hpp"

namespace schurscope {

template <class T>
class RatFunc {
 public:
  RatFunc() = default;
  // Normalizes: cancels the gcd and makes the denominator monic.
  RatFunc(Poly<T> num, Poly<T> den) {
    if (den.is_zero()) throw PreconditionError("zero denominator");
    if (num.is_zero()) {
      num_ = num;
      den_ = Poly<T>::constant(den.one());
      return;
    }
    if (den.degree() > 0 && num.degree() > 0) {
      Poly<T> g = gcd(num, den);
      if (g.degree() > 0) {
        num = num / g;
        den = den / g;
      }
    }
    T li = den.one() / den.lead();
    num_ = num.scaled(li);
    den_ = den.scaled(li);
  }
  explicit RatFunc(Poly<T> num) : RatFunc(num, Poly<T>::constant(num.one())) {}
  static RatFunc constant(const T& c) { return RatFunc(Poly<T>::constant(c)); }
  static RatFunc x(const T& proto) { return RatFunc(Poly<T>::x(proto)); }

  const Poly<T>& num() const { return num_; }
  const Poly<T>& den() const { return den_; }
  int degree() const { return std::max(std::max(num_.degree(), den_.degree()), 0); }
  bool is_polynomial() const { return den_.degree() == 0; }
  bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }
  T zero() const { return den_.zero(); }

  friend RatFunc operator+(const RatFunc& f, const RatFunc& g) {
    if (f.den_ == g.den_) return RatFunc(f.num_ + g.num_, f.den_);
    return RatFunc(f.num_ * g.den_ + g.num_ * f.den_, f.den_ * g.den_);
  }
  friend RatFunc operator-(const RatFunc& f, const RatFunc& g) { return f + (-g); }
  RatFunc operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
  }
  friend RatFunc operator*(const RatFunc& f, const RatFunc& g) {
    return RatFunc(f.num_ * g.num_, f.den_ * g.den_);
  }
  friend RatFunc operator/(const RatFunc& f, const RatFunc& g) {
    if (g.num_.is_zero()) throw PreconditionError("division by the zero function");
    return RatFunc(f.num_ * g.den_, f.den_ * g.num_);
  }
  friend bool operator==(const RatFunc& f, const RatFunc& g) { return f.num_ == g.num_ && f.den_ == g.den_; }

  RatFunc pow(unsigned e) const {
    RatFunc r;
    r.num_ = num_.pow(e);
    r.den_ = den_.pow(e);
    return r;
  }
  RatFunc derivative() const {
    return RatFunc(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
  }
  // Value at a finite point, or nullopt at a pole.
  std::optional<T> eval(const T& x) const {
    T d = den_.eval(x);
    if (detail::coeff_zero(d)) return std::nullopt;
    return num_.eval(x) / d;
  }

 private:
  Poly<T> num_;
  Poly<T> den_;
};

// f(g(X)); the numerator and denominator of f are homogenized to degree deg f.
template <class T>
RatFunc<T> compose(const RatFunc<T>& f, const RatFunc<T>& g) {
  int n = f.degree();
  const Poly<T>& P = g.num();
  const Poly<T>& Q = g.den();
  std::vector<Poly<T>> pp{Poly<T>::constant(P.one())}, qq{Poly<T>::constant(P.one())};
  for (int i = 1; i <= n; ++i) {
    pp.push_back(pp.back() * P);
    qq.push_back(qq.back() * Q);
  }
  auto hom = [&](const Poly<T>& h) {
    Poly<T> r(P.zero());
    for (int i = 0; i <= h.degree(); ++i) r += (pp[i] * qq[n - i]).scaled(h.coeff(i));
    return r;
  };
  return RatFunc<T>(hom(f.num()), hom(f.den()));
}

// Polynomial p evaluated at a rational function.
template <class T>
RatFunc<T> compose(const Poly<T>& p, const RatFunc<T>& g) {
  return compose(RatFunc<T>(p), g);
}

}  // namespace schurscope
