// Copyright 2026 The schurscope Authors
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

// Residue fields F_p and F_p^2 = F_p[sqrt(r)], r a fixed non-residue.

#pragma once

#include <cstdint>
#include <string>

#include "schurscope/ntheory.hpp"

namespace schurscope {

struct FqField {
  std::uint32_t p = 0;
  std::uint32_t r = 0;  // non-residue for ext == 2, else 0
  std::uint8_t ext = 1;

  static FqField prime(std::uint32_t p) { return FqField{p, 0, 1}; }
  static FqField quadratic(std::uint32_t p);  // r = smallest non-residue
  std::uint64_t size() const { return ext == 1 ? p : std::uint64_t{p} * p; }
  friend bool operator==(const FqField&, const FqField&) = default;
};

// Elements carry their field parameters by value so they need no context.
class FqElem {
 public:
  FqElem() = default;
  FqElem(const FqField& f, std::uint64_t a, std::uint64_t b = 0)
      : f_(f), a_(static_cast<std::uint32_t>(a % f.p)), b_(f.ext == 2 ? static_cast<std::uint32_t>(b % f.p) : 0) {}
  static FqElem from_signed(const FqField& f, long long a) { return FqElem(f, mod_signed(a, f.p)); }

  const FqField& field() const { return f_; }
  std::uint32_t a() const { return a_; }
  std::uint32_t b() const { return b_; }
  bool is_zero() const { return a_ == 0 && b_ == 0; }
  bool is_one() const { return a_ == 1 && b_ == 0; }
  // Index in {0..q-1}: a + b*p.
  std::uint64_t index() const { return a_ + std::uint64_t{b_} * f_.p; }
  static FqElem from_index(const FqField& f, std::uint64_t i) { return FqElem(f, i % f.p, i / f.p); }

  FqElem operator-() const { return FqElem(f_, a_ ? f_.p - a_ : 0, b_ ? f_.p - b_ : 0); }
  friend FqElem operator+(const FqElem& x, const FqElem& y) {
    const FqField& f = pick(x, y);
    return FqElem(f, std::uint64_t{x.a_} + y.a_, std::uint64_t{x.b_} + y.b_);
  }
  friend FqElem operator-(const FqElem& x, const FqElem& y) {
    const FqField& f = pick(x, y);
    return FqElem(f, std::uint64_t{x.a_} + f.p - y.a_, std::uint64_t{x.b_} + f.p - y.b_);
  }
  friend FqElem operator*(const FqElem& x, const FqElem& y) {
    const FqField& f = pick(x, y);
    std::uint64_t p = f.p;
    if (f.ext == 1) return FqElem(f, std::uint64_t{x.a_} * y.a_ % p);
    std::uint64_t bb = std::uint64_t{x.b_} * y.b_ % p * f.r % p;
    std::uint64_t a = (std::uint64_t{x.a_} * y.a_ + bb) % p;
    std::uint64_t b = (std::uint64_t{x.a_} * y.b_ + std::uint64_t{x.b_} * y.a_) % p;
    return FqElem(f, a, b);
  }
  friend FqElem operator/(const FqElem& x, const FqElem& y) { return x * y.inverse(); }
  FqElem& operator+=(const FqElem& o) { return *this = *this + o; }
  FqElem& operator-=(const FqElem& o) { return *this = *this - o; }
  FqElem& operator*=(const FqElem& o) { return *this = *this * o; }
  FqElem& operator/=(const FqElem& o) { return *this = *this / o; }
  friend bool operator==(const FqElem& x, const FqElem& y) { return x.a_ == y.a_ && x.b_ == y.b_; }

  FqElem inverse() const;
  FqElem pow(std::uint64_t e) const;
  std::string str() const;

 private:
  // A default-constructed element has p == 0 and acts as a field-agnostic zero.
  static const FqField& pick(const FqElem& x, const FqElem& y) { return x.f_.p ? x.f_ : y.f_; }

  FqField f_{};
  std::uint32_t a_ = 0;
  std::uint32_t b_ = 0;
};

inline FqElem from_int_like(const FqElem& proto, long v) { return FqElem::from_signed(proto.field(), v); }
inline bool is_zero(const FqElem& x) { return x.is_zero(); }

}  // namespace schurscope
