// Copyright 2026 The schurscope Authors
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#include "schurscope/gf.hpp"

#include "schurscope/errors.hpp"
#include "schurscope/ntheory.hpp"

namespace schurscope {

namespace {

// Multiplies the digit vector a by X modulo the monic polynomial with lower
// coefficients f (X^k = -sum f_i X^i).
std::uint32_t times_x(std::uint32_t a, const std::vector<std::uint32_t>& f, std::uint32_t p) {
  std::uint32_t k = static_cast<std::uint32_t>(f.size());
  std::vector<std::uint32_t> d(k + 1, 0);
  for (std::uint32_t i = 0; i < k; ++i) {
    d[i + 1] = a % p;
    a /= p;
  }
  std::uint32_t top = d[k];
  std::uint32_t out = 0, scale = 1;
  for (std::uint32_t i = 0; i < k; ++i) {
    std::uint32_t v = (d[i] + (p - f[i]) % p * top) % p;
    out += v * scale;
    scale *= p;
  }
  return out;
}

}  // namespace

GaloisField::GaloisField(std::uint32_t p, std::uint32_t k) : p_(p), k_(k) {
  if (!is_prime(p) || k == 0) throw PreconditionError("GF(p^k) needs p prime and k >= 1");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < k; ++i) q *= p;
  if (q > (1u << 22)) throw CapExceeded("field too large for table arithmetic");
  q_ = static_cast<std::uint32_t>(q);
  // Search monic polynomials of degree k for one whose root X is primitive.
  std::vector<std::uint32_t> f(k, 0);
  std::uint64_t tries = q;
  for (std::uint64_t c = 0; c < tries; ++c) {
    std::uint64_t t = c;
    for (std::uint32_t i = 0; i < k; ++i) {
      f[i] = t % p;
      t /= p;
    }
    if (f[0] == 0) continue;
    std::uint32_t x = k == 1 ? 0 : p;  // digit vector of X
    if (k == 1) {
      // GF(p): look for a primitive root directly
      x = static_cast<std::uint32_t>((p - f[0]) % p);
    }
    exp_.assign(q_ - 1, 0);
    log_.assign(q_, 0);
    std::vector<bool> seen(q_, false);
    std::uint32_t a = 1;
    bool ok = true;
    for (std::uint32_t e = 0; e + 1 < q_; ++e) {
      if (seen[a]) {
        ok = false;
        break;
      }
      seen[a] = true;
      exp_[e] = a;
      log_[a] = e;
      a = k == 1 ? static_cast<std::uint32_t>(std::uint64_t{a} * x % p) : times_x(a, f, p);
    }
    if (ok && a == 1) return;
  }
  throw Error("no primitive polynomial found");
}

std::uint32_t GaloisField::add(std::uint32_t a, std::uint32_t b) const {
  if (k_ == 1) return (a + b) % p_;
  std::uint32_t out = 0, scale = 1;
  for (std::uint32_t i = 0; i < k_; ++i) {
    out += ((a % p_ + b % p_) % p_) * scale;
    a /= p_;
    b /= p_;
    scale *= p_;
  }
  return out;
}

std::uint32_t GaloisField::neg(std::uint32_t a) const {
  std::uint32_t out = 0, scale = 1;
  for (std::uint32_t i = 0; i < k_; ++i) {
    out += ((p_ - a % p_) % p_) * scale;
    a /= p_;
    scale *= p_;
  }
  return out;
}

std::uint32_t GaloisField::inv(std::uint32_t a) const {
  if (a == 0) throw PreconditionError("inverse of zero in GF(q)");
  return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

std::uint32_t GaloisField::pow(std::uint32_t a, std::uint64_t e) const {
  if (e == 0) return 1;
  if (a == 0) return 0;
  return exp_[(static_cast<unsigned __int128>(log_[a]) * e) % (q_ - 1)];
}

std::uint32_t GaloisField::frob(std::uint32_t a, std::uint32_t e) const {
  std::uint64_t pe = 1;
  for (std::uint32_t i = 0; i < e % k_; ++i) pe *= p_;
  return pow(a, pe);
}

std::uint32_t GaloisField::from_int(long v) const { return static_cast<std::uint32_t>(mod_signed(v, p_)); }

}  // namespace schurscope
