// Copyright 2026 The schurscope Authors
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

// Small Galois fields GF(p^k) with log tables, for building group actions.
// Elements are integers 0..q-1 read as base-p digit vectors of polynomials in
// a primitive root; 0 is zero and 1 is one.

#pragma once

#include <cstdint>
#include <vector>

namespace schurscope {

class GaloisField {
 public:
  GaloisField(std::uint32_t p, std::uint32_t k);

  std::uint32_t p() const { return p_; }
  std::uint32_t k() const { return k_; }
  std::uint32_t q() const { return q_; }
  std::uint32_t primitive() const { return exp_[1]; }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t neg(std::uint32_t a) const;
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg(b)); }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[(log_[a] + log_[b]) % (q_ - 1)];
  }
  std::uint32_t inv(std::uint32_t a) const;
  std::uint32_t div(std::uint32_t a, std::uint32_t b) const { return mul(a, inv(b)); }
  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const;
  // a^(p^e)
  std::uint32_t frob(std::uint32_t a, std::uint32_t e = 1) const;
  // primitive()^e
  std::uint32_t exp(std::uint64_t e) const { return exp_[e % (q_ - 1)]; }
  std::uint32_t log(std::uint32_t a) const { return log_[a]; }
  std::uint32_t from_int(long v) const;

 private:
  std::uint32_t p_, k_, q_;
  std::vector<std::uint32_t> exp_, log_;
};

}  // namespace schurscope
