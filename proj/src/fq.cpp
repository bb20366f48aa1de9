// Copyright 2026 The schurscope Authors
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#include "schurscope/fq.hpp"

#include "schurscope/errors.hpp"

namespace schurscope {

FqField FqField::quadratic(std::uint32_t p) {
  return FqField{p, static_cast<std::uint32_t>(smallest_nonresidue(p)), 2};
}

FqElem FqElem::inverse() const {
  if (is_zero()) throw PreconditionError("inverse of zero in F_q");
  std::uint64_t p = f_.p;
  if (f_.ext == 1) return FqElem(f_, invmod(a_, p));
  // (a + b s)^-1 = (a - b s) / (a^2 - r b^2)
  std::uint64_t n = (std::uint64_t{a_} * a_ % p + p - std::uint64_t{b_} * b_ % p * f_.r % p) % p;
  std::uint64_t ni = invmod(n, p);
  return FqElem(f_, std::uint64_t{a_} * ni % p, (p - b_) % p * ni % p);
}

FqElem FqElem::pow(std::uint64_t e) const {
  FqElem r(f_, 1), x = *this;
  while (e) {
    if (e & 1) r *= x;
    x *= x;
    e >>= 1;
  }
  return r;
}

std::string FqElem::str() const {
  if (f_.ext == 1) return std::to_string(a_);
  return std::to_string(a_) + "+" + std::to_string(b_) + "*s";
}

}  // namespace schurscope
