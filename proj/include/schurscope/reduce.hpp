// Copyright 2026 The schurscope Authors
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

// Reduction of exact rational functions at a prime.

#pragma once

#include <cstdint>

#include "schurscope/fq.hpp"
#include "schurscope/textio.hpp"

namespace schurscope {

using FqPoly = Poly<FqElem>;
using FqRatFunc = RatFunc<FqElem>;

// A place of Q or Q(sqrt d) above an odd prime p: the residue field and the
// image of sqrt(d) in it.
struct Place {
  long d = 0;  // 0 for Q
  FqField field;
  FqElem sqrt_d;

  int degree() const { return field.ext; }
};

// Field tag shared by all coefficients of f (0 if f is defined over Q).
long field_tag(const QRatFunc& f);

// Default place: for d a square mod p, sqrt(d) maps to its smallest root in
// {1..p-1}; otherwise the residue field is F_p^2 = F_p[sqrt r].
// Throws RamifiedPlace if p | 2d.
Place default_place(long d, std::uint32_t p);
// Split place with an explicit root s of d mod p.
Place split_place(long d, std::uint32_t p, std::uint64_t root);

FqElem reduce_scalar(const ExactScalar& c, const Place& place);  // throws BadReduction
FqPoly reduce_poly(const QPoly& f, const Place& place);

RatFunc<FqElem> reduce_mod_place(const QRatFunc& f, std::uint32_t p);
RatFunc<FqElem> reduce_mod_place(const QRatFunc& f, const Place& place);

}  // namespace schurscope
