// Copyright 2026 The schurscope Authors
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

// Text format for exact rational functions.
//
//   (c0 + c1*x + c3*x^3) / (d0 + x^2)
//
// Coefficients are integers, a/b, or (a/b + c/d*sqrt(D)). The parser accepts
// any arithmetic expression in x over these atoms; the printer emits the
// canonical form above, which parses back to the same value.

#pragma once

#include <string>
#include <string_view>

#include "schurscope/ratfunc.hpp"
#include "schurscope/scalar.hpp"

namespace schurscope {

using QPoly = Poly<ExactScalar>;
using QRatFunc = RatFunc<ExactScalar>;

std::string to_text(const QPoly& p);
std::string to_text(const QRatFunc& f);
QRatFunc parse_ratfunc(std::string_view text);
ExactScalar parse_scalar(std::string_view text);

}  // namespace schurscope
