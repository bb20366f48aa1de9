// Copyright 2026 The schurscope Authors
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#pragma once

#include <cstdint>

#include "schurscope/textio.hpp"

namespace schurscope {

QRatFunc power_function(unsigned n);

// D_n(a, X) with D_n(a, Z + a/Z) = Z^n + (a/Z)^n.
QRatFunc dickson(unsigned n, const ExactScalar& a);

// R_n(alpha, X) with alpha^2 = d, written over Q: the conjugate of X^n by
// (X - alpha)/(X + alpha). n odd, d a rational non-square.
QRatFunc redei(unsigned n, const Rational& d);

// R_3(sqrt(-3m), X).
QRatFunc redei_f(long m);
// f_{-1}(f_{-2}(f_2(X))): each factor is exceptional, the composite is not.
QRatFunc redei_composition();

// Predicted bijectivity of R_n(alpha, X) on P^1(F_p) for prime n and a good
// odd prime p. When d is a square mod p the map is conjugate to X^n on
// P^1(F_p); otherwise to X^n on the norm-one subgroup of F_{p^2}.
bool redei_bijectivity_predicate(unsigned n, const Rational& d, std::uint32_t p);

// (X^4 - 2pX^2 - 8qX + p^2) / (4(X^3 + pX + q)).
QRatFunc a4s4_function(const ExactScalar& p, const ExactScalar& q);
// f(X) - l = (X^2 - 2lX - 2l^2 - p)^2 / (4(X^3 + pX + q)) for a root l of the
// cubic, checked with l symbolic modulo l^3 + pl + q.
bool a4s4_branch_identity(const ExactScalar& p, const ExactScalar& q);

// X(11X^4 + 40X^3 + 10X^2 - 40X - 5) / (5X^2 - 1)^2
QRatFunc sporadic_degree5();
QPoly isogeny5_q1(const ExactScalar& constant = ExactScalar(-1));
QPoly isogeny5_q2();
// q2(f(X)) == q1(X) (f'(X)/5)^2
bool isogeny5_identity(const ExactScalar& q1_constant = ExactScalar(-1));

// The y-coordinate map of [3] + beta on Y^2 = X^3 + B over Q(sqrt(-3)),
// omega = (-1 + sqrt(-3))/2. The Y^2 coefficient is (459 + 216 omega) B^2;
// Printed uses 459 + 216 B^2 omega instead, which agrees only when B^2 = 1.
enum class Cm7Coefficient { Corrected, Printed };
QRatFunc cm7_function(const ExactScalar& B, Cm7Coefficient variant = Cm7Coefficient::Corrected);

// omega = (-1 + sqrt(-3))/2 as an exact scalar.
ExactScalar omega();

}  // namespace schurscope
