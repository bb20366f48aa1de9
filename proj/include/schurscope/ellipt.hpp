// Copyright 2026 The schurscope Authors
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#pragma once

#include <optional>
#include <vector>

#include "schurscope/errors.hpp"
#include "schurscope/funfam.hpp"
#include "schurscope/reduce.hpp"

namespace schurscope {

// Y^2 = X^3 + aX + b.
template <class T>
struct EllCurve {
  T a, b;
  T discriminant() const { return from_int_like(a, -16) * (from_int_like(a, 4) * a * a * a + from_int_like(a, 27) * b * b); }
};

template <class T>
struct EllPoint {
  bool inf = true;
  T x, y;
  static EllPoint infinity() { return EllPoint{}; }
  static EllPoint affine(T x, T y) { return EllPoint{false, std::move(x), std::move(y)}; }
  friend bool operator==(const EllPoint& p, const EllPoint& q) {
    return p.inf == q.inf && (p.inf || (p.x == q.x && p.y == q.y));
  }
};

template <class T>
bool on_curve(const EllCurve<T>& E, const EllPoint<T>& P) {
  return P.inf || P.y * P.y == P.x * P.x * P.x + E.a * P.x + E.b;
}

template <class T>
EllPoint<T> point_neg(const EllPoint<T>& P) {
  return P.inf ? P : EllPoint<T>::affine(P.x, -P.y);
}

template <class T>
EllPoint<T> point_add(const EllCurve<T>& E, const EllPoint<T>& P, const EllPoint<T>& Q) {
  if (!on_curve(E, P) || !on_curve(E, Q)) throw PreconditionError("point is not on the curve");
  if (P.inf) return Q;
  if (Q.inf) return P;
  T lambda;
  if (P.x == Q.x) {
    if (is_zero(P.y + Q.y)) return EllPoint<T>::infinity();
    lambda = (from_int_like(P.x, 3) * P.x * P.x + E.a) / (from_int_like(P.x, 2) * P.y);
  } else {
    lambda = (Q.y - P.y) / (Q.x - P.x);
  }
  T x3 = lambda * lambda - P.x - Q.x;
  T y3 = lambda * (P.x - x3) - P.y;
  return EllPoint<T>::affine(std::move(x3), std::move(y3));
}

template <class T>
EllPoint<T> point_mul(const EllCurve<T>& E, long long m, const EllPoint<T>& P) {
  EllPoint<T> base = m < 0 ? point_neg(P) : P, acc = EllPoint<T>::infinity();
  unsigned long long k = m < 0 ? 0ULL - static_cast<unsigned long long>(m) : static_cast<unsigned long long>(m);
  while (k) {
    if (k & 1) acc = point_add(E, acc, base);
    base = point_add(E, base, base);
    k >>= 1;
  }
  return acc;
}

// All affine points of E over a prime field.
std::vector<EllPoint<FqElem>> affine_points(const EllCurve<FqElem>& E);

// psi_m = g[m] for odd m and y * g[m] for even m; psi_2 = 2y.
struct DivPolySet {
  ExactScalar a, b;
  std::vector<QPoly> g;
  QPoly curve() const;  // X^3 + aX + b
};

inline constexpr unsigned kDivPolyCap = 30;

DivPolySet division_polynomials(const ExactScalar& a, const ExactScalar& b, unsigned m);

// x(mP) as a function of x(P), degree m^2.
QRatFunc xmul_map(const ExactScalar& a, const ExactScalar& b, unsigned m);
// y(mP) / y(P) as a function of x(P).
QRatFunc ymul_ratio(const ExactScalar& a, const ExactScalar& b, unsigned m);

// R with R(psi(P)) = psi(mP) for the quotient psi by an automorphism of
// order 2 (psi = x), 3 (psi = y, a = 0), 4 (psi = x^2, b = 0) or
// 6 (psi = y^2, a = 0).
QRatFunc quotient_descent(const ExactScalar& a, const ExactScalar& b, unsigned m, unsigned beta_order);

// The quotient coordinate psi(P) over F_p.
FqElem descent_coordinate(unsigned beta_order, const EllPoint<FqElem>& P);

// Branch points of the descent over F_p (nullopt = infinity); throws if
// they are not all rational over F_p.
std::vector<std::optional<FqElem>> descent_branch_points(const ExactScalar& a, const ExactScalar& b, unsigned m,
                                                         unsigned beta_order, std::uint32_t p);

// Multiplicities of the points above t (nullopt = infinity), via squarefree
// decomposition; needs p > degree.
std::vector<std::uint64_t> fiber_multiplicities(const FqRatFunc& f, const std::optional<FqElem>& t);

struct RamificationCheck {
  std::vector<std::uint64_t> branch_orders;  // lcm of multiplicities per point, sorted
  std::uint64_t total = 0;                   // sum of (e - 1) over the given points
  bool complete = false;                     // total == 2 deg - 2
};
RamificationCheck ramification_over(const FqRatFunc& f, const std::vector<std::optional<FqElem>>& points);

// y(([3] + beta)P) == R(y(P)) for every affine point of Y^2 = X^3 + B over F_p,
// with beta(x, y) = (omega x, y). root_beta and root_formula select the square
// roots of -3 mod p defining omega for beta and for R.
bool cm7_check(std::uint32_t p, const Rational& B, std::uint64_t root_beta, std::uint64_t root_formula,
               Cm7Coefficient variant = Cm7Coefficient::Corrected);
// True when some consistent choice of omega passes.
bool verify_cm7(std::uint32_t p, const Rational& B = 1);

}  // namespace schurscope
