// Copyright 2026 The schurscope Authors
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "schurscope/ellipt.hpp"
#include "schurscope/ntheory.hpp"
#include "schurscope/projmap.hpp"

using namespace schurscope;

namespace {

using FP = EllPoint<FqElem>;

EllCurve<FqElem> curve_mod(long a, long b, std::uint32_t p) {
  FqField F = FqField::prime(p);
  return {FqElem::from_signed(F, a), FqElem::from_signed(F, b)};
}

FP slow_mul(const EllCurve<FqElem>& E, long m, const FP& P) {
  FP acc = FP::infinity();
  for (long i = 0; i < m; ++i) acc = point_add(E, acc, P);
  return acc;
}

ProjPoint coord(unsigned order, const FP& P) {
  return P.inf ? ProjPoint::infinity() : ProjPoint::finite(descent_coordinate(order, P));
}

// R(psi(P)) == psi(mP) on every affine point of E(F_p).
bool descent_holds(const QRatFunc& R, long a, long b, unsigned m, unsigned order, std::uint32_t p) {
  FqRatFunc Rp = reduce_mod_place(R, p);
  auto E = curve_mod(a, b, p);
  for (const auto& P : affine_points(E))
    if (!(eval_proj(Rp, coord(order, P)) == coord(order, point_mul(E, m, P)))) return false;
  return true;
}

// Good primes above the degree where the branch points are rational.
std::vector<std::uint32_t> split_primes(long a, long b, unsigned m, unsigned order, std::size_t count) {
  std::vector<std::uint32_t> out;
  long disc = 4 * a * a * a + 27 * b * b;
  for (std::uint32_t p : primes_up_to(5000)) {
    if (p <= m * m || p <= 3 || disc % static_cast<long>(p) == 0) continue;
    try {
      descent_branch_points(a, b, m, order, p);
    } catch (const PreconditionError&) {
      continue;
    }
    out.push_back(p);
    if (out.size() == count) break;
  }
  return out;
}

}  // namespace

TEST_CASE("group law") {
  auto E = curve_mod(0, -2, 7);
  auto pts = affine_points(E);
  REQUIRE(!pts.empty());
  for (const auto& P : pts) {
    CHECK(point_add(E, P, FP::infinity()) == P);
    CHECK(point_add(E, P, point_neg(P)).inf);
    for (long m = 0; m <= 20; ++m) CHECK(point_mul(E, m, P) == slow_mul(E, m, P));
    CHECK(point_mul(E, -3, P) == point_neg(slow_mul(E, 3, P)));
  }
  FqField F7 = FqField::prime(7);
  CHECK_THROWS_AS(point_add(E, FP::affine(FqElem(F7, 1), FqElem(F7, 1)), pts[0]), PreconditionError);

  std::mt19937_64 rng(7);
  for (std::uint32_t p : {101u, 103u, 1009u}) {
    auto C = curve_mod(-18, 1, p);
    auto all = affine_points(C);
    for (int i = 0; i < 100; ++i) {
      const auto &P = all[rng() % all.size()], &Q = all[rng() % all.size()], &R = all[rng() % all.size()];
      CHECK(point_add(C, point_add(C, P, Q), R) == point_add(C, P, point_add(C, Q, R)));
      CHECK(point_add(C, P, Q) == point_add(C, Q, P));
    }
  }
}

TEST_CASE("division polynomials") {
  for (auto [a, b] : std::vector<std::pair<long, long>>{{-18, 1}, {2, 3}, {0, 5}, {1, 0}}) {
    DivPolySet d = division_polynomials(a, b, 9);
    CHECK(d.g[1] == QPoly::constant(ExactScalar(1)));
    CHECK(d.g[2] == QPoly::constant(ExactScalar(2)));
    CHECK(d.g[3] == parse_ratfunc("3*x^4 + " + std::to_string(6 * a) + "*x^2 + " + std::to_string(12 * b) +
                                  "*x - " + std::to_string(a * a))
                        .num());
    for (unsigned m = 1; m <= 9; ++m)
      CHECK(d.g[m].degree() == static_cast<int>(m % 2 ? (m * m - 1) / 2 : (m * m - 4) / 2));
    // kernel condition: psi_m(P) = 0 exactly when mP = O
    for (std::uint32_t p : {101u, 103u}) {
      auto E = curve_mod(a, b, p);
      Place pl = default_place(0, p);
      for (unsigned m = 2; m <= 7; ++m) {
        FqPoly gm = reduce_poly(d.g[m], pl);
        for (const auto& P : affine_points(E)) {
          bool zero = is_zero(gm.eval(P.x)) || (m % 2 == 0 && is_zero(P.y));
          CHECK(zero == point_mul(E, m, P).inf);
        }
      }
    }
  }
  CHECK_THROWS_AS(division_polynomials(1, 1, 31), CapExceeded);
  CHECK_THROWS_AS(division_polynomials(0, 0, 3), PreconditionError);

  // y^2 = x^3 + B: psi_5 / 5 in y has constant term +-3^6 B^4 / 5
  for (long B : {1L, 2L, 3L}) {
    DivPolySet d = division_polynomials(0, B, 5);
    QPoly g5 = d.g[5];
    ExactScalar at_y0(0), xcube(-B), pw(1);
    for (int i = 0; i <= g5.degree(); ++i) {
      if (i % 3 == 0) {
        ExactScalar t(1);
        for (int j = 0; j < i / 3; ++j) t = t * xcube;
        at_y0 = at_y0 + g5.coeff(i) * t;
      } else {
        CHECK(is_zero(g5.coeff(i)));
      }
    }
    at_y0 = at_y0 / ExactScalar(5);  // monic in y
    ExactScalar expect = ExactScalar(729 * B * B * B * B) / ExactScalar(5);
    CHECK((at_y0 == expect || at_y0 == ExactScalar(0) - expect));
  }
}

TEST_CASE("xmul_map") {
  for (auto [a, b] : std::vector<std::pair<long, long>>{{0, 2}, {-18, 1}, {1, 1}, {-7, 6}})
    CHECK(xmul_map(a, b, 2) == a4s4_function(a, b));
  CHECK(xmul_map(-18, 1, 3).degree() == 9);
  for (std::uint32_t p : {101u, 103u, 107u}) {
    auto E = curve_mod(-18, 1, p);
    FqRatFunc F = reduce_mod_place(xmul_map(-18, 1, 3), p);
    for (const auto& P : affine_points(E)) {
      auto Q = point_mul(E, 3, P);
      CHECK(eval_proj(F, ProjPoint::finite(P.x)) == (Q.inf ? ProjPoint::infinity() : ProjPoint::finite(Q.x)));
    }
  }
  for (std::uint32_t p : primes_up_to(101)) {
    if (p < 5 || p == 73) continue;  // 4(-18)^3 + 27 = -23301 = -3 * 7 * 7 * 7 * ...
    if ((4 * -18 * -18 * -18 + 27) % static_cast<long>(p) == 0) continue;
    auto E = curve_mod(-18, 1, p);
    for (unsigned m = 2; m <= 5; ++m) {
      if (p <= m * m) continue;
      FqRatFunc F = reduce_mod_place(xmul_map(-18, 1, m), p);
      FqRatFunc Y = reduce_mod_place(ymul_ratio(-18, 1, m), p);
      for (const auto& P : affine_points(E)) {
        auto Q = point_mul(E, m, P);
        CHECK(eval_proj(F, ProjPoint::finite(P.x)) == (Q.inf ? ProjPoint::infinity() : ProjPoint::finite(Q.x)));
        if (!Q.inf && !is_zero(P.y)) CHECK(eval_proj(Y, ProjPoint::finite(P.x)) == ProjPoint::finite(Q.y / P.y));
      }
    }
  }
}

TEST_CASE("quotient descents") {
  struct Case {
    long a, b;
    unsigned m, order;
    std::vector<std::uint64_t> type;
  };
  std::vector<Case> cases{
      {-18, 1, 3, 2, {2, 2, 2, 2}}, {-18, 1, 2, 2, {2, 2, 2}}, {0, 1, 2, 3, {3, 3, 3}},  {0, 2, 5, 3, {3, 3, 3}},
      {0, 1, 4, 3, {3, 3, 3}},      {1, 0, 3, 4, {2, 4, 4}},   {-2, 0, 5, 4, {2, 4, 4}}, {0, 1, 5, 6, {2, 3, 6}},
      {0, 3, 7, 6, {2, 3, 6}},
  };
  for (const auto& c : cases) {
    CAPTURE(c.a);
    CAPTURE(c.b);
    CAPTURE(c.m);
    CAPTURE(c.order);
    QRatFunc R = quotient_descent(c.a, c.b, c.m, c.order);
    CHECK(R.degree() == static_cast<int>(c.m * c.m));
    auto primes = split_primes(c.a, c.b, c.m, c.order, 3);
    REQUIRE(primes.size() == 3);
    for (auto p : primes) {
      CHECK(descent_holds(R, c.a, c.b, c.m, c.order, p));
      auto rc = ramification_over(reduce_mod_place(R, p), descent_branch_points(c.a, c.b, c.m, c.order, p));
      CHECK(rc.branch_orders == c.type);
      CHECK(rc.complete);
    }
  }
  for (long B : {1L, 2L, -5L})
    CHECK(quotient_descent(0, B, 2, 3) ==
          parse_ratfunc("(x^4 + " + std::to_string(18 * B) + "*x^2 - " + std::to_string(27 * B * B) + ")/(8*x^3)"));
  CHECK(quotient_descent(-7, 6, 2, 2) == a4s4_function(-7, 6));

  CHECK_THROWS_AS(quotient_descent(1, 1, 2, 3), PreconditionError);
  CHECK_THROWS_AS(quotient_descent(0, 1, 3, 3), PreconditionError);
  CHECK_THROWS_AS(quotient_descent(1, 1, 3, 4), PreconditionError);
  CHECK_THROWS_AS(quotient_descent(1, 0, 2, 4), PreconditionError);
  CHECK_THROWS_AS(quotient_descent(0, 1, 5, 5), PreconditionError);
  CHECK_THROWS_AS(quotient_descent(0, 1, 1, 2), PreconditionError);
}

TEST_CASE("order-2 m=3 map sweeps with positive density") {
  SweepReport r = schur_sweep(quotient_descent(-18, 1, 3, 2), 2000, "lattes3");
  CHECK(r.density() > 0);
  CHECK(r.count(Verdict::Bijective) > 10);
}

TEST_CASE("cm7") {
  for (std::uint32_t p : {13u, 31u, 61u}) {
    CHECK(verify_cm7(p));
    CHECK(verify_cm7(p, 2));
    std::uint64_t s = 0;
    REQUIRE(sqrt_mod(p - 3, p, s));
    CHECK(cm7_check(p, 2, s, s));
    CHECK(cm7_check(p, 2, p - s, p - s));
  }
  for (std::uint32_t p : {31u, 61u}) {
    std::uint64_t s = 0;
    sqrt_mod(p - 3, p, s);
    CHECK(!cm7_check(p, 1, s, p - s));  // mismatched omega
    CHECK(!cm7_check(p, 2, s, s, Cm7Coefficient::Printed));
    CHECK(!cm7_check(p, 2, p - s, p - s, Cm7Coefficient::Printed));
  }
  CHECK_THROWS_AS(verify_cm7(7), PreconditionError);
  CHECK_THROWS_AS(verify_cm7(11), PreconditionError);
  CHECK_THROWS_AS(verify_cm7(13, 13), PreconditionError);
}
