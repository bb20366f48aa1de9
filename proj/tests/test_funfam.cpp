// Copyright 2026 The schurscope Authors
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "schurscope/ellipt.hpp"
#include "schurscope/errors.hpp"
#include "schurscope/funfam.hpp"
#include "schurscope/ntheory.hpp"
#include "schurscope/projmap.hpp"

using namespace schurscope;

namespace {

QRatFunc Z() { return QRatFunc::x(ExactScalar(0)); }
QRatFunc K(const ExactScalar& c) { return QRatFunc::constant(c); }

double as_double(const Rational& r) { return r.get_d(); }

}  // namespace

TEST_CASE("dickson") {
  CHECK(dickson(1, 5) == Z());
  CHECK(dickson(3, 1) == parse_ratfunc("x^3 - 3*x"));
  for (long a : {1L, 3L, -2L}) CHECK(dickson(2, a) == parse_ratfunc("x^2 - " + std::to_string(2 * a)));
  CHECK_THROWS_AS(dickson(3, 0), PreconditionError);

  // D_n(a, Z + a/Z) = Z^n + (a/Z)^n
  for (ExactScalar a : {ExactScalar(1), ExactScalar(-3), ExactScalar(Rational(2, 5)), ExactScalar::sqrt_of(2)}) {
    QRatFunc w = Z() + K(a) / Z();
    for (unsigned n = 1; n <= 20; ++n) CHECK(compose(dickson(n, a), w) == Z().pow(n) + (K(a) / Z()).pow(n));
  }
  // D_m(a^n, D_n(a, X)) = D_mn(a, X)
  for (unsigned m = 1; m <= 4; ++m)
    for (unsigned n = 1; n <= 4; ++n) {
      ExactScalar a(3), an(1);
      for (unsigned i = 0; i < n; ++i) an = an * a;
      CHECK(compose(dickson(m, an), dickson(n, a)) == dickson(m * n, a));
    }
}

TEST_CASE("redei") {
  CHECK(redei(1, 3) == Z());
  CHECK(redei(3, 3) == parse_ratfunc("(x^3 + 9*x)/(3*x^2 + 3)"));
  CHECK(redei_f(-1) == redei(3, 3));
  CHECK_THROWS_AS(redei(3, 4), PreconditionError);
  CHECK_THROWS_AS(redei(3, Rational(9, 4)), PreconditionError);
  CHECK_THROWS_AS(redei(3, 0), PreconditionError);
  CHECK_THROWS_AS(redei(4, 3), PreconditionError);

  // oracle: conjugate X^n by (X - alpha)/(X + alpha) over Q(sqrt(d))
  for (long d : {3L, -1L, 2L, -7L}) {
    ExactScalar al = ExactScalar::sqrt_of(d);
    QRatFunc lam = (Z() - K(al)) / (Z() + K(al));
    QRatFunc laminv = K(al) * (K(1) + Z()) / (K(1) - Z());
    for (unsigned n : {1u, 3u, 5u, 7u}) CHECK(compose(laminv, compose(Z().pow(n), lam)) == redei(n, d));
  }
  for (unsigned m : {1u, 3u, 5u, 7u})
    for (unsigned n : {3u, 5u, 7u}) CHECK(compose(redei(m, 2), redei(n, 2)) == redei(m * n, 2));
}

TEST_CASE("redei bijectivity predicate") {
  for (std::uint32_t p : primes_up_to(500)) {
    if (p <= 3 || p == 7) continue;
    CHECK(redei_bijectivity_predicate(3, 3, p) == (p % 4 == 3));
    CHECK(redei_bijectivity_predicate(3, Rational(-7, 3), p) == (kronecker(7, p) == -1));
  }
  for (unsigned n : {3u, 5u, 7u})
    for (Rational d : {Rational(3), Rational(-1), Rational(2), Rational(5), Rational(-7, 3)}) {
      QRatFunc f = redei(n, d);
      for (std::uint32_t p : primes_up_to(500)) {
        if (p == 2 || p == n || p == 3 || p == 5 || p == 7) continue;
        bool pred = redei_bijectivity_predicate(n, d, p);
        CHECK(pred == is_bijective(reduce_mod_place(f, p)).bijective);
      }
    }
  CHECK_THROWS_AS(redei_bijectivity_predicate(9, 3, 11), PreconditionError);
  CHECK_THROWS_AS(redei_bijectivity_predicate(3, 3, 3), PreconditionError);
  CHECK_THROWS_AS(redei_bijectivity_predicate(5, 7, 7), PreconditionError);
}

TEST_CASE("redei composition is exceptional at no good prime") {
  QRatFunc f = redei_composition();
  CHECK(f.degree() == 27);
  SweepReport r = schur_sweep(f, 1000, "redei-composition");
  for (const auto& rec : r.records)
    if (rec.p > 5) CHECK(rec.verdict != Verdict::Bijective);
  CHECK(r.count(Verdict::NotBijective) > 100);
  // each factor alone is bijective at primes inert in its constants field
  for (long m : {-1L, -2L, 2L}) CHECK(schur_sweep(redei_f(m), 1000).density() > 0);
}

TEST_CASE("a4s4") {
  CHECK(a4s4_function(0, 2) == parse_ratfunc("(x^4 - 16*x)/(4*x^3 + 8)"));
  CHECK_THROWS_AS(a4s4_function(0, 0), PreconditionError);
  CHECK_THROWS_AS(a4s4_function(-3, 2), PreconditionError);  // x^3 - 3x + 2 = (x-1)^2 (x+2)
  for (auto [p, q] : std::vector<std::pair<long, long>>{{0, 2}, {1, 1}, {-7, 6}, {3, -5}})
    CHECK(a4s4_branch_identity(p, q));
  CHECK(a4s4_branch_identity(ExactScalar::sqrt_of(2), 1));
  CHECK(a4s4_function(-18, 1) == xmul_map(-18, 1, 2));

  // three finite branch points of type (2,2) where x^3 - 7x + 6 = (x-1)(x-2)(x+3) splits
  QRatFunc f = a4s4_function(-7, 6);
  for (std::uint32_t p : {11u, 13u, 101u}) {
    FqRatFunc fp = reduce_mod_place(f, p);
    FqField F = FqField::prime(p);
    std::vector<std::optional<FqElem>> pts{FqElem::from_signed(F, 1), FqElem::from_signed(F, 2),
                                           FqElem::from_signed(F, -3)};
    auto r = ramification_over(fp, pts);
    CHECK(r.branch_orders == std::vector<std::uint64_t>{2, 2, 2});
    CHECK(r.complete);
    for (const auto& t : pts) CHECK(fiber_multiplicities(fp, t) == std::vector<std::uint64_t>{2, 2});
    CHECK(fiber_multiplicities(fp, std::nullopt) == std::vector<std::uint64_t>{1, 1, 1, 1});
  }
}

TEST_CASE("sporadic degree 5") {
  QRatFunc f = sporadic_degree5();
  CHECK(f.degree() == 5);
  CHECK(isogeny5_identity());
  CHECK(!isogeny5_identity(ExactScalar(Rational(-11, 12))));
  CHECK(!isogeny5_identity(ExactScalar(0)));
}

TEST_CASE("cm7 function") {
  QRatFunc r = cm7_function(1);
  CHECK(r.num().degree() == 7);
  CHECK(r.den().degree() == 6);
  CHECK(cm7_function(1) == cm7_function(1, Cm7Coefficient::Printed));
  CHECK(!(cm7_function(2) == cm7_function(2, Cm7Coefficient::Printed)));
  CHECK_THROWS_AS(cm7_function(0), PreconditionError);
  ExactScalar w = omega();
  CHECK(w * w + w + ExactScalar(1) == ExactScalar(0));
}

TEST_CASE("sweep densities match the constants-field prediction") {
  struct Case {
    QRatFunc f;
    double expected;
  };
  std::vector<Case> cases{{sporadic_degree5(), 0.5},     {a4s4_function(0, 2), 1.0 / 3},
                          {dickson(5, 1), 0.5},           {dickson(3, 1), 0.0},
                          {redei_f(-1), 0.5},             {power_function(3), 0.5},
                          {power_function(2), 0.0}};
  for (const auto& c : cases) {
    SweepReport r = schur_sweep(c.f, 2000);
    CHECK(std::abs(as_double(r.density()) - c.expected) < 0.1);
  }
}
