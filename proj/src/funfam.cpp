// Copyright 2026 The schurscope Authors
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#include "schurscope/funfam.hpp"

#include "schurscope/errors.hpp"
#include "schurscope/ntheory.hpp"

namespace schurscope {

namespace {

QPoly X() { return QPoly::x(ExactScalar(0)); }
QPoly C(const ExactScalar& c) { return QPoly::constant(c); }

bool is_rational_square(const Rational& d) {
  if (d < 0) return false;
  return mpz_perfect_square_p(d.get_num().get_mpz_t()) && mpz_perfect_square_p(d.get_den().get_mpz_t());
}

}  // namespace

ExactScalar omega() { return ExactScalar::quadratic(Rational(-1, 2), Rational(1, 2), -3); }

QRatFunc power_function(unsigned n) {
  if (n == 0) throw PreconditionError("power needs n >= 1");
  return QRatFunc(X().pow(n));
}

QRatFunc dickson(unsigned n, const ExactScalar& a) {
  if (n == 0) throw PreconditionError("dickson needs n >= 1");
  if (is_zero(a)) throw PreconditionError("dickson needs a != 0");
  QPoly prev = C(2), cur = X();
  for (unsigned k = 2; k <= n; ++k) {
    QPoly next = X() * cur - prev.scaled(a);
    prev = std::move(cur);
    cur = std::move(next);
  }
  return QRatFunc(cur);
}

QRatFunc redei(unsigned n, const Rational& d) {
  if (n == 0 || n % 2 == 0) throw PreconditionError("redei needs odd n >= 1");
  if (d == 0 || is_rational_square(d)) throw PreconditionError("redei needs d a nonzero non-square");
  // alpha((X+a)^n + (X-a)^n) / ((X+a)^n - (X-a)^n): even powers of alpha
  // go up, odd powers go down with one alpha cancelled.
  std::vector<ExactScalar> even(n + 1, ExactScalar(0)), odd(n + 1, ExactScalar(0));
  BigInt binom = 1;
  Rational dpow = 1;  // d^(k/2) or d^((k-1)/2)
  for (unsigned k = 0; k <= n; ++k) {
    if (k > 0) {
      binom = binom * (n - k + 1) / k;
      if (k % 2 == 0) dpow *= d;
    }
    Rational c = Rational(binom) * dpow;
    (k % 2 == 0 ? even : odd)[n - k] = ExactScalar(c);
  }
  return QRatFunc(QPoly(even, ExactScalar(0)), QPoly(odd, ExactScalar(0)));
}

QRatFunc redei_f(long m) { return redei(3, Rational(-3 * m)); }

QRatFunc redei_composition() { return compose(redei_f(-1), compose(redei_f(-2), redei_f(2))); }

bool redei_bijectivity_predicate(unsigned n, const Rational& d, std::uint32_t p) {
  if (!is_prime(n) || n == 2) throw PreconditionError("redei predicate needs an odd prime n");
  if (p == 2 || !is_prime(p)) throw PreconditionError("redei predicate needs an odd prime p");
  BigInt num = d.get_num(), den = d.get_den();
  if (p == n || mpz_divisible_ui_p(num.get_mpz_t(), p) || mpz_divisible_ui_p(den.get_mpz_t(), p))
    throw PreconditionError("p is a bad prime for this Redei function");
  BigInt nd = num * den;
  int k = kronecker(static_cast<long>(mpz_fdiv_ui(nd.get_mpz_t(), p)), p);
  std::uint64_t group = k == 1 ? p - 1 : std::uint64_t{p} + 1;
  return group % n != 0;
}

QRatFunc a4s4_function(const ExactScalar& p, const ExactScalar& q) {
  ExactScalar disc = ExactScalar(-4) * p * p * p - ExactScalar(27) * q * q;
  if (is_zero(disc)) throw PreconditionError("X^3 + pX + q is not separable");
  QPoly x = X();
  QPoly num = x.pow(4) - (x * x).scaled(2 * p) - x.scaled(8 * q) + C(p * p);
  QPoly den = (x.pow(3) + x.scaled(p) + C(q)).scaled(4);
  return QRatFunc(num, den);
}

bool a4s4_branch_identity(const ExactScalar& p, const ExactScalar& q) {
  // Coefficients in X are polynomials in l, reduced modulo l^3 + pl + q.
  using Coeffs = std::vector<QPoly>;
  QPoly l = X();
  QPoly cubic = l.pow(3) + l.scaled(p) + C(q);
  auto mul = [&](const Coeffs& u, const Coeffs& v) {
    Coeffs w(u.size() + v.size() - 1, C(0));
    for (std::size_t i = 0; i < u.size(); ++i)
      for (std::size_t j = 0; j < v.size(); ++j) w[i + j] = w[i + j] + u[i] * v[j];
    return w;
  };
  // numerator of f - l: X^4 - 2pX^2 - 8qX + p^2 - 4l(X^3 + pX + q)
  Coeffs lhs{C(p * p) - l.scaled(4 * q), C(-8 * q) - l.scaled(4 * p), C(-2 * p), l.scaled(-4), C(1)};
  Coeffs h{C(-p) - (l * l).scaled(2), l.scaled(-2), C(1)};
  Coeffs rhs = mul(h, h);
  for (std::size_t i = 0; i < std::max(lhs.size(), rhs.size()); ++i) {
    QPoly a = i < lhs.size() ? lhs[i] : C(0), b = i < rhs.size() ? rhs[i] : C(0);
    if (!((a - b) % cubic).is_zero()) return false;
  }
  return true;
}

QRatFunc sporadic_degree5() {
  QPoly x = X();
  QPoly num = x * (x.pow(4).scaled(11) + x.pow(3).scaled(40) + x.pow(2).scaled(10) - x.scaled(40) - C(5));
  QPoly d = x.pow(2).scaled(5) - C(1);
  return QRatFunc(num, d * d);
}

QPoly isogeny5_q1(const ExactScalar& constant) {
  QPoly x = X();
  return x.pow(3).scaled(11) - x.pow(2).scaled(5) - x.scaled(3) + C(constant);
}

QPoly isogeny5_q2() {
  QPoly x = X();
  return x.pow(3) - x.pow(2).scaled(5) + x.scaled(7) - C(1);
}

bool isogeny5_identity(const ExactScalar& q1_constant) {
  QRatFunc f = sporadic_degree5();
  QRatFunc lhs = compose(isogeny5_q2(), f);
  QRatFunc d = f.derivative() * QRatFunc::constant(Rational(1, 5));
  QRatFunc rhs = QRatFunc(isogeny5_q1(q1_constant)) * d * d;
  return lhs == rhs;
}

QRatFunc cm7_function(const ExactScalar& B, Cm7Coefficient variant) {
  if (is_zero(B)) throw PreconditionError("cm7 needs B != 0");
  const ExactScalar w = omega();
  QPoly y = X();
  ExactScalar c2 = variant == Cm7Coefficient::Corrected ? ExactScalar(459) + ExactScalar(216) * w
                                                        : ExactScalar(459) + ExactScalar(216) * B * B * w;
  QPoly inner = y.pow(6) + y.pow(4).scaled((ExactScalar(9) + ExactScalar(108) * w) * B) +
                y.pow(2).scaled(c2 * B * B) - C((ExactScalar(405) + ExactScalar(324) * w) * B * B * B);
  QPoly num = (inner * y).scaled(ExactScalar(1) - ExactScalar(18) * w);
  QPoly d = y.pow(2).scaled(7) - C((ExactScalar(3) - ExactScalar(12) * w) * B);
  return QRatFunc(num, d.pow(3));
}

}  // namespace schurscope
