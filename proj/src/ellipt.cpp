// Copyright 2026 The schurscope Authors
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#include "schurscope/ellipt.hpp"

#include <algorithm>
#include <numeric>

#include "schurscope/ntheory.hpp"
#include "schurscope/projmap.hpp"

namespace schurscope {

namespace {

QPoly X() { return QPoly::x(ExactScalar(0)); }
QPoly C(const ExactScalar& c) { return QPoly::constant(c); }

void require_curve(const ExactScalar& a, const ExactScalar& b) {
  if (is_zero(EllCurve<ExactScalar>{a, b}.discriminant())) throw PreconditionError("singular curve");
}

// Writes f(x) = h(x^k); all exponents of numerator and denominator must share
// one residue class mod k (a common power of x cancels).
QRatFunc rewrite_in_power(const QRatFunc& f, int k) {
  auto residue = [&](const QPoly& p) {
    int r = -1;
    for (int i = 0; i <= p.degree(); ++i) {
      if (is_zero(p.coeff(i))) continue;
      if (r < 0) r = i % k;
      if (i % k != r) throw Error("descent failed: residual terms survive");
    }
    return r;
  };
  int rn = residue(f.num()), rd = residue(f.den());
  if (rn >= 0 && rn != rd) throw Error("descent failed: residual terms survive");
  int shift = (k - rd) % k;
  auto squash = [&](const QPoly& p) {
    std::vector<ExactScalar> c;
    for (int i = 0; i <= p.degree(); ++i) {
      int e = i + shift;
      if (e % k != 0) continue;
      c.resize(static_cast<std::size_t>(e / k) + 1, ExactScalar(0));
      c[static_cast<std::size_t>(e / k)] = p.coeff(i);
    }
    return QPoly(c, ExactScalar(0));
  };
  return QRatFunc(squash(f.num()), squash(f.den()));
}

}  // namespace

std::vector<EllPoint<FqElem>> affine_points(const EllCurve<FqElem>& E) {
  const FqField& F = E.a.field().p ? E.a.field() : E.b.field();
  if (F.ext != 1) throw PreconditionError("affine_points needs a prime field");
  std::vector<std::vector<std::uint32_t>> roots(F.p);
  for (std::uint32_t y = 0; y < F.p; ++y) roots[mulmod(y, y, F.p)].push_back(y);
  std::vector<EllPoint<FqElem>> out;
  for (std::uint32_t x = 0; x < F.p; ++x) {
    FqElem fx(F, x);
    FqElem r = fx * fx * fx + E.a * fx + E.b;
    for (auto y : roots[r.a()]) out.push_back(EllPoint<FqElem>::affine(fx, FqElem(F, y)));
  }
  return out;
}

QPoly DivPolySet::curve() const { return X().pow(3) + X().scaled(a) + C(b); }

DivPolySet division_polynomials(const ExactScalar& a, const ExactScalar& b, unsigned m) {
  if (m > kDivPolyCap) throw CapExceeded("division polynomial index exceeds the cap");
  require_curve(a, b);
  DivPolySet d{a, b, {}};
  const QPoly x = X();
  const QPoly F = d.curve(), F2 = F * F;
  auto& g = d.g;
  g.push_back(C(0));
  g.push_back(C(1));
  g.push_back(C(2));
  g.push_back(x.pow(4).scaled(3) + x.pow(2).scaled(6 * a) + x.scaled(12 * b) - C(a * a));
  g.push_back((x.pow(6) + x.pow(4).scaled(5 * a) + x.pow(3).scaled(20 * b) - x.pow(2).scaled(5 * a * a) -
               x.scaled(4 * a * b) - C(8 * b * b + a * a * a))
                  .scaled(4));
  for (unsigned n = 5; n <= m; ++n) {
    unsigned k = n / 2;
    if (n % 2 == 1) {
      // psi_{2k+1} = psi_{k+2} psi_k^3 - psi_{k-1} psi_{k+1}^3, with y^4 = F^2
      QPoly u = g[k + 2] * g[k].pow(3), v = g[k - 1] * g[k + 1].pow(3);
      g.push_back(k % 2 == 0 ? F2 * u - v : u - F2 * v);
    } else {
      // psi_{2k} = psi_k (psi_{k+2} psi_{k-1}^2 - psi_{k-2} psi_{k+1}^2) / 2y
      QPoly t = g[k + 2] * g[k - 1].pow(2) - g[k - 2] * g[k + 1].pow(2);
      g.push_back((g[k] * t).scaled(Rational(1, 2)));
    }
  }
  g.resize(std::max<std::size_t>(m + 1, 2));
  return d;
}

QRatFunc xmul_map(const ExactScalar& a, const ExactScalar& b, unsigned m) {
  if (m < 1) throw PreconditionError("m must be positive");
  if (m == 1) return QRatFunc(X());
  DivPolySet d = division_polynomials(a, b, m + 1);
  const QPoly F = d.curve();
  // x(mP) = x - psi_{m-1} psi_{m+1} / psi_m^2
  QPoly num = d.g[m - 1] * d.g[m + 1], den = d.g[m] * d.g[m];
  if (m % 2 == 1)
    num = num * F;
  else
    den = den * F;
  return QRatFunc(X()) - QRatFunc(num, den);
}

QRatFunc ymul_ratio(const ExactScalar& a, const ExactScalar& b, unsigned m) {
  if (m < 1) throw PreconditionError("m must be positive");
  if (m == 1) return QRatFunc::constant(ExactScalar(1));
  DivPolySet d = division_polynomials(a, b, 2 * m);
  // y(mP) = psi_{2m} / (2 psi_m^4) = y g_{2m} / (2 g_m^4 [F^2 for even m])
  QPoly den = d.g[m].pow(4).scaled(2);
  if (m % 2 == 0) den = den * d.curve().pow(2);
  return QRatFunc(d.g[2 * m], den);
}

QRatFunc quotient_descent(const ExactScalar& a, const ExactScalar& b, unsigned m, unsigned beta_order) {
  if (m < 2) throw PreconditionError("descent needs m >= 2");
  require_curve(a, b);
  QRatFunc R;
  switch (beta_order) {
    case 2:
      R = xmul_map(a, b, m);
      break;
    case 3:
    case 6: {
      if (!is_zero(a)) throw PreconditionError("orders 3 and 6 need a curve y^2 = x^3 + B");
      if (std::gcd(m, beta_order) != 1) throw PreconditionError("m must be prime to the automorphism order");
      // y(mP)/y(P) is invariant under x -> omega x; rewrite it through x^3 = y^2 - B
      QRatFunc r = rewrite_in_power(ymul_ratio(a, b, m), 3);
      QRatFunc u(X() * X() - C(b));
      QRatFunc R3 = QRatFunc(X()) * compose(r, u);
      R = beta_order == 3 ? R3 : rewrite_in_power(R3 * R3, 2);
      break;
    }
    case 4: {
      if (!is_zero(b)) throw PreconditionError("order 4 needs a curve y^2 = x^3 + Ax");
      if (m % 2 == 0) throw PreconditionError("m must be odd for order 4");
      QRatFunc F = xmul_map(a, b, m);
      QRatFunc minus_x(QPoly::constant(ExactScalar(-1)) * X());
      if (!(compose(F, minus_x) == QRatFunc::constant(ExactScalar(-1)) * F))
        throw Error("descent failed: x-multiplication map is not odd");
      R = rewrite_in_power(F * F, 2);
      break;
    }
    default:
      throw PreconditionError("automorphism order must be 2, 3, 4 or 6");
  }
  if (R.degree() != static_cast<int>(m * m)) throw Error("descent failed: degree is not m^2");
  return R;
}

FqElem descent_coordinate(unsigned beta_order, const EllPoint<FqElem>& P) {
  if (P.inf) throw PreconditionError("point at infinity");
  switch (beta_order) {
    case 2:
      return P.x;
    case 3:
      return P.y;
    case 4:
      return P.x * P.x;
    case 6:
      return P.y * P.y;
    default:
      throw PreconditionError("automorphism order must be 2, 3, 4 or 6");
  }
}

std::vector<std::optional<FqElem>> descent_branch_points(const ExactScalar& a, const ExactScalar& b, unsigned m,
                                                         unsigned beta_order, std::uint32_t p) {
  FqField F = FqField::prime(p);
  Place pl = default_place(0, p);
  FqElem A = reduce_scalar(a, pl), B = reduce_scalar(b, pl);
  std::vector<std::optional<FqElem>> out;
  auto need_sqrt = [&](const FqElem& v) {
    std::uint64_t r = 0;
    if (!sqrt_mod(v.a(), p, r)) throw PreconditionError("branch points are not rational over F_p");
    return FqElem(F, r);
  };
  switch (beta_order) {
    case 2: {
      // x-coordinates of the 2-torsion, plus infinity for odd m
      for (std::uint32_t x = 0; x < p; ++x) {
        FqElem e(F, x);
        if (is_zero(e * e * e + A * e + B)) out.emplace_back(e);
      }
      if (out.size() != 3) throw PreconditionError("branch points are not rational over F_p");
      if (m % 2 == 1) out.emplace_back(std::nullopt);
      break;
    }
    case 3: {
      FqElem s = need_sqrt(B);
      out = {s, -s, std::nullopt};
      break;
    }
    case 4:
      out = {FqElem(F, 0), -A, std::nullopt};
      break;
    case 6:
      out = {FqElem(F, 0), B, std::nullopt};
      break;
    default:
      throw PreconditionError("automorphism order must be 2, 3, 4 or 6");
  }
  return out;
}

namespace {

// Yun's squarefree decomposition; returns (degree of factor, multiplicity).
std::vector<std::pair<int, std::uint64_t>> squarefree_parts(FqPoly f) {
  std::vector<std::pair<int, std::uint64_t>> out;
  if (f.degree() <= 0) return out;
  f = f.monic();
  FqPoly a = gcd(f, f.derivative());
  FqPoly b = f / a, c = f.derivative() / a;
  FqPoly d = c - b.derivative();
  for (std::uint64_t i = 1; b.degree() > 0; ++i) {
    FqPoly ai = gcd(b, d);
    b = b / ai;
    c = d / ai;
    d = c - b.derivative();
    if (ai.degree() > 0) out.emplace_back(ai.degree(), i);
  }
  return out;
}

}  // namespace

std::vector<std::uint64_t> fiber_multiplicities(const FqRatFunc& f, const std::optional<FqElem>& t) {
  const int deg = f.degree();
  if (f.num().coeff(0).field().p != 0 && static_cast<int>(f.num().coeff(0).field().p) <= deg)
    throw PreconditionError("fiber multiplicities need p > degree");
  FqPoly g = t ? f.num() - f.den().scaled(*t) : f.den();
  std::vector<std::uint64_t> out;
  for (auto [k, e] : squarefree_parts(g))
    for (int i = 0; i < k; ++i) out.push_back(e);
  // the point at infinity
  int at_inf = t ? deg - g.degree() : f.num().degree() - f.den().degree();
  if (at_inf > 0) out.push_back(static_cast<std::uint64_t>(at_inf));
  std::sort(out.rbegin(), out.rend());
  return out;
}

RamificationCheck ramification_over(const FqRatFunc& f, const std::vector<std::optional<FqElem>>& points) {
  RamificationCheck out;
  for (const auto& t : points) {
    auto mult = fiber_multiplicities(f, t);
    std::uint64_t l = 1, s = 0;
    for (auto e : mult) {
      l = std::lcm(l, e);
      s += e - 1;
    }
    out.total += s;
    if (l > 1) out.branch_orders.push_back(l);
  }
  std::sort(out.branch_orders.begin(), out.branch_orders.end());
  out.complete = out.total == 2 * static_cast<std::uint64_t>(f.degree()) - 2;
  return out;
}

bool cm7_check(std::uint32_t p, const Rational& B, std::uint64_t root_beta, std::uint64_t root_formula,
               Cm7Coefficient variant) {
  if (!is_prime(p) || p % 3 != 1) throw PreconditionError("cm7 needs a prime p = 1 mod 3");
  if (p == 7) throw PreconditionError("cm7 needs p != 7");
  Place pl = split_place(-3, p, root_formula);
  FqElem Bp = reduce_scalar(ExactScalar(B), pl);
  if (is_zero(Bp)) throw PreconditionError("B vanishes mod p");
  FqField F = pl.field;
  Place pb = split_place(-3, p, root_beta);
  FqElem w = (FqElem(F, p - 1) + pb.sqrt_d) / FqElem(F, 2);
  FqRatFunc R = reduce_mod_place(cm7_function(ExactScalar(B), variant), pl);
  EllCurve<FqElem> E{FqElem(F, 0), Bp};
  for (const auto& P : affine_points(E)) {
    auto Q = point_add(E, point_mul(E, 3, P), EllPoint<FqElem>::affine(w * P.x, P.y));
    ProjPoint want = Q.inf ? ProjPoint::infinity() : ProjPoint::finite(Q.y);
    if (!(eval_proj(R, ProjPoint::finite(P.y)) == want)) return false;
  }
  return true;
}

bool verify_cm7(std::uint32_t p, const Rational& B) {
  if (!is_prime(p) || p % 3 != 1) throw PreconditionError("cm7 needs a prime p = 1 mod 3");
  std::uint64_t s = 0;
  sqrt_mod(p - 3, p, s);
  for (std::uint64_t r : {s, p - s})
    if (cm7_check(p, B, r, r)) return true;
  return false;
}

}  // namespace schurscope
