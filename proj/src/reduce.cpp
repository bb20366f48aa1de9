// Copyright 2026 The schurscope Authors
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#include "schurscope/reduce.hpp"

#include <string>

namespace schurscope {

namespace {

long poly_tag(const QPoly& f, long tag) {
  for (const auto& c : f.coeffs()) {
    long t = c.field_tag();
    if (t == 0) continue;
    if (tag != 0 && t != tag) throw FieldMismatch("mixed quadratic fields in one function");
    tag = t;
  }
  return tag;
}

FqElem reduce_rational(const Rational& q, const FqField& F) {
  std::uint64_t p = F.p;
  std::uint64_t den = mpz_fdiv_ui(q.get_den_mpz_t(), p);
  if (den == 0) throw BadReduction("p=" + std::to_string(p) + " divides a coefficient denominator");
  std::uint64_t num = mpz_fdiv_ui(q.get_num_mpz_t(), p);
  return FqElem(F, mulmod(num, invmod(den, p), p));
}

}  // namespace

long field_tag(const QRatFunc& f) { return poly_tag(f.den(), poly_tag(f.num(), 0)); }

Place default_place(long d, std::uint32_t p) {
  if (p < 3 || !is_prime(p)) throw PreconditionError("place requires an odd prime, got " + std::to_string(p));
  Place pl;
  pl.d = d;
  if (d == 0) {
    pl.field = FqField::prime(p);
    pl.sqrt_d = FqElem(pl.field, 0);
    return pl;
  }
  std::uint64_t dm = mod_signed(d, p);
  if (dm == 0) throw RamifiedPlace("p=" + std::to_string(p) + " ramifies in Q(sqrt(" + std::to_string(d) + "))");
  std::uint64_t s;
  if (sqrt_mod(dm, p, s)) return split_place(d, p, s);
  // d = r * c^2 with r the fixed non-residue, so sqrt(d) = c * sqrt(r).
  pl.field = FqField::quadratic(p);
  std::uint64_t c2 = mulmod(dm, invmod(pl.field.r, p), p);
  std::uint64_t c;
  sqrt_mod(c2, p, c);
  pl.sqrt_d = FqElem(pl.field, 0, c);
  return pl;
}

Place split_place(long d, std::uint32_t p, std::uint64_t root) {
  if (mulmod(root, root, p) != mod_signed(d, p)) throw PreconditionError("not a square root of d mod p");
  Place pl;
  pl.d = d;
  pl.field = FqField::prime(p);
  pl.sqrt_d = FqElem(pl.field, root);
  return pl;
}

FqElem reduce_scalar(const ExactScalar& c, const Place& place) {
  FqElem a = reduce_rational(c.rational_part(), place.field);
  if (c.is_rational()) return a;
  if (c.field_tag() != place.d) throw FieldMismatch("scalar field does not match the place");
  return a + reduce_rational(c.sqrt_part(), place.field) * place.sqrt_d;
}

FqPoly reduce_poly(const QPoly& f, const Place& place) {
  FqElem zero(place.field, 0);
  return f.map(zero, [&](const ExactScalar& c) { return reduce_scalar(c, place); });
}

RatFunc<FqElem> reduce_mod_place(const QRatFunc& f, std::uint32_t p) {
  return reduce_mod_place(f, default_place(field_tag(f), p));
}

RatFunc<FqElem> reduce_mod_place(const QRatFunc& f, const Place& place) {
  FqPoly n = reduce_poly(f.num(), place);
  FqPoly d = reduce_poly(f.den(), place);
  std::string where = "p=" + std::to_string(place.field.p);
  if (d.is_zero()) throw BadReduction(where + ": denominator vanishes");
  if (std::max(n.degree(), d.degree()) != f.degree() && !(f.degree() == 0 && n.is_zero()))
    throw BadReduction(where + ": degree drops");
  if (n.degree() > 0 && d.degree() > 0 && gcd(n, d).degree() > 0)
    throw BadReduction(where + ": numerator and denominator acquire a common factor");
  return RatFunc<FqElem>(n, d);
}

}  // namespace schurscope
