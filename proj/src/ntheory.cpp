// Copyright 2026 The schurscope Authors
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#include "schurscope/ntheory.hpp"

#include <gmpxx.h>

#include <numeric>

#include "schurscope/errors.hpp"

namespace schurscope {

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t p) {
  a %= p;
  if (a == 0) throw PreconditionError("inverse of zero mod p");
  return powmod(a, p - 2, p);
}

bool is_prime(std::uint64_t n) {
  mpz_class z;
  mpz_import(z.get_mpz_t(), 1, -1, sizeof(n), 0, 0, &n);
  return mpz_probab_prime_p(z.get_mpz_t(), 30) > 0;
}

std::vector<std::uint32_t> primes_up_to(std::uint32_t bound) {
  std::vector<std::uint32_t> out;
  if (bound < 2) return out;
  std::vector<bool> composite(bound + 1, false);
  for (std::uint64_t i = 2; i <= bound; ++i) {
    if (composite[i]) continue;
    out.push_back(static_cast<std::uint32_t>(i));
    for (std::uint64_t j = i * i; j <= bound; j += i) composite[j] = true;
  }
  return out;
}

int kronecker(long a, long n) {
  return mpz_si_kronecker(a, mpz_class(n).get_mpz_t());
}

bool sqrt_mod(std::uint64_t a, std::uint64_t p, std::uint64_t& root) {
  a %= p;
  if (a == 0) {
    root = 0;
    return true;
  }
  if (p == 2) {
    root = a;
    return true;
  }
  if (powmod(a, (p - 1) / 2, p) != 1) return false;
  // Tonelli-Shanks
  std::uint64_t q = p - 1, s = 0;
  while ((q & 1) == 0) {
    q >>= 1;
    ++s;
  }
  std::uint64_t z = smallest_nonresidue(p);
  std::uint64_t m = s, c = powmod(z, q, p), t = powmod(a, q, p), r = powmod(a, (q + 1) / 2, p);
  while (t != 1) {
    std::uint64_t i = 0, tt = t;
    while (tt != 1) {
      tt = mulmod(tt, tt, p);
      ++i;
    }
    std::uint64_t b = c;
    for (std::uint64_t j = 0; j + i + 1 < m; ++j) b = mulmod(b, b, p);
    m = i;
    c = mulmod(b, b, p);
    t = mulmod(t, c, p);
    r = mulmod(r, b, p);
  }
  root = std::min(r, p - r);
  return true;
}

std::uint64_t smallest_nonresidue(std::uint64_t p) {
  for (std::uint64_t z = 2; z < p; ++z)
    if (powmod(z, (p - 1) / 2, p) == p - 1) return z;
  throw PreconditionError("no quadratic non-residue");
}

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }
std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b) { return std::lcm(a, b); }

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

bool is_squarefree(long d) {
  if (d == 0) return false;
  unsigned long n = d < 0 ? -static_cast<unsigned long>(d) : d;
  for (unsigned long k = 2; k * k <= n; ++k)
    if (n % (k * k) == 0) return false;
  return true;
}

}  // namespace schurscope
