// Copyright 2026 The schurscope Authors
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

// Word-size modular arithmetic and small number-theory helpers.

#pragma once

#include <cstdint>
#include <vector>

namespace schurscope {

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p);
std::uint64_t invmod(std::uint64_t a, std::uint64_t p);  // p prime, a != 0 mod p

bool is_prime(std::uint64_t n);
std::vector<std::uint32_t> primes_up_to(std::uint32_t bound);

// Kronecker symbol (a/n).
int kronecker(long a, long n);

// Smallest square root of a mod p in {0..p-1}; returns false if a is a non-residue.
bool sqrt_mod(std::uint64_t a, std::uint64_t p, std::uint64_t& root);

std::uint64_t smallest_nonresidue(std::uint64_t p);

// a mod p in {0..p-1} for signed a.
inline std::uint64_t mod_signed(long long a, std::uint64_t p) {
  long long r = a % static_cast<long long>(p);
  return static_cast<std::uint64_t>(r < 0 ? r + static_cast<long long>(p) : r);
}

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);
std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b);
std::vector<std::uint64_t> prime_factors(std::uint64_t n);
bool is_squarefree(long d);

}  // namespace schurscope
