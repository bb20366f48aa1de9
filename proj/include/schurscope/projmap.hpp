// Copyright 2026 The schurscope Authors
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

// Rational functions acting on the projective line over F_q.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "schurscope/parallel.hpp"
#include "schurscope/reduce.hpp"

namespace schurscope {

inline constexpr std::uint64_t kDefaultPointCap = std::uint64_t{1} << 20;

struct ProjPoint {
  bool inf = false;
  FqElem v;

  static ProjPoint infinity() { return ProjPoint{true, FqElem()}; }
  static ProjPoint finite(const FqElem& x) { return ProjPoint{false, x}; }
  friend bool operator==(const ProjPoint& x, const ProjPoint& y) {
    return x.inf == y.inf && (x.inf || x.v == y.v);
  }
  std::string str() const { return inf ? "inf" : v.str(); }
};

// Points of P^1(F_q) are coded 0..q-1 for finite values and q for infinity.
inline std::uint64_t proj_code(const ProjPoint& x, std::uint64_t q) { return x.inf ? q : x.v.index(); }
inline ProjPoint proj_from_code(const FqField& F, std::uint64_t code) {
  return code == F.size() ? ProjPoint::infinity() : ProjPoint::finite(FqElem::from_index(F, code));
}

ProjPoint eval_proj(const FqRatFunc& f, const ProjPoint& x);

// Image codes of all q+1 points, in code order.
std::vector<std::uint32_t> image_codes(const FqRatFunc& f, Backend backend = Backend::Parallel);

struct Bijectivity {
  bool bijective = false;
  std::optional<std::pair<ProjPoint, ProjPoint>> witness;  // two points with equal image
};

Bijectivity is_bijective(const FqRatFunc& f, std::uint64_t cap = kDefaultPointCap,
                         Backend backend = Backend::Parallel);

enum class Verdict { Bijective, NotBijective, BadReduction, Ramified, OverCap };
std::string verdict_name(Verdict v);

struct SweepRecord {
  std::uint32_t p = 0;
  int place_degree = 0;  // 0 when no place was formed
  Verdict verdict = Verdict::BadReduction;
};

struct SweepReport {
  std::string function;
  std::vector<SweepRecord> records;  // sorted by p

  std::size_t count(Verdict v) const;
  Rational density() const;  // bijective / (bijective + not-bijective), 0 if no good prime
  std::string density_str() const;
  std::string to_json() const;
};

SweepReport schur_sweep(const QRatFunc& f, std::uint32_t prime_bound, const std::string& name = "",
                        std::uint64_t cap = kDefaultPointCap, Backend backend = Backend::Parallel);

}  // namespace schurscope
