// Copyright 2026 The schurscope Authors
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "schurscope/groups.hpp"
#include "schurscope/named.hpp"
#include "schurscope/parallel.hpp"

namespace schurscope {

// A triple (A, G, Omega) with G normal in A, both acting on Omega.
struct ExceptionalityVerdict {
  bool exceptional = false;
  std::size_t common_orbit_count = 0;  // the diagonal always counts
  // Lexicographically smallest off-diagonal pair in a common orbit.
  std::optional<std::pair<Point, Point>> witness;
};

ExceptionalityVerdict is_exceptional(const PermGroup& A, const PermGroup& G);

struct ArithVerdict {
  bool arithmetically_exceptional = false;
  std::optional<Perm> witness;  // x with <G, x> exceptional
  std::size_t cosets_tested = 0;
};

inline constexpr std::size_t kIndexCap = 1000;

// Tries B = <G, x> over coset representatives x of G in A.
ArithVerdict is_arithmetically_exceptional(const PermGroup& A, const PermGroup& G, std::size_t index_cap = kIndexCap,
                                           Backend backend = Backend::Parallel);

struct FixedPointCount {
  std::uint64_t direct = 0;
  std::uint64_t formula = 0;
};

// Fixed points of g, counted directly and as the sum of [C_G(g_i) : C_H(g_i)]
// over H-class representatives g_i of g^G meet H. H must be a point stabilizer.
FixedPointCount chi_fixed_points(const PermGroup& G, const PermGroup& H, const Perm& g,
                                 std::uint64_t cap = kEnumerationCap);

struct CosetAverage {
  Rational on_points;  // (1/|G|) sum of chi(xg)
  Rational on_pairs;   // (1/|G|) sum of chi(xg)^2: common orbits of (<G,x>, G) on pairs
  std::uint64_t min_fixed = 0;
  std::uint64_t max_fixed = 0;
};

// Averages over the coset xG. Exceptional iff on_pairs == 1.
CosetAverage coset_average_fixed_points(const PermGroup& G, const Perm& x, Backend backend = Backend::Parallel,
                                        std::uint64_t cap = kEnumerationCap);

// True iff sigma^m is A-conjugate to sigma for every m prime to its order.
bool class_is_rational_in(const PermGroup& A, const Perm& sigma, std::uint64_t cap = kEnumerationCap);

struct ExampleTriple {
  PermGroup A;
  PermGroup G;
  Perm x;                       // A = <G, x>
  std::vector<Perm> stabilizer;  // generators of the point stabilizer M in A
};

// G = L^t, x cycles the coordinates, acting on the cosets of <diagonal, x>.
ExampleTriple build_wreath_diagonal_example(const PermGroup& L, std::size_t t);

// Affine action on F_p^e: G = V.H, A = V.(H x <scalar of order r>).
ExampleTriple build_scalar_example(std::uint32_t p, std::uint32_t e, const std::vector<Matrix>& H, std::uint32_t r);

struct ExcompVerdicts {
  bool on_m = false;      // (A, G, A/M)
  bool on_u = false;      // (A, G, A/U)
  bool inner = false;     // (U, G meet U, U/M)
  bool consistent() const { return on_m == (on_u && inner); }
};

ExcompVerdicts excomp_decompose(const PermGroup& A, const PermGroup& G, const PermGroup& M, const PermGroup& U);

// Elements of order k in G whose cyclic subgroup has normalizer in A not contained in G.
struct NormalizerCheck {
  std::size_t elements = 0;  // elements of order k in G
  std::size_t escaping = 0;
};
NormalizerCheck cyclic_normalizers_escape(const PermGroup& A, const PermGroup& G, std::uint64_t k);

struct Deg16Report {
  struct Case {
    std::string name;
    std::uint64_t order = 0;
    bool cyclic = false;  // A/G cyclic; only these cases decide the verdict
    NormalizerCheck check;
  };
  std::vector<Case> cases;
  bool holds = false;
};

// Degree 16: G = C2^4 . D10 inside AGammaL1(16). For the overgroup A with
// A/G cyclic of order 3, normalizers of order-4 cyclic subgroups of G stay
// inside G. The A/G = S3 overgroup is reported too; it reduces to the
// cyclic case after a quadratic base change, and its normalizers escape.
Deg16Report deg16_obstruction();
bool verify_deg16_obstruction();

}  // namespace schurscope
