// Copyright 2026 The schurscope Authors
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

// Named permutation groups: PSL_2(q) and its overgroups in three natural
// actions, affine groups over F_p^e and over GF(q), symmetric and cyclic groups.

#pragma once

#include <string_view>
#include <vector>

#include "schurscope/gf.hpp"
#include "schurscope/permgroup.hpp"

namespace schurscope {

enum class Psl2Ext { PSL, PGL, PSigmaL, PGammaL, M10 };

enum class Psl2Action {
  Projective,     // P^1(F_q): cosets of a Borel subgroup, degree q+1
  SplitPairs,     // unordered pairs of points: split torus normalizer, q(q+1)/2
  NonsplitPairs,  // conjugate pairs {z, z^q} in P^1(F_q^2) \ P^1(F_q): nonsplit torus normalizer, q(q-1)/2
};

PermGroup psl2_group(std::uint32_t q, Psl2Action action = Psl2Action::Projective, Psl2Ext ext = Psl2Ext::PSL);

using Matrix = std::vector<std::vector<long>>;

// V ⋊ H on the p^e vectors of F_p^e (v indexed as sum v_i p^i); with no
// matrices given, H = GL(e, p).
PermGroup agl_group(std::uint32_t e, std::uint32_t p, const std::vector<Matrix>& subgroup = {});
Perm linear_perm(const Matrix& m, std::uint32_t e, std::uint32_t p);
Perm translation_perm(const std::vector<long>& v, std::uint32_t e, std::uint32_t p);

// z -> a * z^(p^frob) + b on GF(q), field elements in GaloisField encoding.
struct Semilinear1 {
  std::uint32_t a = 1;
  std::uint32_t frob = 0;
  std::uint32_t b = 0;
};
Perm semilinear1_perm(const GaloisField& F, const Semilinear1& m);

PermGroup symmetric_group(std::size_t n);
PermGroup alternating_group(std::size_t n);
PermGroup cyclic_group(std::size_t n);

// Parses "psl2 8 on=cosets:nonsplit-torus-normalizer", "pgaml2 8 on=...",
// "m10 on=cosets:split-torus-normalizer", "agl 2 5 subgroup=[[0,-1],[1,-1]]",
// "sym 4", "alt 5", "cyclic 3".
PermGroup named_group(std::string_view spec);

// "[[1,2],[0,1]];[[2,0],[0,1]]"
std::vector<Matrix> parse_matrices(std::string_view text);

}  // namespace schurscope
