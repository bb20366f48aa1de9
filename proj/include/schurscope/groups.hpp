// Copyright 2026 The schurscope Authors
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

// Orbits on pairs, conjugacy classes, centralizers, normalizers, coset actions.

#pragma once

#include <unordered_map>
#include <vector>

#include "schurscope/permgroup.hpp"

namespace schurscope {

// Partition of {0..n-1}^2 into orbits; pair (i, j) has label[i*n + j].
struct PairOrbits {
  std::size_t n = 0;
  std::vector<std::uint32_t> label;
  std::vector<std::uint64_t> sizes;
  std::size_t count() const { return sizes.size(); }
  std::uint32_t of(std::size_t i, std::size_t j) const { return label[i * n + j]; }
};

PairOrbits orbits_on_pairs(const std::vector<Perm>& gens, std::size_t n, std::uint64_t cap = kPairCap);

// Orbit of g under conjugation by the generators of G.
std::vector<Perm> conjugacy_class(const PermGroup& G, const Perm& g, std::uint64_t cap = kEnumerationCap);

PermGroup centralizer(const PermGroup& G, const Perm& g, std::uint64_t cap = kEnumerationCap);
PermGroup normalizer_of_cyclic(const PermGroup& G, const Perm& g, std::uint64_t cap = kEnumerationCap);

// Action of A on the right cosets M g.
class CosetAction {
 public:
  CosetAction(const PermGroup& A, const PermGroup& M, std::size_t cap = kDegreeCap);

  std::size_t degree() const { return reps_.size(); }
  const std::vector<Perm>& representatives() const { return reps_; }
  // Index of the coset M g.
  std::size_t coset_of(const Perm& g) const;
  // The permutation induced by an element of A.
  Perm image(const Perm& a) const;
  PermGroup image(const PermGroup& H) const;
  const PermGroup& group() const { return image_; }

 private:
  std::vector<Point> key(Perm g) const;

  PermGroup M_;
  std::vector<Perm> reps_;
  std::unordered_map<std::string, std::size_t> index_;
  PermGroup image_;
};

// Convenience wrapper returning the image of A.
PermGroup coset_action(const PermGroup& A, const PermGroup& M, std::size_t cap = kDegreeCap);

// Intersection H ∩ K of two groups on the same points (enumerates the smaller).
PermGroup intersection(const PermGroup& H, const PermGroup& K, std::uint64_t cap = kEnumerationCap);

}  // namespace schurscope
