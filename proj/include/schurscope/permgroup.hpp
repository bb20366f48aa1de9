// Copyright 2026 The schurscope Authors
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

// Permutation groups with a base and strong generating set.

#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "schurscope/perm.hpp"
#include "schurscope/scalar.hpp"

namespace schurscope {

inline constexpr std::size_t kDegreeCap = 4096;
inline constexpr std::uint64_t kEnumerationCap = 200000;
inline constexpr std::uint64_t kPairCap = 4000000;

// One level of the stabilizer chain: strong generators fixing the earlier base
// points, the orbit of the base point and a transversal.
struct StabLevel {
  Point base = 0;
  std::vector<Perm> gens;
  std::vector<Point> orbit;
  std::vector<std::int32_t> pos;  // index in orbit, or -1
  std::vector<Perm> trans;        // base^trans[j] == orbit[j]
  std::vector<Perm> trans_inv;
};

class PermGroup {
 public:
  PermGroup() = default;
  // Builds the stabilizer chain with seeded random Schreier-Sims followed by a
  // deterministic Schreier-generator verification pass.
  PermGroup(std::size_t n, std::vector<Perm> gens);

  std::size_t degree() const { return n_; }
  const std::vector<Perm>& generators() const { return gens_; }
  const BigInt& order() const { return order_; }
  std::uint64_t order_u64() const;
  const std::vector<StabLevel>& levels() const { return levels_; }
  std::vector<Point> base() const;

  bool contains(const Perm& g) const;
  bool contains(const PermGroup& H) const;
  bool is_normal_in(const PermGroup& A) const;  // A's generators normalize this group

  // Transversal coordinates of a member: g = u_{k-1}[c_{k-1}] ... u_0[c_0].
  std::optional<std::vector<std::uint32_t>> coordinates(const Perm& g) const;
  // Mixed-radix index of a member in {0..|G|-1} (level 0 least significant).
  std::uint64_t element_index(const Perm& g) const;
  Perm element_at(std::uint64_t index) const;
  std::vector<Perm> elements(std::uint64_t cap = kEnumerationCap) const;

  std::vector<Point> orbit(Point p) const;
  std::vector<std::vector<Point>> orbits() const;
  bool is_transitive() const;

  Perm random_element(std::mt19937_64& rng) const;

 private:
  std::pair<Perm, std::size_t> sift(Perm g, std::size_t start) const;
  void add_strong_generator(const Perm& h, std::size_t from, std::size_t to);
  void rebuild_level(std::size_t i);
  void schreier_sims();

  std::size_t n_ = 0;
  std::vector<Perm> gens_;
  std::vector<StabLevel> levels_;
  BigInt order_ = 1;
};

// Smallest subgroup containing the given elements, with a short generating set.
PermGroup subgroup_generated(std::size_t n, const std::vector<Perm>& elems);

}  // namespace schurscope
