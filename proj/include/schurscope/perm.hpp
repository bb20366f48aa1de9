// Copyright 2026 The schurscope Authors
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

// Permutations of {0..n-1}. Products act left to right: i^(gh) = (i^g)^h.

#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace schurscope {

using Point = std::uint16_t;
inline constexpr std::size_t kMaxDegree = 65535;

class Perm {
 public:
  Perm() = default;
  explicit Perm(std::vector<Point> images);
  static Perm identity(std::size_t n);
  // Cycle notation "(0 1 2)(3 4)"; "()" is the identity.
  static Perm from_cycles(std::string_view text, std::size_t n);

  std::size_t degree() const { return img_.size(); }
  Point operator[](std::size_t i) const { return img_[i]; }
  const std::vector<Point>& images() const { return img_; }

  friend Perm operator*(const Perm& g, const Perm& h);
  friend bool operator==(const Perm&, const Perm&) = default;
  friend auto operator<=>(const Perm& a, const Perm& b) { return a.img_ <=> b.img_; }

  Perm inverse() const;
  Perm pow(long long e) const;
  // h^-1 g h
  Perm conjugate(const Perm& h) const;
  bool is_identity() const;
  std::uint64_t order() const;
  std::size_t num_cycles() const;
  std::size_t fixed_points() const;
  std::vector<std::size_t> cycle_type() const;  // sorted descending
  std::string to_cycles() const;
  std::size_t hash() const;

 private:
  std::vector<Point> img_;
};

struct PermHash {
  std::size_t operator()(const Perm& g) const { return g.hash(); }
};

}  // namespace schurscope
