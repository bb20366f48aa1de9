// Copyright 2026 The schurscope Authors
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#include "schurscope/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "schurscope/errors.hpp"

namespace schurscope {

Perm::Perm(std::vector<Point> images) : img_(std::move(images)) {
  std::vector<bool> seen(img_.size(), false);
  for (Point p : img_) {
    if (p >= img_.size() || seen[p]) throw PreconditionError("image list is not a permutation");
    seen[p] = true;
  }
}

Perm Perm::identity(std::size_t n) {
  if (n > kMaxDegree) throw CapExceeded("permutation degree too large");
  Perm g;
  g.img_.resize(n);
  std::iota(g.img_.begin(), g.img_.end(), Point{0});
  return g;
}

Perm Perm::from_cycles(std::string_view text, std::size_t n) {
  Perm g = identity(n);
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  std::vector<bool> used(n, false);
  skip();
  while (i < text.size()) {
    if (text[i] != '(') throw ParseError("expected '(' in cycle notation: " + std::string(text));
    ++i;
    std::vector<std::size_t> cyc;
    for (;;) {
      skip();
      if (i < text.size() && text[i] == ')') {
        ++i;
        break;
      }
      std::size_t b = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      if (b == i) throw ParseError("expected point in cycle notation: " + std::string(text));
      std::size_t v = std::stoul(std::string(text.substr(b, i - b)));
      if (v >= n) throw ParseError("point " + std::to_string(v) + " out of range");
      if (used[v]) throw ParseError("point " + std::to_string(v) + " repeated in cycle notation");
      used[v] = true;
      cyc.push_back(v);
      skip();
      if (i < text.size() && text[i] == ',') ++i;
    }
    for (std::size_t k = 0; k < cyc.size(); ++k) g.img_[cyc[k]] = static_cast<Point>(cyc[(k + 1) % cyc.size()]);
    skip();
  }
  return g;
}

Perm operator*(const Perm& g, const Perm& h) {
  if (g.degree() != h.degree()) throw PreconditionError("degree mismatch in product");
  Perm r;
  r.img_.resize(g.degree());
  for (std::size_t i = 0; i < g.degree(); ++i) r.img_[i] = h.img_[g.img_[i]];
  return r;
}

Perm Perm::inverse() const {
  Perm r;
  r.img_.resize(degree());
  for (std::size_t i = 0; i < degree(); ++i) r.img_[img_[i]] = static_cast<Point>(i);
  return r;
}

Perm Perm::pow(long long e) const {
  if (e < 0) return inverse().pow(-e);
  Perm r = identity(degree()), b = *this;
  while (e) {
    if (e & 1) r = r * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return r;
}

Perm Perm::conjugate(const Perm& h) const {
  // i^(h^-1 g h): maps i^h to i^(gh)
  Perm r;
  r.img_.resize(degree());
  for (std::size_t i = 0; i < degree(); ++i) r.img_[h.img_[i]] = h.img_[img_[i]];
  return r;
}

bool Perm::is_identity() const {
  for (std::size_t i = 0; i < degree(); ++i)
    if (img_[i] != i) return false;
  return true;
}

std::vector<std::size_t> Perm::cycle_type() const {
  std::vector<std::size_t> out;
  std::vector<bool> seen(degree(), false);
  for (std::size_t i = 0; i < degree(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = img_[j]) {
      seen[j] = true;
      ++len;
    }
    out.push_back(len);
  }
  std::sort(out.rbegin(), out.rend());
  return out;
}

std::uint64_t Perm::order() const {
  std::uint64_t o = 1;
  for (std::size_t len : cycle_type()) o = std::lcm<std::uint64_t>(o, len);
  return o;
}

std::size_t Perm::num_cycles() const { return cycle_type().size(); }

std::size_t Perm::fixed_points() const {
  std::size_t c = 0;
  for (std::size_t i = 0; i < degree(); ++i) c += img_[i] == i;
  return c;
}

std::string Perm::to_cycles() const {
  std::string s;
  std::vector<bool> seen(degree(), false);
  for (std::size_t i = 0; i < degree(); ++i) {
    if (seen[i] || img_[i] == i) continue;
    s += "(";
    for (std::size_t j = i; !seen[j]; j = img_[j]) {
      seen[j] = true;
      if (j != i) s += " ";
      s += std::to_string(j);
    }
    s += ")";
  }
  return s.empty() ? "()" : s;
}

std::size_t Perm::hash() const {
  std::uint64_t h = 1469598103934665603ull;
  for (Point p : img_) {
    h ^= p;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h ^ (h >> 29));
}

}  // namespace schurscope
