// Copyright 2026 The schurscope Authors
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#include "schurscope/groups.hpp"

#include <limits>
#include <unordered_set>

#include "schurscope/errors.hpp"

namespace schurscope {

PairOrbits orbits_on_pairs(const std::vector<Perm>& gens, std::size_t n, std::uint64_t cap) {
  if (static_cast<std::uint64_t>(n) * n > cap) throw CapExceeded("n^2 exceeds the pair cap");
  constexpr std::uint32_t kUnset = std::numeric_limits<std::uint32_t>::max();
  PairOrbits out;
  out.n = n;
  out.label.assign(n * n, kUnset);
  std::vector<std::uint32_t> queue;
  for (std::size_t start = 0; start < n * n; ++start) {
    if (out.label[start] != kUnset) continue;
    std::uint32_t id = static_cast<std::uint32_t>(out.sizes.size());
    out.label[start] = id;
    queue.assign(1, static_cast<std::uint32_t>(start));
    for (std::size_t k = 0; k < queue.size(); ++k) {
      std::size_t i = queue[k] / n, j = queue[k] % n;
      for (const auto& g : gens) {
        std::size_t t = std::size_t{g[i]} * n + g[j];
        if (out.label[t] == kUnset) {
          out.label[t] = id;
          queue.push_back(static_cast<std::uint32_t>(t));
        }
      }
    }
    out.sizes.push_back(queue.size());
  }
  return out;
}

std::vector<Perm> conjugacy_class(const PermGroup& G, const Perm& g, std::uint64_t cap) {
  std::unordered_set<Perm, PermHash> seen{g};
  std::vector<Perm> cls{g};
  for (std::size_t k = 0; k < cls.size(); ++k)
    for (const auto& s : G.generators()) {
      Perm c = cls[k].conjugate(s);
      if (seen.insert(c).second) {
        cls.push_back(c);
        if (cls.size() > cap) throw CapExceeded("conjugacy class exceeds the cap");
      }
    }
  return cls;
}

PermGroup centralizer(const PermGroup& G, const Perm& g, std::uint64_t cap) {
  std::vector<Perm> keep;
  for (const auto& h : G.elements(cap))
    if (g * h == h * g) keep.push_back(h);
  return subgroup_generated(G.degree(), keep);
}

PermGroup normalizer_of_cyclic(const PermGroup& G, const Perm& g, std::uint64_t cap) {
  std::unordered_set<Perm, PermHash> cyc;
  Perm x = g;
  do {
    cyc.insert(x);
    x = x * g;
  } while (!(x == g));
  std::vector<Perm> keep;
  for (const auto& h : G.elements(cap))
    if (cyc.count(g.conjugate(h))) keep.push_back(h);
  return subgroup_generated(G.degree(), keep);
}

CosetAction::CosetAction(const PermGroup& A, const PermGroup& M, std::size_t cap) : M_(M) {
  if (M.degree() != A.degree()) throw PreconditionError("coset action: degree mismatch");
  if (!A.contains(M)) throw PreconditionError("coset action: M is not a subgroup of A");
  std::size_t n = A.degree();
  auto as_string = [](const std::vector<Point>& k) {
    return std::string(reinterpret_cast<const char*>(k.data()), k.size() * sizeof(Point));
  };
  reps_.push_back(Perm::identity(n));
  index_[as_string(key(reps_[0]))] = 0;
  std::vector<std::vector<std::size_t>> images(A.generators().size());
  for (std::size_t r = 0; r < reps_.size(); ++r) {
    for (std::size_t s = 0; s < A.generators().size(); ++s) {
      Perm c = reps_[r] * A.generators()[s];
      auto [it, fresh] = index_.emplace(as_string(key(c)), reps_.size());
      if (fresh) {
        if (reps_.size() >= cap) throw CapExceeded("coset action index exceeds the degree cap");
        reps_.push_back(c);
      }
      images[s].push_back(it->second);
    }
  }
  std::vector<Perm> gens;
  for (const auto& im : images) {
    std::vector<Point> v(im.begin(), im.end());
    gens.push_back(Perm(std::move(v)));
  }
  image_ = PermGroup(reps_.size(), gens);
}

// Canonical element of M g: descend M's stabilizer chain, at each level
// replacing g by u g where u moves the base point to the orbit point of
// smallest image. The result is the unique element of M g whose images of
// M's base points are lexicographically least, so its image list is a key.
std::vector<Point> CosetAction::key(Perm g) const {
  for (const auto& L : M_.levels()) {
    std::size_t best = 0;
    for (std::size_t j = 1; j < L.orbit.size(); ++j)
      if (g[L.orbit[j]] < g[L.orbit[best]]) best = j;
    if (best) g = L.trans[best] * g;
  }
  return g.images();
}

std::size_t CosetAction::coset_of(const Perm& g) const {
  std::vector<Point> k = key(g);
  auto it = index_.find(std::string(reinterpret_cast<const char*>(k.data()), k.size() * sizeof(Point)));
  if (it == index_.end()) throw PreconditionError("element outside the acting group");
  return it->second;
}

Perm CosetAction::image(const Perm& a) const {
  std::vector<Point> v(reps_.size());
  for (std::size_t i = 0; i < reps_.size(); ++i) v[i] = static_cast<Point>(coset_of(reps_[i] * a));
  return Perm(std::move(v));
}

PermGroup CosetAction::image(const PermGroup& H) const {
  std::vector<Perm> gens;
  for (const auto& h : H.generators()) gens.push_back(image(h));
  return PermGroup(reps_.size(), gens);
}

PermGroup coset_action(const PermGroup& A, const PermGroup& M, std::size_t cap) {
  return CosetAction(A, M, cap).group();
}

PermGroup intersection(const PermGroup& H, const PermGroup& K, std::uint64_t cap) {
  const PermGroup& small = H.order() <= K.order() ? H : K;
  const PermGroup& big = H.order() <= K.order() ? K : H;
  std::vector<Perm> keep;
  for (const auto& h : small.elements(cap))
    if (big.contains(h)) keep.push_back(h);
  return subgroup_generated(H.degree(), keep);
}

}  // namespace schurscope
