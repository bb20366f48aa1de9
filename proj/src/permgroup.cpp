// Copyright 2026 The schurscope Authors
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#include "schurscope/permgroup.hpp"

#include <deque>

#include "schurscope/errors.hpp"

namespace schurscope {

namespace {

constexpr std::uint64_t kSchreierSimsSeed = 0x5c4157ull;

Point first_moved(const Perm& g) {
  for (std::size_t i = 0; i < g.degree(); ++i)
    if (g[i] != i) return static_cast<Point>(i);
  return 0;
}

// Product-replacement random elements.
class Rattle {
 public:
  Rattle(const std::vector<Perm>& gens, std::size_t n, std::uint64_t seed) : rng_(seed), acc_(Perm::identity(n)) {
    for (const auto& g : gens) pool_.push_back(g);
    while (pool_.size() < 10) pool_.push_back(pool_[pool_.size() % gens.size()]);
    for (int i = 0; i < 50; ++i) next();
  }
  Perm next() {
    std::uniform_int_distribution<std::size_t> pick(0, pool_.size() - 1);
    std::size_t i = pick(rng_), j = pick(rng_);
    while (j == i) j = pick(rng_);
    pool_[i] = (rng_() & 1) ? pool_[i] * pool_[j] : pool_[i] * pool_[j].inverse();
    acc_ = acc_ * pool_[i];
    return acc_;
  }

 private:
  std::mt19937_64 rng_;
  std::vector<Perm> pool_;
  Perm acc_;
};

}  // namespace

PermGroup::PermGroup(std::size_t n, std::vector<Perm> gens) : n_(n), gens_(std::move(gens)) {
  if (n == 0 || n > kMaxDegree) throw PreconditionError("invalid permutation degree " + std::to_string(n));
  for (const auto& g : gens_)
    if (g.degree() != n) throw PreconditionError("generator degree mismatch");
  schreier_sims();
}

std::uint64_t PermGroup::order_u64() const {
  if (!order_.fits_ulong_p()) throw CapExceeded("group order exceeds 64 bits");
  return order_.get_ui();
}

std::vector<Point> PermGroup::base() const {
  std::vector<Point> b;
  for (const auto& l : levels_) b.push_back(l.base);
  return b;
}

std::pair<Perm, std::size_t> PermGroup::sift(Perm g, std::size_t start) const {
  for (std::size_t i = start; i < levels_.size(); ++i) {
    const StabLevel& L = levels_[i];
    std::int32_t j = L.pos[g[L.base]];
    if (j < 0) return {std::move(g), i};
    g = g * L.trans_inv[j];
  }
  return {std::move(g), levels_.size()};
}

void PermGroup::rebuild_level(std::size_t i) {
  StabLevel& L = levels_[i];
  L.orbit.assign(1, L.base);
  L.pos.assign(n_, -1);
  L.pos[L.base] = 0;
  L.trans.assign(1, Perm::identity(n_));
  for (std::size_t k = 0; k < L.orbit.size(); ++k) {
    for (const auto& s : L.gens) {
      Point q = s[L.orbit[k]];
      if (L.pos[q] >= 0) continue;
      L.pos[q] = static_cast<std::int32_t>(L.orbit.size());
      L.orbit.push_back(q);
      L.trans.push_back(L.trans[k] * s);
    }
  }
  L.trans_inv.clear();
  L.trans_inv.reserve(L.trans.size());
  for (const auto& t : L.trans) L.trans_inv.push_back(t.inverse());
}

// h fixes the base points of levels < to; it becomes a strong generator of
// levels from..to, creating level `to` if needed.
void PermGroup::add_strong_generator(const Perm& h, std::size_t from, std::size_t to) {
  if (to == levels_.size()) {
    StabLevel L;
    L.base = first_moved(h);
    levels_.push_back(std::move(L));
  }
  for (std::size_t i = from; i <= to; ++i) {
    levels_[i].gens.push_back(h);
    rebuild_level(i);
  }
}

void PermGroup::schreier_sims() {
  levels_.clear();
  std::vector<Perm> nontrivial;
  for (const auto& g : gens_)
    if (!g.is_identity()) nontrivial.push_back(g);
  if (!nontrivial.empty()) {
    for (const auto& g : nontrivial) {
      auto [h, d] = sift(g, 0);
      if (!h.is_identity()) add_strong_generator(h, 0, d);
    }
    Rattle rattle(nontrivial, n_, kSchreierSimsSeed);
    for (int quiet = 0; quiet < 24;) {
      auto [h, d] = sift(rattle.next(), 0);
      if (h.is_identity()) {
        ++quiet;
      } else {
        quiet = 0;
        add_strong_generator(h, 0, d);
      }
    }
    // Deterministic verification: every Schreier generator must sift.
    std::size_t i = levels_.size();
    while (i-- > 0) {
      bool changed = false;
      const StabLevel& L = levels_[i];
      for (std::size_t j = 0; !changed && j < L.orbit.size(); ++j) {
        for (std::size_t s = 0; !changed && s < L.gens.size(); ++s) {
          const Perm& gen = L.gens[s];
          Perm sg = L.trans[j] * gen * L.trans_inv[L.pos[gen[L.orbit[j]]]];
          auto [h, d] = sift(std::move(sg), i + 1);
          if (!h.is_identity()) {
            add_strong_generator(h, i + 1, d);
            i = d + 1;
            changed = true;
          }
        }
      }
    }
  }
  order_ = 1;
  for (const auto& L : levels_) order_ *= static_cast<unsigned long>(L.orbit.size());
}

bool PermGroup::contains(const Perm& g) const {
  if (g.degree() != n_) throw PreconditionError("degree mismatch in membership test");
  return sift(g, 0).first.is_identity();
}

bool PermGroup::contains(const PermGroup& H) const {
  for (const auto& h : H.generators())
    if (!contains(h)) return false;
  return true;
}

bool PermGroup::is_normal_in(const PermGroup& A) const {
  for (const auto& a : A.generators())
    for (const auto& g : gens_)
      if (!contains(g.conjugate(a))) return false;
  return true;
}

std::optional<std::vector<std::uint32_t>> PermGroup::coordinates(const Perm& g0) const {
  std::vector<std::uint32_t> c(levels_.size());
  Perm g = g0;
  for (std::size_t i = 0; i < levels_.size(); ++i) {
    const StabLevel& L = levels_[i];
    std::int32_t j = L.pos[g[L.base]];
    if (j < 0) return std::nullopt;
    c[i] = static_cast<std::uint32_t>(j);
    g = g * L.trans_inv[j];
  }
  if (!g.is_identity()) return std::nullopt;
  return c;
}

std::uint64_t PermGroup::element_index(const Perm& g) const {
  auto c = coordinates(g);
  if (!c) throw PreconditionError("element_index of a non-member");
  std::uint64_t idx = 0;
  for (std::size_t i = levels_.size(); i-- > 0;) idx = idx * levels_[i].orbit.size() + (*c)[i];
  return idx;
}

Perm PermGroup::element_at(std::uint64_t index) const {
  Perm g = Perm::identity(n_);
  for (std::size_t i = 0; i < levels_.size(); ++i) {
    std::uint64_t m = levels_[i].orbit.size();
    g = levels_[i].trans[index % m] * g;
    index /= m;
  }
  return g;
}

std::vector<Perm> PermGroup::elements(std::uint64_t cap) const {
  if (order_ > cap) throw CapExceeded("group order " + order_.get_str() + " exceeds the enumeration cap");
  std::uint64_t m = order_u64();
  std::vector<Perm> out;
  out.reserve(m);
  for (std::uint64_t i = 0; i < m; ++i) out.push_back(element_at(i));
  return out;
}

std::vector<Point> PermGroup::orbit(Point p) const {
  std::vector<Point> orb{p};
  std::vector<bool> seen(n_, false);
  seen[p] = true;
  for (std::size_t k = 0; k < orb.size(); ++k)
    for (const auto& g : gens_) {
      Point q = g[orb[k]];
      if (!seen[q]) {
        seen[q] = true;
        orb.push_back(q);
      }
    }
  return orb;
}

std::vector<std::vector<Point>> PermGroup::orbits() const {
  std::vector<std::vector<Point>> out;
  std::vector<bool> seen(n_, false);
  for (std::size_t p = 0; p < n_; ++p) {
    if (seen[p]) continue;
    out.push_back(orbit(static_cast<Point>(p)));
    for (Point q : out.back()) seen[q] = true;
  }
  return out;
}

bool PermGroup::is_transitive() const { return orbit(0).size() == n_; }

Perm PermGroup::random_element(std::mt19937_64& rng) const {
  Perm g = Perm::identity(n_);
  for (std::size_t i = 0; i < levels_.size(); ++i) {
    std::uniform_int_distribution<std::size_t> u(0, levels_[i].orbit.size() - 1);
    g = levels_[i].trans[u(rng)] * g;
  }
  return g;
}

PermGroup subgroup_generated(std::size_t n, const std::vector<Perm>& elems) {
  std::vector<Perm> gens;
  PermGroup H(n, {});
  for (const auto& e : elems) {
    if (H.contains(e)) continue;
    gens.push_back(e);
    H = PermGroup(n, gens);
  }
  return H;
}

}  // namespace schurscope
