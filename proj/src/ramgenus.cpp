// Copyright 2026 The schurscope Authors
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#include "schurscope/ramgenus.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <numeric>
#include <optional>
#include <set>

#include "schurscope/errors.hpp"

namespace schurscope {

RamType make_type(std::vector<std::uint64_t> e) {
  std::sort(e.begin(), e.end());
  return e;
}

std::string type_str(const RamType& t) {
  std::string s = "(";
  for (std::size_t i = 0; i < t.size(); ++i) s += (i ? "," : "") + std::to_string(t[i]);
  return s + ")";
}

std::uint64_t ind(const Perm& sigma) { return sigma.degree() - sigma.num_cycles(); }

namespace {

bool transitive(const std::vector<Perm>& gens, std::size_t n) {
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  std::size_t parts = n;
  for (const auto& g : gens)
    for (std::size_t i = 0; i < n; ++i) {
      std::size_t a = find(i), b = find(g[i]);
      if (a != b) {
        parent[std::max(a, b)] = std::min(a, b);
        --parts;
      }
    }
  return parts <= 1;
}

}  // namespace

std::uint64_t permutation_genus(const std::vector<Perm>& sigmas) {
  if (sigmas.empty()) throw PreconditionError("empty tuple");
  const std::size_t n = sigmas[0].degree();
  Perm prod = Perm::identity(n);
  std::uint64_t total = 0;
  for (const auto& s : sigmas) {
    if (s.degree() != n) throw PreconditionError("degree mismatch");
    prod = prod * s;
    total += ind(s);
  }
  if (!prod.is_identity()) throw PreconditionError("product of the tuple is not 1");
  if (!transitive(sigmas, n)) throw PreconditionError("tuple generates an intransitive group");
  if (total % 2 != 0) throw PreconditionError("index sum is odd");
  if (total + 2 < 2 * n) throw PreconditionError("index sum gives a negative genus");
  return total / 2 - (n - 1);
}

std::uint64_t regular_genus(const RamType& type, const BigInt& group_order) {
  if (group_order < 2) throw PreconditionError("group order must be at least 2");
  Rational s = 0;
  for (auto e : type) {
    if (e < 2) throw PreconditionError("ramification indices must be at least 2");
    s += 1 - Rational(1, static_cast<unsigned long>(e));
  }
  Rational g = Rational(group_order) * s / 2 - Rational(group_order) + 1;
  g.canonicalize();
  if (g.get_den() != 1) throw PreconditionError("regular genus is not an integer");
  if (g < 0) throw PreconditionError("regular genus is negative");
  return g.get_num().get_ui();
}

TypeClassification classify_type(const RamType& type) {
  RamType t = make_type(type);
  if (t.size() < 2) throw PreconditionError("a ramification type has at least two entries");
  Rational s = 0;
  for (auto e : t) {
    if (e < 2) throw PreconditionError("ramification indices must be at least 2");
    s += 1 - Rational(1, static_cast<unsigned long>(e));
  }
  TypeClassification out;
  if (s > 2) return out;
  if (s == 2) {
    out.cls = TypeClass::Euclidean;
    return out;
  }
  out.cls = TypeClass::SubEuclidean;
  if (t.size() == 2)
    out.spherical_case = "(n,n)";
  else if (t[0] == 2 && t[1] == 2)
    out.spherical_case = "(2,2,k)";
  else
    out.spherical_case = type_str(t);
  return out;
}

std::string type_class_name(TypeClass c) {
  switch (c) {
    case TypeClass::SubEuclidean:
      return "sub-Euclidean";
    case TypeClass::Euclidean:
      return "Euclidean";
    case TypeClass::Hyperbolic:
      return "hyperbolic";
  }
  return "";
}

std::vector<RamType> Genus0Result::types() const {
  std::vector<RamType> out;
  for (const auto& s : systems) out.push_back(s.type);
  return out;
}

namespace {

struct ClassData {
  std::vector<Perm> el;
  std::vector<std::uint32_t> cls;                  // element -> class
  std::vector<std::vector<std::uint32_t>> members;  // class -> elements
  std::vector<std::uint32_t> rep;                   // lexicographically least member
};

ClassData conjugacy_classes(const PermGroup& G, std::uint64_t cap) {
  ClassData d;
  d.el = G.elements(cap);
  const std::uint32_t none = UINT32_MAX;
  d.cls.assign(d.el.size(), none);
  for (std::size_t i = 0; i < d.el.size(); ++i) {
    if (d.cls[i] != none) continue;
    const auto id = static_cast<std::uint32_t>(d.members.size());
    std::vector<std::uint32_t> mem{static_cast<std::uint32_t>(i)};
    d.cls[i] = id;
    for (std::size_t q = 0; q < mem.size(); ++q)
      for (const auto& s : G.generators()) {
        auto k = static_cast<std::uint32_t>(G.element_index(d.el[mem[q]].conjugate(s)));
        if (d.cls[k] == none) {
          d.cls[k] = id;
          mem.push_back(k);
        }
      }
    std::sort(mem.begin(), mem.end(), [&](auto a, auto b) { return d.el[a] < d.el[b]; });
    d.rep.push_back(mem[0]);
    d.members.push_back(std::move(mem));
  }
  return d;
}

}  // namespace

Genus0Result genus0_search(const PermGroup& G, std::size_t r_max, Backend backend, std::uint64_t order_cap) {
  if (G.order() > order_cap) throw CapExceeded("group order exceeds the genus-0 search cap");
  if (!G.is_transitive()) throw PreconditionError("group is not transitive");
  const std::size_t n = G.degree();
  const std::uint64_t budget = 2 * (n - 1);
  ClassData d = conjugacy_classes(G, order_cap);
  const std::size_t nc = d.members.size();

  std::vector<std::uint64_t> cind(nc), cord(nc);
  std::vector<std::uint32_t> nontrivial;
  for (std::uint32_t c = 0; c < nc; ++c) {
    cind[c] = ind(d.el[d.rep[c]]);
    cord[c] = d.el[d.rep[c]].order();
    if (cord[c] > 1) nontrivial.push_back(c);
  }

  // class multisets (nondecreasing ids) with index sum exactly 2(n-1)
  std::vector<std::vector<std::uint32_t>> cands;
  std::vector<std::uint32_t> cur;
  std::function<void(std::size_t, std::uint64_t)> rec = [&](std::size_t from, std::uint64_t sum) {
    if (sum == budget && cur.size() >= 2) cands.push_back(cur);
    if (cur.size() == r_max) return;
    for (std::size_t k = from; k < nontrivial.size(); ++k) {
      std::uint32_t c = nontrivial[k];
      if (sum + cind[c] > budget) continue;
      cur.push_back(c);
      rec(k, sum + cind[c]);
      cur.pop_back();
    }
  };
  rec(0, 0);

  Genus0Result out;
  out.class_count = nc;
  out.candidates = cands.size();
  std::set<RamType> found;
  for (auto cand : cands) {
    RamType type;
    for (auto c : cand) type.push_back(cord[c]);
    type = make_type(type);
    if (found.count(type)) continue;

    // largest class first (fixed to its representative), second largest last
    std::stable_sort(cand.begin(), cand.end(),
                     [&](auto a, auto b) { return d.members[a].size() > d.members[b].size(); });
    const std::uint32_t first = cand[0], last = cand[1];
    std::vector<std::uint32_t> middle(cand.begin() + 2, cand.end());
    const Perm& s1 = d.el[d.rep[first]];

    // Completes a tuple from a partial product; returns it when it generates G.
    auto finish = [&](std::vector<Perm> tuple, const Perm& partial) -> std::optional<std::vector<Perm>> {
      Perm tail = partial.inverse();
      if (d.cls[G.element_index(tail)] != last) return std::nullopt;
      tuple.push_back(tail);
      if (!transitive(tuple, n)) return std::nullopt;
      if (PermGroup(n, tuple).order() != G.order()) return std::nullopt;
      return tuple;
    };
    std::function<std::optional<std::vector<Perm>>(std::size_t, std::vector<Perm>&, const Perm&)> deeper =
        [&](std::size_t depth, std::vector<Perm>& tuple, const Perm& partial) -> std::optional<std::vector<Perm>> {
      if (depth == middle.size()) return finish(tuple, partial);
      for (auto e : d.members[middle[depth]]) {
        tuple.push_back(d.el[e]);
        auto r = deeper(depth + 1, tuple, partial * d.el[e]);
        tuple.pop_back();
        if (r) return r;
      }
      return std::nullopt;
    };

    std::optional<std::vector<Perm>> hit;
    if (middle.empty()) {
      hit = finish({s1}, s1);
    } else {
      // branch over the second element; keep the first success in list order
      const auto& branch = d.members[middle[0]];
      const long m = static_cast<long>(branch.size());
      std::atomic<long> best{m};
      std::vector<std::optional<std::vector<Perm>>> res(branch.size());
      auto run = [&](long i) {
        if (i > best.load()) return;
        std::vector<Perm> tuple{s1, d.el[branch[i]]};
        auto r = middle.size() == 1 ? finish(tuple, s1 * d.el[branch[i]]) : [&] {
          std::vector<Perm> t = tuple;
          return deeper(1, t, s1 * d.el[branch[i]]);
        }();
        if (r) {
          res[i] = std::move(r);
          long b = best.load();
          while (i < b && !best.compare_exchange_weak(b, i)) {
          }
        }
      };
      if (backend == Backend::Parallel) {
#pragma omp parallel for schedule(dynamic, 1)
        for (long i = 0; i < m; ++i) run(i);
      } else {
        for (long i = 0; i < m && best.load() == m; ++i) run(i);
      }
      if (best.load() < m) hit = std::move(res[best.load()]);
    }
    if (!hit) continue;
    found.insert(type);
    GenusSystem sys;
    sys.elements = std::move(*hit);
    sys.type = type;
    for (const auto& s : sys.elements) sys.indices.push_back(ind(s));
    sys.genus = permutation_genus(sys.elements);
    sys.regular_genus = regular_genus(type, G.order());
    out.systems.push_back(std::move(sys));
  }
  std::sort(out.systems.begin(), out.systems.end(),
            [](const GenusSystem& a, const GenusSystem& b) { return a.type < b.type; });
  return out;
}

}  // namespace schurscope
