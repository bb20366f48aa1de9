// Copyright 2026 The schurscope Authors
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#include "schurscope/exceptio.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

#include "schurscope/errors.hpp"
#include "schurscope/gf.hpp"
#include "schurscope/ntheory.hpp"

namespace schurscope {

namespace {

void require_triple(const PermGroup& A, const PermGroup& G) {
  if (A.degree() != G.degree()) throw PreconditionError("A and G act on different sets");
  if (!A.contains(G)) throw PreconditionError("G is not a subgroup of A");
  if (!G.is_normal_in(A)) throw PreconditionError("G is not normal in A");
  if (!G.is_transitive()) throw PreconditionError("G is not transitive");
}

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t i) {
  while (parent[i] != i) i = parent[i] = parent[parent[i]];
  return i;
}

}  // namespace

ExceptionalityVerdict is_exceptional(const PermGroup& A, const PermGroup& G) {
  require_triple(A, G);
  const std::size_t n = G.degree();
  PairOrbits po = orbits_on_pairs(G.generators(), n);

  // A permutes the G-orbits, so one representative pair per orbit suffices.
  std::vector<std::size_t> rep(po.count(), SIZE_MAX);
  for (std::size_t k = 0; k < n * n; ++k)
    if (rep[po.label[k]] == SIZE_MAX) rep[po.label[k]] = k;
  std::vector<std::size_t> parent(po.count());
  std::iota(parent.begin(), parent.end(), 0);
  for (std::size_t o = 0; o < po.count(); ++o) {
    std::size_t i = rep[o] / n, j = rep[o] % n;
    for (const auto& a : A.generators()) {
      std::size_t u = find_root(parent, o), v = find_root(parent, po.of(a[i], a[j]));
      if (u != v) parent[std::max(u, v)] = std::min(u, v);
    }
  }
  std::vector<std::size_t> fused(po.count(), 0);
  for (std::size_t o = 0; o < po.count(); ++o) ++fused[find_root(parent, o)];

  ExceptionalityVerdict out;
  std::vector<bool> common(po.count());
  for (std::size_t o = 0; o < po.count(); ++o) {
    common[o] = fused[find_root(parent, o)] == 1;
    out.common_orbit_count += common[o];
  }
  out.exceptional = out.common_orbit_count == 1;
  if (!out.exceptional) {
    for (std::size_t k = 0; k < n * n && !out.witness; ++k)
      if (k / n != k % n && common[po.label[k]])
        out.witness = std::make_pair(static_cast<Point>(k / n), static_cast<Point>(k % n));
  }
  return out;
}

ArithVerdict is_arithmetically_exceptional(const PermGroup& A, const PermGroup& G, std::size_t index_cap,
                                           Backend backend) {
  require_triple(A, G);
  CosetAction cosets(A, G, index_cap + 1);
  const auto& reps = cosets.representatives();
  const long m = static_cast<long>(reps.size());
  std::vector<char> ok(reps.size(), 0);
  auto test = [&](long i) {
    std::vector<Perm> gens = G.generators();
    gens.push_back(reps[i]);
    PermGroup B(G.degree(), gens);
    ok[i] = is_exceptional(B, G).exceptional;
  };
  if (backend == Backend::Parallel) {
#pragma omp parallel for schedule(dynamic, 1)
    for (long i = 0; i < m; ++i) test(i);
  } else {
    for (long i = 0; i < m; ++i) test(i);
  }
  ArithVerdict out;
  out.cosets_tested = reps.size();
  for (std::size_t i = 0; i < reps.size(); ++i)
    if (ok[i]) {
      out.arithmetically_exceptional = true;
      out.witness = reps[i];
      break;
    }
  return out;
}

FixedPointCount chi_fixed_points(const PermGroup& G, const PermGroup& H, const Perm& g, std::uint64_t cap) {
  if (!G.contains(g)) throw PreconditionError("element is not in G");
  if (!G.contains(H)) throw PreconditionError("H is not a subgroup of G");
  std::optional<Point> omega;
  for (std::size_t p = 0; p < G.degree() && !omega; ++p) {
    bool fixed = true;
    for (const auto& h : H.generators()) fixed = fixed && h[p] == p;
    if (fixed && G.order() == H.order() * static_cast<unsigned long>(G.orbit(static_cast<Point>(p)).size()))
      omega = static_cast<Point>(p);
  }
  if (!omega) throw PreconditionError("H is not a point stabilizer");
  if (!G.is_transitive()) throw PreconditionError("G is not transitive");

  FixedPointCount out;
  out.direct = g.fixed_points();
  const std::uint64_t gorder = G.order_u64(), horder = H.order_u64();
  std::vector<Perm> cls = conjugacy_class(G, g, cap);
  std::unordered_set<Perm, PermHash> seen;
  for (const auto& c : cls) {
    if (seen.count(c) || !H.contains(c)) continue;
    std::vector<Perm> hcls = conjugacy_class(H, c, cap);
    for (const auto& d : hcls) seen.insert(d);
    // [C_G(c) : C_H(c)] = (|G| / |c^G|) / (|H| / |c^H|)
    out.formula += (gorder / cls.size()) / (horder / hcls.size());
  }
  return out;
}

CosetAverage coset_average_fixed_points(const PermGroup& G, const Perm& x, Backend backend, std::uint64_t cap) {
  if (x.degree() != G.degree()) throw PreconditionError("degree mismatch");
  if (G.order() > cap) throw CapExceeded("group order exceeds the enumeration cap");
  const long m = static_cast<long>(G.order_u64());
  std::uint64_t s1 = 0, s2 = 0, lo = UINT64_MAX, hi = 0;
  auto chi = [&](long i) -> std::uint64_t { return (x * G.element_at(static_cast<std::uint64_t>(i))).fixed_points(); };
  if (backend == Backend::Parallel) {
#pragma omp parallel for reduction(+ : s1, s2) reduction(min : lo) reduction(max : hi) schedule(static)
    for (long i = 0; i < m; ++i) {
      std::uint64_t c = chi(i);
      s1 += c;
      s2 += c * c;
      lo = std::min(lo, c);
      hi = std::max(hi, c);
    }
  } else {
    for (long i = 0; i < m; ++i) {
      std::uint64_t c = chi(i);
      s1 += c;
      s2 += c * c;
      lo = std::min(lo, c);
      hi = std::max(hi, c);
    }
  }
  auto avg = [&](std::uint64_t s) {
    Rational r(BigInt(static_cast<unsigned long>(s)), BigInt(static_cast<unsigned long>(m)));
    r.canonicalize();
    return r;
  };
  return {avg(s1), avg(s2), lo, hi};
}

bool class_is_rational_in(const PermGroup& A, const Perm& sigma, std::uint64_t cap) {
  if (!A.contains(sigma)) throw PreconditionError("element is not in A");
  std::vector<Perm> cls = conjugacy_class(A, sigma, cap);
  std::unordered_set<Perm, PermHash> set(cls.begin(), cls.end());
  const std::uint64_t o = sigma.order();
  for (std::uint64_t k = 2; k < o; ++k)
    if (gcd_u64(k, o) == 1 && !set.count(sigma.pow(static_cast<long long>(k)))) return false;
  return true;
}

ExampleTriple build_wreath_diagonal_example(const PermGroup& L, std::size_t t) {
  if (t < 1) throw PreconditionError("t must be positive");
  const std::size_t m = L.degree(), n = m * t;
  if (n > kMaxDegree) throw CapExceeded("wreath degree too large");
  auto on_block = [&](const Perm& s, std::size_t b) {
    std::vector<Point> img(n);
    for (std::size_t i = 0; i < n; ++i) img[i] = static_cast<Point>(i);
    for (std::size_t i = 0; i < m; ++i) img[b * m + i] = static_cast<Point>(b * m + s[i]);
    return Perm(std::move(img));
  };
  std::vector<Perm> g_gens, m_gens;
  for (const auto& s : L.generators()) {
    std::vector<Point> diag(n);
    for (std::size_t b = 0; b < t; ++b) {
      g_gens.push_back(on_block(s, b));
      for (std::size_t i = 0; i < m; ++i) diag[b * m + i] = static_cast<Point>(b * m + s[i]);
    }
    m_gens.emplace_back(std::move(diag));
  }
  std::vector<Point> shift(n);
  for (std::size_t i = 0; i < n; ++i) shift[i] = static_cast<Point>((i + m) % n);
  Perm x(std::move(shift));
  m_gens.push_back(x);
  std::vector<Perm> a_gens = g_gens;
  a_gens.push_back(x);

  PermGroup A(n, a_gens), G(n, g_gens), M(n, m_gens);
  CosetAction ca(A, M);
  ExampleTriple out{ca.group(), ca.image(G), ca.image(x), {}};
  for (const auto& s : m_gens) out.stabilizer.push_back(ca.image(s));
  return out;
}

ExampleTriple build_scalar_example(std::uint32_t p, std::uint32_t e, const std::vector<Matrix>& H, std::uint32_t r) {
  if (!is_prime(p)) throw PreconditionError("the field order must be prime");
  if (r <= 1) throw PreconditionError("r must exceed 1");
  if ((p - 1) % r != 0) throw PreconditionError("r must divide q - 1");
  if (H.empty()) {
    // agl_group reads an empty list as all of GL; pass the identity instead.
    Matrix id(e, std::vector<long>(e, 0));
    for (std::uint32_t i = 0; i < e; ++i) id[i][i] = 1;
    return build_scalar_example(p, e, {id}, r);
  }
  std::vector<Perm> hgens;
  for (const auto& mat : H) hgens.push_back(linear_perm(mat, e, p));
  std::uint64_t deg = 1;
  for (std::uint32_t i = 0; i < e; ++i) deg *= p;
  PermGroup Hg(deg, hgens);
  for (const auto& h : Hg.elements())
    if (h.order() == r) throw PreconditionError("H contains an element of order r");

  GaloisField Fp(p, 1);
  long s = static_cast<long>(Fp.pow(Fp.primitive(), (p - 1) / r));
  Matrix scalar(e, std::vector<long>(e, 0));
  for (std::uint32_t i = 0; i < e; ++i) scalar[i][i] = s;
  std::vector<Matrix> with_x = H;
  with_x.push_back(scalar);
  ExampleTriple out{agl_group(e, p, with_x), agl_group(e, p, H), linear_perm(scalar, e, p), hgens};
  out.stabilizer.push_back(out.x);
  return out;
}

ExcompVerdicts excomp_decompose(const PermGroup& A, const PermGroup& G, const PermGroup& M, const PermGroup& U) {
  if (!A.contains(U) || !U.contains(M)) throw PreconditionError("need M <= U <= A");
  if (!A.contains(G) || !G.is_normal_in(A)) throw PreconditionError("G is not normal in A");
  PermGroup GM = intersection(G, M);
  if (G.order() * M.order() != A.order() * GM.order()) throw PreconditionError("A is not GM");
  CosetAction quot(A, G, kIndexCap + 1);
  bool cyclic = false;
  for (const auto& x : quot.representatives()) {
    std::vector<Perm> gens = G.generators();
    gens.push_back(x);
    if (PermGroup(A.degree(), gens).order() == A.order()) {
      cyclic = true;
      break;
    }
  }
  if (!cyclic) throw PreconditionError("A/G is not cyclic");

  ExcompVerdicts out;
  CosetAction am(A, M), au(A, U), um(U, M);
  out.on_m = is_exceptional(am.group(), am.image(G)).exceptional;
  out.on_u = is_exceptional(au.group(), au.image(G)).exceptional;
  out.inner = is_exceptional(um.group(), um.image(intersection(G, U))).exceptional;
  return out;
}

NormalizerCheck cyclic_normalizers_escape(const PermGroup& A, const PermGroup& G, std::uint64_t k) {
  NormalizerCheck out;
  std::unordered_set<Perm, PermHash> done;
  for (const auto& s : G.elements()) {
    if (s.order() != k) continue;
    ++out.elements;
    if (done.count(s)) {
      continue;
    }
    // generators of the same cyclic subgroup share the normalizer
    bool escapes = !G.contains(normalizer_of_cyclic(A, s));
    for (std::uint64_t j = 1; j < k; ++j)
      if (gcd_u64(j, k) == 1) done.insert(s.pow(static_cast<long long>(j)));
    if (escapes) {
      for (std::uint64_t j = 1; j < k; ++j) out.escaping += gcd_u64(j, k) == 1;
    }
  }
  return out;
}

Deg16Report deg16_obstruction() {
  GaloisField F(2, 4);
  std::vector<Perm> g_gens;
  for (std::uint32_t b : {1u, 2u, 4u, 8u}) g_gens.push_back(semilinear1_perm(F, {1, 0, b}));
  g_gens.push_back(semilinear1_perm(F, {F.exp(3), 0, 0}));
  g_gens.push_back(semilinear1_perm(F, {1, 2, 0}));
  PermGroup G(16, g_gens);

  auto extend = [&](std::vector<Semilinear1> extra) {
    std::vector<Perm> gens = g_gens;
    for (const auto& s : extra) gens.push_back(semilinear1_perm(F, s));
    return PermGroup(16, gens);
  };
  Deg16Report out;
  struct Over {
    std::string name;
    PermGroup A;
    bool cyclic;
  };
  std::vector<Over> overgroups{
      {"A/G = C3", extend({{F.exp(5), 0, 0}}), true},
      {"A/G = S3", extend({{F.exp(1), 0, 0}, {1, 1, 0}}), false},
  };
  out.holds = G.order() == 160;
  for (auto& o : overgroups) {
    Deg16Report::Case c{o.name, o.A.order_u64(), o.cyclic, cyclic_normalizers_escape(o.A, G, 4)};
    if (c.cyclic) out.holds = out.holds && c.check.elements > 0 && c.check.escaping == 0;
    out.cases.push_back(std::move(c));
  }
  return out;
}

bool verify_deg16_obstruction() { return deg16_obstruction().holds; }

}  // namespace schurscope
