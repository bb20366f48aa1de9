// Copyright 2026 The schurscope Authors
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <set>

#include "schurscope/errors.hpp"
#include "schurscope/exceptio.hpp"
#include "schurscope/ntheory.hpp"

using namespace schurscope;

namespace {

PermGroup grp(std::size_t n, std::vector<std::string> cyc) {
  std::vector<Perm> g;
  for (const auto& c : cyc) g.push_back(Perm::from_cycles(c, n));
  return PermGroup(n, g);
}

// Oracle: orbits on pairs from full element lists; counts A-orbits that are
// single G-orbits.
std::size_t brute_common_orbits(const PermGroup& A, const PermGroup& G) {
  const std::size_t n = G.degree();
  auto orbit_ids = [&](const PermGroup& H) {
    std::vector<int> id(n * n, -1);
    auto el = H.elements();
    int next = 0;
    for (std::size_t k = 0; k < n * n; ++k) {
      if (id[k] >= 0) continue;
      for (const auto& h : el) id[h[k / n] * n + h[k % n]] = next;
      ++next;
    }
    return id;
  };
  auto ga = orbit_ids(A), gg = orbit_ids(G);
  std::map<int, std::set<int>> split;
  for (std::size_t k = 0; k < n * n; ++k) split[ga[k]].insert(gg[k]);
  std::size_t r = 0;
  for (auto& [a, s] : split) r += s.size() == 1;
  return r;
}

Perm first_of_order(const PermGroup& G, std::uint64_t k) {
  for (const auto& g : G.elements())
    if (g.order() == k) return g;
  FAIL("no element of the requested order");
  return Perm();
}

std::vector<Perm> stabilizer_elems(const PermGroup& G, Point p) {
  std::vector<Perm> s;
  for (const auto& g : G.elements())
    if (g[p] == p) s.push_back(g);
  return s;
}

}  // namespace

TEST_CASE("is_exceptional") {
  PermGroup S3 = symmetric_group(3), C3 = grp(3, {"(0 1 2)"});
  auto v = is_exceptional(S3, C3);
  CHECK(v.exceptional);
  CHECK(v.common_orbit_count == 1);
  CHECK(!v.witness);
  CHECK(orbits_on_pairs(C3.generators(), 3).count() == 3);

  auto w = is_exceptional(symmetric_group(4), alternating_group(4));
  CHECK(!w.exceptional);
  CHECK(w.common_orbit_count == 2);
  REQUIRE(w.witness);
  CHECK(*w.witness == std::make_pair(Point{0}, Point{1}));

  for (std::size_t n : {2, 3, 5}) {
    PermGroup G = cyclic_group(n);
    auto g = is_exceptional(G, G);
    CHECK(!g.exceptional);
    CHECK(g.common_orbit_count == n);
  }
  CHECK(is_exceptional(PermGroup(1, {}), PermGroup(1, {})).exceptional);

  CHECK_THROWS_AS(is_exceptional(symmetric_group(4), grp(4, {"(0 1 2 3)"})), PreconditionError);
  CHECK_THROWS_AS(is_exceptional(grp(4, {"(0 1)", "(2 3)"}), grp(4, {"(0 1)"})), PreconditionError);
}

TEST_CASE("is_exceptional agrees with the brute-force oracle") {
  struct Inst {
    PermGroup A, G;
  };
  std::vector<Inst> cases{
      {symmetric_group(3), grp(3, {"(0 1 2)"})},
      {symmetric_group(4), alternating_group(4)},
      {psl2_group(8, Psl2Action::NonsplitPairs, Psl2Ext::PGammaL), psl2_group(8, Psl2Action::NonsplitPairs)},
      {psl2_group(8, Psl2Action::Projective, Psl2Ext::PGammaL), psl2_group(8)},
      {psl2_group(9, Psl2Action::SplitPairs, Psl2Ext::M10), psl2_group(9, Psl2Action::SplitPairs)},
      {psl2_group(9, Psl2Action::SplitPairs, Psl2Ext::PGL), psl2_group(9, Psl2Action::SplitPairs)},
      {psl2_group(7, Psl2Action::Projective, Psl2Ext::PGL), psl2_group(7)},
      {agl_group(1, 7), agl_group(1, 7, {{{2}}})},
  };
  for (const auto& c : cases) {
    auto v = is_exceptional(c.A, c.G);
    CHECK(v.common_orbit_count == brute_common_orbits(c.A, c.G));
    CHECK(v.exceptional == (v.common_orbit_count == 1));
  }
}

TEST_CASE("is_arithmetically_exceptional") {
  PermGroup A28 = psl2_group(8, Psl2Action::NonsplitPairs, Psl2Ext::PGammaL);
  PermGroup G28 = psl2_group(8, Psl2Action::NonsplitPairs);
  auto a = is_arithmetically_exceptional(A28, G28);
  CHECK(a.arithmetically_exceptional);
  REQUIRE(a.witness);
  CHECK(!G28.contains(*a.witness));
  CHECK(G28.contains(a.witness->pow(3)));
  // the witness coset is a field automorphism coset: it generates A/G
  std::vector<Perm> gens = G28.generators();
  gens.push_back(*a.witness);
  CHECK(PermGroup(28, gens).order() == 1512);

  PermGroup G45 = psl2_group(9, Psl2Action::SplitPairs);
  PermGroup M10 = psl2_group(9, Psl2Action::SplitPairs, Psl2Ext::M10);
  auto b = is_arithmetically_exceptional(M10, G45);
  CHECK(b.arithmetically_exceptional);
  REQUIRE(b.witness);
  CHECK(!G45.contains(*b.witness));

  // inside PGammaL2(9) only the M10 coset works
  PermGroup PGam = psl2_group(9, Psl2Action::SplitPairs, Psl2Ext::PGammaL);
  REQUIRE(PGam.contains(M10));
  auto c = is_arithmetically_exceptional(PGam, G45);
  CHECK(c.arithmetically_exceptional);
  CHECK(c.cosets_tested == 4);
  CHECK(M10.contains(*c.witness));
  CHECK(!G45.contains(*c.witness));
  CHECK(!is_arithmetically_exceptional(psl2_group(9, Psl2Action::SplitPairs, Psl2Ext::PGL), G45)
             .arithmetically_exceptional);
  CHECK(!is_arithmetically_exceptional(psl2_group(9, Psl2Action::SplitPairs, Psl2Ext::PSigmaL), G45)
             .arithmetically_exceptional);

  CHECK(!is_arithmetically_exceptional(G28, G28).arithmetically_exceptional);
  auto serial = is_arithmetically_exceptional(PGam, G45, kIndexCap, Backend::Serial);
  CHECK(serial.witness == c.witness);
  CHECK_THROWS_AS(is_arithmetically_exceptional(agl_group(1, 29), agl_group(1, 29, {{{1}}}), 10), CapExceeded);
}

TEST_CASE("chi_fixed_points") {
  PermGroup G = psl2_group(8, Psl2Action::NonsplitPairs);
  PermGroup H = subgroup_generated(28, stabilizer_elems(G, 0));
  auto id = chi_fixed_points(G, H, Perm::identity(28));
  CHECK(id.direct == 28);
  CHECK(id.formula == 28);
  auto c3 = chi_fixed_points(G, H, first_of_order(G, 3));
  CHECK(c3.direct == 1);
  CHECK(c3.formula == 1);
  std::set<std::vector<std::size_t>> types;
  for (const auto& g : G.elements()) {
    if (!types.insert(g.cycle_type()).second) continue;
    auto f = chi_fixed_points(G, H, g);
    CHECK(f.direct == f.formula);
  }

  PermGroup G496 = psl2_group(32, Psl2Action::NonsplitPairs);
  PermGroup H496 = subgroup_generated(496, stabilizer_elems(G496, 0));
  auto inv = chi_fixed_points(G496, H496, first_of_order(G496, 2));
  CHECK(inv.direct == 16);
  CHECK(inv.formula == 16);

  CHECK_THROWS_AS(chi_fixed_points(G, grp(28, {}), first_of_order(G, 2)), PreconditionError);
  PermGroup S3 = symmetric_group(3);
  CHECK_THROWS_AS(chi_fixed_points(S3, PermGroup(3, {}), Perm::identity(3)), PreconditionError);
}

TEST_CASE("coset_average_fixed_points") {
  PermGroup C3 = grp(3, {"(0 1 2)"});
  auto a = coset_average_fixed_points(C3, Perm::from_cycles("(0 1)", 3));
  CHECK(a.on_pairs == 1);
  CHECK(a.on_points == 1);
  auto b = coset_average_fixed_points(alternating_group(4), Perm::from_cycles("(0 1)", 4));
  CHECK(b.on_pairs == 2);
  CHECK(b.min_fixed == 0);
  CHECK(b.max_fixed == 2);
  PermGroup G = psl2_group(7, Psl2Action::SplitPairs);
  auto c = coset_average_fixed_points(G, Perm::identity(G.degree()));
  CHECK(c.on_pairs == orbits_on_pairs(G.generators(), G.degree()).count());
  CHECK(c.on_pairs > 1);
  auto s = coset_average_fixed_points(G, Perm::identity(G.degree()), Backend::Serial);
  CHECK(s.on_pairs == c.on_pairs);
  CHECK(s.min_fixed == c.min_fixed);
  CHECK_THROWS_AS(coset_average_fixed_points(G, Perm::identity(G.degree()), Backend::Serial, 10), CapExceeded);
}

TEST_CASE("class_is_rational_in") {
  auto brute = [](const PermGroup& A, const Perm& s) {
    std::set<Perm> cls;
    for (const auto& a : A.elements()) cls.insert(s.conjugate(a));
    for (std::uint64_t m = 1; m < s.order(); ++m)
      if (gcd_u64(m, s.order()) == 1 && !cls.count(s.pow(static_cast<long long>(m)))) return false;
    return true;
  };
  PermGroup G = psl2_group(8), A = psl2_group(8, Psl2Action::Projective, Psl2Ext::PGammaL);
  Perm s7 = first_of_order(G, 7);
  CHECK(!class_is_rational_in(G, s7));
  CHECK(class_is_rational_in(A, s7));
  CHECK(class_is_rational_in(G, first_of_order(G, 2)));
  Perm c5 = Perm::from_cycles("(0 1 2 3 4)", 5);
  CHECK(!class_is_rational_in(alternating_group(5), c5));
  CHECK(class_is_rational_in(symmetric_group(5), c5));
  for (const auto& [grp_, el] : std::vector<std::pair<PermGroup, Perm>>{
           {G, s7}, {A, s7}, {alternating_group(5), c5}, {G, first_of_order(G, 9)}, {A, first_of_order(G, 9)}})
    CHECK(class_is_rational_in(grp_, el) == brute(grp_, el));
}

TEST_CASE("wreath diagonal example") {
  auto s3_2 = build_wreath_diagonal_example(symmetric_group(3), 2);
  CHECK(s3_2.A.degree() == 6);
  CHECK(!is_exceptional(s3_2.A, s3_2.G).exceptional);
  auto c2_3 = build_wreath_diagonal_example(cyclic_group(2), 3);
  CHECK(c2_3.A.degree() == 4);
  CHECK(is_exceptional(c2_3.A, c2_3.G).exceptional);
  auto c3_3 = build_wreath_diagonal_example(cyclic_group(3), 3);
  CHECK(!is_exceptional(c3_3.A, c3_3.G).exceptional);
  auto s3_5 = build_wreath_diagonal_example(symmetric_group(3), 5);
  CHECK(s3_5.A.degree() == 1296);
  CHECK(s3_5.G.order() == 7776);
  auto v = is_exceptional(s3_5.A, s3_5.G);
  CHECK(v.exceptional);
  CHECK(coset_average_fixed_points(s3_5.G, s3_5.x).on_pairs == 1);
}

TEST_CASE("scalar example") {
  auto t7 = build_scalar_example(7, 1, {}, 3);
  CHECK(t7.A.degree() == 7);
  CHECK(t7.A.order() == 21);
  CHECK(is_exceptional(t7.A, t7.G).exceptional);
  auto t25 = build_scalar_example(5, 2, {{{0, -1}, {1, -1}}}, 4);
  CHECK(t25.A.degree() == 25);
  CHECK(t25.G.order() == 75);
  CHECK(t25.A.order() == 300);
  CHECK(is_exceptional(t25.A, t25.G).exceptional);
  CHECK(brute_common_orbits(t25.A, t25.G) == 1);
  CHECK_THROWS_AS(build_scalar_example(7, 1, {}, 1), PreconditionError);
  CHECK_THROWS_AS(build_scalar_example(7, 1, {}, 4), PreconditionError);
  CHECK_THROWS_AS(build_scalar_example(7, 1, {{{3}}}, 3), PreconditionError);
  CHECK_THROWS_AS(build_scalar_example(9, 1, {}, 2), PreconditionError);
}

TEST_CASE("excomp_decompose") {
  // PGammaL2(8) on 9 points; U a point stabilizer, M its meet with a
  // nonsplit torus normalizer.
  PermGroup A = psl2_group(8, Psl2Action::Projective, Psl2Ext::PGammaL), G = psl2_group(8);
  PermGroup M28 = normalizer_of_cyclic(A, first_of_order(G, 9));
  CHECK(M28.order() == 54);
  PermGroup U = subgroup_generated(9, stabilizer_elems(A, 0));
  PermGroup M = intersection(M28, U);
  CHECK(M.order() == 6);
  auto e = excomp_decompose(A, G, M, U);
  CHECK(e.consistent());
  CHECK(!e.on_u);
  CHECK(e.on_m == is_exceptional(coset_action(A, M), CosetAction(A, M).image(G)).exceptional);

  // wreath C3^4 with U = <C_G(x^2), x>
  PermGroup L = cyclic_group(3);
  const std::size_t t = 4, n = 12;
  std::vector<Perm> g_gens;
  std::vector<Point> diag(n), shift(n), pair(n);
  for (std::size_t b = 0; b < t; ++b) {
    std::vector<Point> img(n);
    for (std::size_t i = 0; i < n; ++i) img[i] = static_cast<Point>(i);
    for (std::size_t i = 0; i < 3; ++i) img[b * 3 + i] = static_cast<Point>(b * 3 + (i + 1) % 3);
    g_gens.emplace_back(img);
  }
  for (std::size_t i = 0; i < n; ++i) {
    diag[i] = static_cast<Point>((i / 3) * 3 + (i + 1) % 3);
    shift[i] = static_cast<Point>((i + 3) % n);
    pair[i] = (i / 3) % 2 == 0 ? diag[i] : static_cast<Point>(i);
  }
  Perm x(shift);
  std::vector<Perm> a_gens = g_gens;
  a_gens.push_back(x);
  PermGroup Aw(n, a_gens), Gw(n, g_gens);
  PermGroup Mw(n, {Perm(diag), x});
  PermGroup Uw(n, {Perm(diag), Perm(pair), x});
  CHECK(centralizer(Gw, x.pow(2)).order() == 9);
  CHECK(Uw.contains(centralizer(Gw, x.pow(2))));
  auto w = excomp_decompose(Aw, Gw, Mw, Uw);
  CHECK(w.on_m);
  CHECK(w.on_u);
  CHECK(w.inner);

  PermGroup S3 = symmetric_group(3);
  auto d = excomp_decompose(S3, S3, PermGroup(3, {}), PermGroup(3, {Perm::from_cycles("(0 1)", 3)}));
  CHECK(!d.on_m);
  CHECK(!d.on_u);
  CHECK(d.consistent());
  CHECK_THROWS_AS(excomp_decompose(S3, S3, PermGroup(3, {Perm::from_cycles("(0 1)", 3)}), PermGroup(3, {})),
                  PreconditionError);
}

TEST_CASE("exceptionality properties on constructed instances") {
  std::vector<ExampleTriple> inst;
  for (auto [L, t] : std::vector<std::pair<PermGroup, std::size_t>>{{cyclic_group(2), 2},
                                                                     {cyclic_group(2), 3},
                                                                     {cyclic_group(3), 2},
                                                                     {cyclic_group(3), 3},
                                                                     {symmetric_group(3), 2},
                                                                     {symmetric_group(3), 3},
                                                                     {cyclic_group(3), 4}})
    inst.push_back(build_wreath_diagonal_example(L, t));
  inst.push_back(build_scalar_example(7, 1, {}, 3));
  inst.push_back(build_scalar_example(5, 2, {{{0, -1}, {1, -1}}}, 4));
  inst.push_back(build_scalar_example(7, 2, {}, 2));

  std::size_t checked_cong = 0;
  for (const auto& T : inst) {
    const std::size_t n = T.A.degree();
    // the coset action need not be faithful, so [A : G] is read off the images
    REQUIRE(T.A.order() % T.G.order() == 0);
    const std::uint64_t index = BigInt(T.A.order() / T.G.order()).get_ui();
    std::vector<Perm> gx = T.G.generators();
    gx.push_back(T.x);
    CHECK(PermGroup(n, gx).order() == T.A.order());
    auto v = is_exceptional(T.A, T.G);
    auto avg = coset_average_fixed_points(T.G, T.x, Backend::Serial);
    CHECK(avg.on_points == 1);
    CHECK((avg.on_pairs == 1) == v.exceptional);
    CHECK(avg.on_pairs == v.common_orbit_count);
    // chi(xg) <= 1, == 1 and >= 1 for all g are each equivalent to exceptionality
    CHECK((avg.max_fixed <= 1) == v.exceptional);
    CHECK((avg.min_fixed == 1 && avg.max_fixed == 1) == v.exceptional);
    CHECK((avg.min_fixed >= 1) == v.exceptional);
    if (v.exceptional) {
      // x lies in the point stabilizer; its centralizer and normalizer fix one point
      for (const auto& K : {centralizer(T.A, T.x), normalizer_of_cyclic(T.A, T.x)}) {
        std::size_t fixed = 0;
        for (std::size_t p = 0; p < n; ++p) {
          bool f = true;
          for (const auto& k : K.generators()) f = f && k[p] == p;
          fixed += f;
        }
        CHECK(fixed == 1);
      }
      auto pf = prime_factors(index);
      if (pf.size() == 1) CHECK(n % pf[0] == 1);
      if (index > 1) ++checked_cong;
    }
    // Coprime order of x and |C_G(x)| with C_G(x) inside M forces exceptionality.
    PermGroup C = centralizer(T.G, T.x);
    PermGroup M = subgroup_generated(n, T.stabilizer);
    if (gcd_u64(T.x.order(), C.order_u64()) == 1 && M.contains(C)) CHECK(v.exceptional);
  }
  CHECK(checked_cong >= 4);
}

TEST_CASE("degree-16 normalizer obstruction") {
  auto r = deg16_obstruction();
  CHECK(r.holds);
  REQUIRE(r.cases.size() == 2);
  CHECK(r.cases[0].order == 480);
  CHECK(r.cases[0].cyclic);
  CHECK(r.cases[0].check.elements > 0);
  CHECK(r.cases[0].check.escaping == 0);
  // With A/G = S3 the normalizers do escape; that case is first reduced to
  // the cyclic one over the quadratic subfield of the constants.
  CHECK(r.cases[1].order == 960);
  CHECK(!r.cases[1].cyclic);
  CHECK(r.cases[1].check.escaping > 0);
  CHECK(verify_deg16_obstruction());

  // negative control: PSL2(9) inside M10 on 10 points
  PermGroup G = psl2_group(9), A = psl2_group(9, Psl2Action::Projective, Psl2Ext::M10);
  auto nc = cyclic_normalizers_escape(A, G, 4);
  CHECK(nc.elements > 0);
  CHECK(nc.escaping == nc.elements);
}
