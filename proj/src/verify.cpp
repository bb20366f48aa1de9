// Copyright 2026 The schurscope Authors
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#include "schurscope/verify.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "schurscope/ellipt.hpp"
#include "schurscope/errors.hpp"
#include "schurscope/exceptio.hpp"
#include "schurscope/funfam.hpp"
#include "schurscope/named.hpp"
#include "schurscope/ntheory.hpp"
#include "schurscope/projmap.hpp"
#include "schurscope/ramgenus.hpp"
#include "schurscope/reduce.hpp"
#include "schurscope/textio.hpp"

namespace schurscope {
namespace {

struct Collector {
  CheckResult r;
  void expect(bool ok, const std::string& what) {
    if (!ok) r.pass = false;
    r.lines.push_back((ok ? "ok    " : "FAIL  ") + what);
  }
};

template <class... Args>
std::string cat(const Args&... a) {
  std::ostringstream os;
  (os << ... << a);
  return os.str();
}

CheckResult genus_table() {
  Collector c;
  c.r.pass = true;
  struct Row {
    RamType type;
    std::uint64_t order, genus;
  };
  const std::vector<Row> rows{
      {{2, 3, 8}, 5808, 122}, {{2, 3, 10}, 150, 6},      {{2, 2, 2, 4}, 400, 51}, {{2, 2, 2, 3}, 300, 26},
      {{2, 2, 2, 4}, 72, 10}, {{2, 2, 2, 2, 2}, 72, 19}, {{2, 3, 7}, 504, 7},     {{2, 3, 9}, 504, 15},
      {{2, 2, 2, 3}, 504, 43}, {{2, 4, 5}, 360, 10},
  };
  for (const auto& row : rows) {
    std::uint64_t g = regular_genus(row.type, BigInt(row.order));
    c.expect(g == row.genus, cat(type_str(row.type), " |G|=", row.order, "  genus ", g, " (want ", row.genus, ")"));
  }
  for (const RamType& t : std::vector<RamType>{{2, 3, 6}, {2, 4, 4}, {3, 3, 3}, {2, 2, 2, 2}}) {
    std::uint64_t l = 1;
    for (auto e : t) l = lcm_u64(l, e);
    bool all = classify_type(t).cls == TypeClass::Euclidean;
    for (std::uint64_t k = 1; k <= 200; ++k) all = all && regular_genus(t, BigInt(l * k)) == 1;
    c.expect(all, cat(type_str(t), " Euclidean, genus 1 for |G| = ", l, "k, k <= 200"));
  }
  return c.r;
}

std::string types_str(const std::vector<RamType>& ts) {
  std::string s = "{";
  for (std::size_t i = 0; i < ts.size(); ++i) s += (i ? ", " : "") + type_str(ts[i]);
  return s + "}";
}

CheckResult genus0() {
  Collector c;
  c.r.pass = true;
  struct Row {
    std::string name;
    PermGroup G;
    std::vector<RamType> want;
  };
  std::vector<Row> rows;
  rows.push_back({"PSL2(8) degree 28", psl2_group(8, Psl2Action::NonsplitPairs), {{2, 2, 2, 3}, {2, 3, 7}, {2, 3, 9}}});
  rows.push_back({"PSL2(9) degree 45", psl2_group(9, Psl2Action::SplitPairs), {{2, 4, 5}}});
  rows.push_back({"PSL2(32) degree 496", psl2_group(32, Psl2Action::NonsplitPairs), {}});
  for (auto& row : rows) {
    auto got = genus0_search(row.G, 5).types();
    std::sort(got.begin(), got.end());
    std::sort(row.want.begin(), row.want.end());
    c.expect(got == row.want, cat(row.name, ": ", types_str(got), " (want ", types_str(row.want), ")"));
  }
  return c.r;
}

// Fixed points and index of every element of each listed order.
struct OrderRow {
  std::set<std::uint64_t> chi, index;
  std::size_t count = 0;
};

std::map<std::uint64_t, OrderRow> per_order(const PermGroup& G) {
  std::map<std::uint64_t, OrderRow> out;
  std::uint64_t n = G.order_u64();
  for (std::uint64_t i = 0; i < n; ++i) {
    Perm g = G.element_at(i);
    auto& row = out[g.order()];
    std::uint64_t fixed = 0;
    for (std::size_t x = 0; x < g.degree(); ++x) fixed += g[x] == x;
    row.chi.insert(fixed);
    row.index.insert(ind(g));
    ++row.count;
  }
  return out;
}

std::string set_str(const std::set<std::uint64_t>& s) {
  std::string o;
  for (auto v : s) o += (o.empty() ? "" : "/") + std::to_string(v);
  return o;
}

CheckResult fixed_points() {
  Collector c;
  c.r.pass = true;
  auto psl = per_order(psl2_group(32, Psl2Action::NonsplitPairs));
  auto pgaml = per_order(psl2_group(32, Psl2Action::NonsplitPairs, Psl2Ext::PGammaL));
  c.r.lines.push_back("PSL2(32) on 496 points (order 5: field automorphisms in PGammaL2(32))");
  c.r.lines.push_back("  order   chi   ind   elements");
  struct Want {
    std::uint64_t order, chi, index;
  };
  for (Want w : {Want{2, 16, 240}, Want{3, 1, 330}, Want{5, 1, 396}}) {
    const auto& table = w.order == 5 ? pgaml : psl;
    auto it = table.find(w.order);
    bool ok = it != table.end() && it->second.chi == std::set<std::uint64_t>{w.chi} &&
              it->second.index == std::set<std::uint64_t>{w.index};
    char buf[96];
    std::snprintf(buf, sizeof buf, "  %5llu %5s %5s   %llu", static_cast<unsigned long long>(w.order),
                  it == table.end() ? "-" : set_str(it->second.chi).c_str(),
                  it == table.end() ? "-" : set_str(it->second.index).c_str(),
                  static_cast<unsigned long long>(it == table.end() ? 0 : it->second.count));
    c.expect(ok, buf);
  }
  c.expect(!psl.count(5), "PSL2(32) has no elements of order 5");

  auto small = per_order(psl2_group(8, Psl2Action::NonsplitPairs));
  bool inv = small.count(2) && small[2].chi == std::set<std::uint64_t>{4};
  c.expect(inv, "PSL2(8) on 28 points: involutions fix " + (small.count(2) ? set_str(small[2].chi) : "-"));
  bool odd = true;
  for (const auto& [k, row] : small)
    if (k > 1 && k % 2 == 1) odd = odd && *row.chi.rbegin() <= 1;
  c.expect(odd, "PSL2(8) on 28 points: nontrivial odd-order elements fix at most 1");
  return c.r;
}

PermGroup with(const PermGroup& G, const Perm& x) {
  auto gens = G.generators();
  gens.push_back(x);
  return PermGroup(G.degree(), gens);
}

CheckResult exceptionality() {
  Collector c;
  c.r.pass = true;
  struct Instance {
    std::string name;
    PermGroup G;
    Perm x;
    bool want;
  };
  std::vector<Instance> inst;
  inst.push_back({"(S4, A4, 4)", alternating_group(4), Perm::from_cycles("(0 1)", 4), false});
  inst.push_back({"(S3, C3, 3)", cyclic_group(3), Perm::from_cycles("(0 1)", 3), true});

  PermGroup G28 = psl2_group(8, Psl2Action::NonsplitPairs);
  auto a28 = is_arithmetically_exceptional(psl2_group(8, Psl2Action::NonsplitPairs, Psl2Ext::PGammaL), G28);
  c.expect(a28.arithmetically_exceptional && a28.witness && with(G28, *a28.witness).order() == 1512,
           "(PGammaL2(8), PSL2(8), 28) arithmetically exceptional, witness coset generates the quotient C3");
  if (a28.witness) inst.push_back({"(<PSL2(8), x>, PSL2(8), 28)", G28, *a28.witness, true});

  PermGroup G45 = psl2_group(9, Psl2Action::SplitPairs);
  PermGroup M10 = psl2_group(9, Psl2Action::SplitPairs, Psl2Ext::M10);
  auto a45 = is_arithmetically_exceptional(psl2_group(9, Psl2Action::SplitPairs, Psl2Ext::PGammaL), G45);
  c.expect(a45.arithmetically_exceptional && a45.witness && M10.contains(*a45.witness) &&
               !G45.contains(*a45.witness),
           "(PGammaL2(9), PSL2(9), 45) arithmetically exceptional, witness coset is M10 \\ PSL2(9)");
  c.expect(is_arithmetically_exceptional(M10, G45).arithmetically_exceptional,
           "(M10, PSL2(9), 45) arithmetically exceptional");
  if (a45.witness) inst.push_back({"(M10, PSL2(9), 45)", G45, *a45.witness, true});
  PermGroup PGL = psl2_group(9, Psl2Action::SplitPairs, Psl2Ext::PGL);
  for (const auto& g : PGL.generators())
    if (!G45.contains(g)) {
      inst.push_back({"(PGL2(9), PSL2(9), 45)", G45, g, false});
      break;
    }

  for (std::size_t t : {2u, 5u}) {
    auto ex = build_wreath_diagonal_example(symmetric_group(3), t);
    inst.push_back({cat("wreath S3, t=", t, ", degree ", ex.A.degree()), ex.G, ex.x, t == 5});
  }

  for (const auto& i : inst) {
    PermGroup A = with(i.G, i.x);
    bool common = is_exceptional(A, i.G).exceptional;
    bool average = coset_average_fixed_points(i.G, i.x).on_pairs == 1;
    c.expect(common == i.want && average == common,
             cat(i.name, ": ", common ? "exceptional" : "not exceptional", ", coset average ",
                 average ? "1" : "> 1"));
  }
  return c.r;
}

bool cubic_has_root(std::uint32_t p, long c0) {
  for (std::uint64_t x = 0; x < p; ++x)
    if ((mulmod(mulmod(x, x, p), x, p) + mod_signed(c0, p)) % p == 0) return true;
  return false;
}

bool is_good(const SweepRecord& r) { return r.verdict == Verdict::Bijective || r.verdict == Verdict::NotBijective; }

// Every good record matches pred, and bad records are rare.
void sweep_expect(Collector& c, const SweepReport& rep, const std::function<bool(std::uint32_t)>& pred,
                  const std::string& what) {
  std::size_t good = 0, wrong = 0;
  for (const auto& r : rep.records) {
    if (!is_good(r)) continue;
    ++good;
    wrong += (r.verdict == Verdict::Bijective) != pred(r.p);
  }
  c.expect(wrong == 0 && good + 10 >= rep.records.size(),
           cat(what, ": ", good, " good primes, ", wrong, " mismatches, density ", rep.density_str()));
}

CheckResult sweeps() {
  Collector c;
  c.r.pass = true;
  const std::uint32_t bound = 2000;
  auto iso = schur_sweep(sporadic_degree5(), bound, "isogeny5");
  sweep_expect(c, iso, [](std::uint32_t p) { return kronecker(5, p) == -1; }, "isogeny5 vs (5/p) = -1");
  c.expect(std::abs(iso.density().get_d() - 0.5) <= 0.05, "isogeny5 density within 0.05 of 1/2");

  auto a4 = schur_sweep(a4s4_function(0, 2), bound, "a4s4");
  sweep_expect(c, a4, [](std::uint32_t p) { return !cubic_has_root(p, 2); }, "a4s4(0,2) vs X^3+2 irreducible");
  c.expect(std::abs(a4.density().get_d() - 1.0 / 3) <= 0.05, "a4s4(0,2) density within 0.05 of 1/3");

  auto rc = schur_sweep(redei_composition(), bound, "redei-composition");
  std::size_t bij = 0, good = 0;
  for (const auto& r : rc.records)
    if (r.p > 5 && is_good(r)) {
      ++good;
      bij += r.verdict == Verdict::Bijective;
    }
  c.expect(bij == 0 && good > 250, cat("Redei composition: bijective at ", bij, " of ", good, " good primes > 5"));

  for (unsigned n : {3u, 5u, 7u}) {
    auto d = schur_sweep(dickson(n, ExactScalar(1)), bound, cat("dickson", n));
    sweep_expect(c, d, [n](std::uint32_t p) { return gcd_u64(n, std::uint64_t{p} * p - 1) == 1; },
                 cat("Dickson D_", n, " vs gcd(n, p^2-1) = 1"));
  }
  return c.r;
}

ProjPoint coord(unsigned order, const EllPoint<FqElem>& P) {
  return P.inf ? ProjPoint::infinity() : ProjPoint::finite(descent_coordinate(order, P));
}

bool pointwise(const QRatFunc& R, long a, long b, unsigned m, unsigned order, std::uint32_t p) {
  FqField F = FqField::prime(p);
  EllCurve<FqElem> E{FqElem::from_signed(F, a), FqElem::from_signed(F, b)};
  FqRatFunc Rp = reduce_mod_place(R, p);
  for (const auto& P : affine_points(E))
    if (!(eval_proj(Rp, coord(order, P)) == coord(order, point_mul(E, m, P)))) return false;
  return true;
}

CheckResult elliptic() {
  Collector c;
  c.r.pass = true;
  bool formula = true;
  for (auto [a, b] : std::vector<std::pair<long, long>>{{0, 2}, {-18, 1}, {-7, 6}, {3, -5}}) {
    QRatFunc want = parse_ratfunc(cat("(x^4 - ", 2 * a, "*x^2 - ", 8 * b, "*x + ", a * a, ")/(4*x^3 + ", 4 * a,
                                      "*x + ", 4 * b, ")"));
    formula = formula && xmul_map(a, b, 2) == want && a4s4_function(a, b) == want;
  }
  c.expect(formula, "xmul_map(2) equals the degree-4 formula symbolically");

  bool x3 = true;
  for (std::uint32_t p : {101u, 103u, 107u}) x3 = x3 && pointwise(xmul_map(-18, 1, 3), -18, 1, 3, 2, p);
  c.expect(x3, "xmul_map(3) matches point_mul on y^2 = x^3 - 18x + 1 over F_101, F_103, F_107");

  struct Descent {
    long a, b;
    unsigned m, order;
  };
  for (Descent d : {Descent{-18, 1, 3, 2}, Descent{0, 1, 2, 3}, Descent{0, 2, 5, 3}, Descent{1, 0, 3, 4},
                    Descent{0, 1, 5, 6}}) {
    QRatFunc R = quotient_descent(d.a, d.b, d.m, d.order);
    bool ok = R.degree() == static_cast<int>(d.m * d.m);
    for (std::uint32_t p : {101u, 103u, 107u}) ok = ok && pointwise(R, d.a, d.b, d.m, d.order, p);
    c.expect(ok, cat("descent order ", d.order, ", m=", d.m, " on (a,b)=(", d.a, ",", d.b, "): degree ", R.degree(),
                     ", pointwise mod 101/103/107"));
  }

  for (std::uint32_t p : {13u, 31u, 61u}) c.expect(verify_cm7(p), cat("CM-by-sqrt(-7) function mod ", p));
  c.expect(isogeny5_identity(), "q2(f) = q1 (f'/5)^2 for the degree-5 function");

  auto lat = schur_sweep(quotient_descent(-18, 1, 3, 2), 2000, "lattes-2-3");
  c.expect(lat.density() > 0, "order-2, m=3 map on y^2 = x^3 - 18x + 1: density " + lat.density_str());
  return c.r;
}

CheckResult deg16() {
  Collector c;
  c.r.pass = true;
  Deg16Report rep = deg16_obstruction();
  for (const auto& k : rep.cases)
    c.r.lines.push_back(cat("      ", k.name, " order ", k.order, k.cyclic ? " (cyclic over G)" : "", ": ",
                            k.check.escaping, " of ", k.check.elements, " order-4 normalizers escape"));
  c.expect(verify_deg16_obstruction(), "order-4 normalizers stay inside G");
  return c.r;
}

}  // namespace

const std::vector<std::string>& reference_check_names() {
  static const std::vector<std::string> names{"genus-table", "genus0",   "fixed-points", "exceptionality",
                                              "sweeps",      "elliptic", "deg16"};
  return names;
}

CheckResult run_reference_check(const std::string& name) {
  static const std::map<std::string, CheckResult (*)()> table{
      {"genus-table", genus_table}, {"genus0", genus0},     {"fixed-points", fixed_points},
      {"exceptionality", exceptionality}, {"sweeps", sweeps}, {"elliptic", elliptic}, {"deg16", deg16}};
  auto it = table.find(name);
  if (it == table.end()) throw PreconditionError("unknown check '" + name + "'");
  auto t0 = std::chrono::steady_clock::now();
  CheckResult r;
  try {
    r = it->second();
  } catch (const Error& e) {
    r.pass = false;
    r.lines.push_back(std::string("FAIL  error: ") + e.what());
  }
  r.name = name;
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

}  // namespace schurscope
