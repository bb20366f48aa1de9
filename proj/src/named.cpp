// Copyright 2026 The schurscope Authors
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#include "schurscope/named.hpp"

#include <cctype>
#include <map>
#include <memory>
#include <sstream>

#include "schurscope/errors.hpp"
#include "schurscope/ntheory.hpp"

namespace schurscope {

namespace {

// z -> (a z^(p^e) + b) / (c z^(p^e) + d) on P^1(F_Q); kInf encodes infinity.
struct Mobius {
  std::uint32_t a, b, c, d, e;
};

class Psl2Builder {
 public:
  explicit Psl2Builder(std::uint32_t q) {
    auto pf = prime_factors(q);
    if (pf.size() != 1) throw PreconditionError("q must be a prime power");
    p_ = static_cast<std::uint32_t>(pf[0]);
    k_ = 0;
    for (std::uint32_t t = q; t > 1; t /= p_) ++k_;
    q_ = q;
    F_ = std::make_unique<GaloisField>(p_, 2 * k_);
    inf_ = F_->q();
    zeta_ = F_->exp(q_ + 1);  // generates F_q^*
  }

  std::uint32_t zeta() const { return zeta_; }
  std::uint32_t p() const { return p_; }
  const GaloisField& field() const { return *F_; }
  bool in_subfield(std::uint32_t z) const { return F_->frob(z, k_) == z; }

  std::uint32_t apply(const Mobius& m, std::uint32_t z) const {
    const GaloisField& F = *F_;
    if (z == inf_) return m.c == 0 ? inf_ : F.div(m.a, m.c);
    std::uint32_t zz = F.frob(z, m.e);
    std::uint32_t den = F.add(F.mul(m.c, zz), m.d);
    if (den == 0) return inf_;
    return F.div(F.add(F.mul(m.a, zz), m.b), den);
  }

  std::vector<Mobius> generators(Psl2Ext ext) const {
    const GaloisField& F = *F_;
    std::uint32_t one = 1, zero = 0, m1 = F.neg(1);
    std::vector<Mobius> g{{one, one, zero, one, 0}, {zero, m1, one, zero, 0}, {zeta_, zero, zero, F.inv(zeta_), 0}};
    Mobius diag{zeta_, zero, zero, one, 0}, frob{one, zero, zero, one, 1};
    switch (ext) {
      case Psl2Ext::PSL: break;
      case Psl2Ext::PGL: g.push_back(diag); break;
      case Psl2Ext::PSigmaL: g.push_back(frob); break;
      case Psl2Ext::PGammaL:
        g.push_back(diag);
        g.push_back(frob);
        break;
      case Psl2Ext::M10:
        if (q_ != 9) throw PreconditionError("M10 is defined for q = 9 only");
        g.push_back(Mobius{zeta_, zero, zero, one, 1});
        break;
    }
    return g;
  }

  PermGroup build(Psl2Action action, Psl2Ext ext) const {
    const GaloisField& F = *F_;
    std::vector<std::uint32_t> line;  // points of P^1(F_q)
    for (std::uint32_t z = 0; z < F.q(); ++z)
      if (in_subfield(z)) line.push_back(z);
    line.push_back(inf_);
    std::map<std::pair<std::uint32_t, std::uint32_t>, std::size_t> index;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> pts;
    auto canon = [](std::uint32_t u, std::uint32_t v) { return u < v ? std::make_pair(u, v) : std::make_pair(v, u); };
    switch (action) {
      case Psl2Action::Projective:
        for (auto z : line) pts.push_back({z, z});
        break;
      case Psl2Action::SplitPairs:
        for (std::size_t i = 0; i < line.size(); ++i)
          for (std::size_t j = i + 1; j < line.size(); ++j) pts.push_back(canon(line[i], line[j]));
        break;
      case Psl2Action::NonsplitPairs:
        for (std::uint32_t z = 0; z < F.q(); ++z) {
          if (in_subfield(z)) continue;
          auto pr = canon(z, F.frob(z, k_));
          if (pr.first == z) pts.push_back(pr);
        }
        break;
    }
    if (pts.size() > kDegreeCap) throw CapExceeded("PSL2 action degree exceeds the cap");
    for (std::size_t i = 0; i < pts.size(); ++i) index[pts[i]] = i;
    std::vector<Perm> gens;
    for (const auto& m : generators(ext)) {
      std::vector<Point> img(pts.size());
      for (std::size_t i = 0; i < pts.size(); ++i)
        img[i] = static_cast<Point>(index.at(canon(apply(m, pts[i].first), apply(m, pts[i].second))));
      gens.push_back(Perm(std::move(img)));
    }
    return PermGroup(pts.size(), gens);
  }

 private:
  std::uint32_t p_ = 0, k_ = 0, q_ = 0, inf_ = 0, zeta_ = 0;
  std::unique_ptr<GaloisField> F_;
};

std::uint64_t ipow(std::uint64_t b, std::uint32_t e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

}  // namespace

PermGroup psl2_group(std::uint32_t q, Psl2Action action, Psl2Ext ext) {
  return Psl2Builder(q).build(action, ext);
}

Perm linear_perm(const Matrix& m, std::uint32_t e, std::uint32_t p) {
  if (m.size() != e) throw PreconditionError("matrix size does not match the dimension");
  std::uint64_t n = ipow(p, e);
  std::vector<Point> img(n);
  std::vector<long> v(e), w(e);
  for (std::uint64_t x = 0; x < n; ++x) {
    std::uint64_t t = x;
    for (std::uint32_t i = 0; i < e; ++i) {
      v[i] = static_cast<long>(t % p);
      t /= p;
    }
    // row vector times matrix: w_j = sum_i v_i m[i][j]
    std::uint64_t y = 0;
    for (std::uint32_t j = e; j-- > 0;) {
      if (m[j].size() != e) throw PreconditionError("matrix is not square");
      long s = 0;
      for (std::uint32_t i = 0; i < e; ++i) s += v[i] * m[i][j];
      y = y * p + mod_signed(s, p);
    }
    img[x] = static_cast<Point>(y);
  }
  return Perm(std::move(img));  // throws unless the matrix is invertible
}

Perm translation_perm(const std::vector<long>& v, std::uint32_t e, std::uint32_t p) {
  std::uint64_t n = ipow(p, e);
  std::vector<Point> img(n);
  for (std::uint64_t x = 0; x < n; ++x) {
    std::uint64_t t = x, y = 0, scale = 1;
    for (std::uint32_t i = 0; i < e; ++i) {
      y += (t % p + mod_signed(v[i], p)) % p * scale;
      t /= p;
      scale *= p;
    }
    img[x] = static_cast<Point>(y);
  }
  return Perm(std::move(img));
}

PermGroup agl_group(std::uint32_t e, std::uint32_t p, const std::vector<Matrix>& subgroup) {
  if (!is_prime(p) || e == 0) throw PreconditionError("agl needs a prime p and e >= 1");
  std::uint64_t n = ipow(p, e);
  if (n > kDegreeCap) throw CapExceeded("affine degree exceeds the cap");
  std::vector<Perm> gens;
  for (std::uint32_t i = 0; i < e; ++i) {
    std::vector<long> v(e, 0);
    v[i] = 1;
    gens.push_back(translation_perm(v, e, p));
  }
  std::vector<Matrix> mats = subgroup;
  if (mats.empty()) {
    GaloisField Fp(p, 1);
    Matrix d(e, std::vector<long>(e, 0));
    for (std::uint32_t i = 0; i < e; ++i) d[i][i] = 1;
    Matrix z = d;
    z[0][0] = Fp.primitive();
    mats.push_back(z);
    for (std::uint32_t i = 0; i < e; ++i)
      for (std::uint32_t j = 0; j < e; ++j) {
        if (i == j) continue;
        Matrix t = d;
        t[i][j] = 1;
        mats.push_back(t);
      }
  }
  for (const auto& m : mats) {
    try {
      gens.push_back(linear_perm(m, e, p));
    } catch (const PreconditionError& err) {
      throw PreconditionError(std::string("subgroup generator is not an invertible matrix: ") + err.what());
    }
  }
  return PermGroup(n, gens);
}

Perm semilinear1_perm(const GaloisField& F, const Semilinear1& m) {
  std::vector<Point> img(F.q());
  for (std::uint32_t z = 0; z < F.q(); ++z) img[z] = static_cast<Point>(F.add(F.mul(m.a, F.frob(z, m.frob)), m.b));
  return Perm(std::move(img));
}

PermGroup symmetric_group(std::size_t n) {
  if (n == 1) return PermGroup(1, {});
  std::vector<Point> c(n);
  for (std::size_t i = 0; i < n; ++i) c[i] = static_cast<Point>((i + 1) % n);
  std::vector<Point> t(n);
  for (std::size_t i = 0; i < n; ++i) t[i] = static_cast<Point>(i);
  std::swap(t[0], t[1]);
  return PermGroup(n, {Perm(c), Perm(t)});
}

PermGroup alternating_group(std::size_t n) {
  std::vector<Perm> gens;
  for (std::size_t k = 2; k < n; ++k) {
    std::vector<Point> g(n);
    for (std::size_t i = 0; i < n; ++i) g[i] = static_cast<Point>(i);
    g[0] = 1;
    g[1] = static_cast<Point>(k);
    g[k] = 0;
    gens.push_back(Perm(g));
  }
  return PermGroup(n, gens);
}

PermGroup cyclic_group(std::size_t n) {
  std::vector<Point> c(n);
  for (std::size_t i = 0; i < n; ++i) c[i] = static_cast<Point>((i + 1) % n);
  return PermGroup(n, {Perm(c)});
}

std::vector<Matrix> parse_matrices(std::string_view text) {
  std::vector<Matrix> out;
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  std::size_t i = 0;
  auto expect = [&](char c) {
    if (i >= s.size() || s[i] != c) throw ParseError("malformed matrix list: " + s);
    ++i;
  };
  while (i < s.size()) {
    Matrix m;
    expect('[');
    for (;;) {
      expect('[');
      std::vector<long> row;
      for (;;) {
        std::size_t b = i;
        if (i < s.size() && s[i] == '-') ++i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (b == i) throw ParseError("malformed matrix entry: " + s);
        row.push_back(std::stol(s.substr(b, i - b)));
        if (i < s.size() && s[i] == ',') {
          ++i;
          continue;
        }
        break;
      }
      expect(']');
      m.push_back(row);
      if (i < s.size() && s[i] == ',') {
        ++i;
        continue;
      }
      break;
    }
    expect(']');
    out.push_back(m);
    if (i < s.size() && s[i] == ';') ++i;
  }
  return out;
}

PermGroup named_group(std::string_view spec) {
  std::istringstream in{std::string(spec)};
  std::string name;
  in >> name;
  std::vector<std::string> args;
  std::map<std::string, std::string> opts;
  for (std::string tok; in >> tok;) {
    auto eq = tok.find('=');
    if (eq == std::string::npos)
      args.push_back(tok);
    else
      opts[tok.substr(0, eq)] = tok.substr(eq + 1);
  }
  auto need = [&](std::size_t k) {
    if (args.size() != k) throw ParseError("wrong number of arguments in group spec: " + std::string(spec));
  };
  auto num = [&](std::size_t i) { return static_cast<std::uint32_t>(std::stoul(args.at(i))); };
  static const std::map<std::string, Psl2Ext> exts{{"psl2", Psl2Ext::PSL},
                                                   {"pgl2", Psl2Ext::PGL},
                                                   {"psigmal2", Psl2Ext::PSigmaL},
                                                   {"pgaml2", Psl2Ext::PGammaL},
                                                   {"m10", Psl2Ext::M10}};
  if (auto it = exts.find(name); it != exts.end()) {
    std::uint32_t q = 9;
    if (it->second != Psl2Ext::M10) {
      need(1);
      q = num(0);
    } else if (!args.empty()) {
      need(1);
      q = num(0);
    }
    Psl2Action action = Psl2Action::Projective;
    if (auto on = opts.find("on"); on != opts.end()) {
      std::string sub = on->second;
      if (sub.rfind("cosets:", 0) != 0) throw ParseError("expected on=cosets:<subgroup>");
      sub = sub.substr(7);
      if (sub == "borel")
        action = Psl2Action::Projective;
      else if (sub == "split-torus-normalizer")
        action = Psl2Action::SplitPairs;
      else if (sub == "nonsplit-torus-normalizer")
        action = Psl2Action::NonsplitPairs;
      else
        throw ParseError("unknown subgroup name '" + sub +
                         "' (borel, split-torus-normalizer, nonsplit-torus-normalizer)");
    }
    return psl2_group(q, action, it->second);
  }
  if (name == "agl") {
    need(2);
    std::vector<Matrix> mats;
    if (auto sg = opts.find("subgroup"); sg != opts.end()) mats = parse_matrices(sg->second);
    return agl_group(num(0), num(1), mats);
  }
  if (name == "sym") {
    need(1);
    return symmetric_group(num(0));
  }
  if (name == "alt") {
    need(1);
    return alternating_group(num(0));
  }
  if (name == "cyclic") {
    need(1);
    return cyclic_group(num(0));
  }
  throw ParseError("unknown group name '" + name + "'");
}

}  // namespace schurscope
