// Copyright 2026 The schurscope Authors
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#include "schurscope/projmap.hpp"


#include "json.hpp"

namespace schurscope {

namespace {

ProjPoint at_infinity(const FqRatFunc& f) {
  int dn = f.num().degree(), dd = f.den().degree();
  if (dn > dd) return ProjPoint::infinity();
  if (dn < dd) return ProjPoint::finite(FqElem(f.den().lead().field(), 0));
  return ProjPoint::finite(f.num().lead() / f.den().lead());
}

// Horner evaluation on raw residues; ext = 1 only.
class PrimeEvaluator {
 public:
  explicit PrimeEvaluator(const FqRatFunc& f) : p_(f.den().lead().field().p) {
    for (const auto& c : f.num().coeffs()) num_.push_back(c.a());
    for (const auto& c : f.den().coeffs()) den_.push_back(c.a());
    inf_code_ = proj_code(at_infinity(f), p_);
  }
  std::uint32_t operator()(std::uint64_t x) const {
    if (x == p_) return static_cast<std::uint32_t>(inf_code_);
    std::uint64_t d = horner(den_, x);
    if (d == 0) return static_cast<std::uint32_t>(p_);
    return static_cast<std::uint32_t>(horner(num_, x) * invmod(d, p_) % p_);
  }

 private:
  std::uint64_t horner(const std::vector<std::uint64_t>& c, std::uint64_t x) const {
    std::uint64_t r = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) r = (r * x + *it) % p_;
    return r;
  }
  std::uint64_t p_;
  std::uint64_t inf_code_;
  std::vector<std::uint64_t> num_, den_;
};

}  // namespace

ProjPoint eval_proj(const FqRatFunc& f, const ProjPoint& x) {
  if (x.inf) return at_infinity(f);
  FqElem d = f.den().eval(x.v);
  if (d.is_zero()) return ProjPoint::infinity();
  return ProjPoint::finite(f.num().eval(x.v) / d);
}

std::vector<std::uint32_t> image_codes(const FqRatFunc& f, Backend backend) {
  const FqField F = f.den().lead().field();
  const std::int64_t n = static_cast<std::int64_t>(F.size()) + 1;
  std::vector<std::uint32_t> out(static_cast<std::size_t>(n));
  if (F.ext == 1) {
    PrimeEvaluator ev(f);
    if (backend == Backend::Parallel) {
#pragma omp parallel for schedule(static)
      for (std::int64_t i = 0; i < n; ++i) out[i] = ev(static_cast<std::uint64_t>(i));
    } else {
      for (std::int64_t i = 0; i < n; ++i) out[i] = ev(static_cast<std::uint64_t>(i));
    }
    return out;
  }
  const std::uint64_t q = F.size();
  auto one = [&](std::int64_t i) {
    return static_cast<std::uint32_t>(proj_code(eval_proj(f, proj_from_code(F, static_cast<std::uint64_t>(i))), q));
  };
  if (backend == Backend::Parallel) {
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < n; ++i) out[i] = one(i);
  } else {
    for (std::int64_t i = 0; i < n; ++i) out[i] = one(i);
  }
  return out;
}

Bijectivity is_bijective(const FqRatFunc& f, std::uint64_t cap, Backend backend) {
  const FqField F = f.den().lead().field();
  if (F.size() + 1 > cap) throw CapExceeded("q+1 = " + std::to_string(F.size() + 1) + " exceeds the point cap");
  std::vector<std::uint32_t> img = image_codes(f, backend);
  std::vector<bool> hit(img.size(), false);
  for (std::size_t i = 0; i < img.size(); ++i) {
    if (!hit[img[i]]) {
      hit[img[i]] = true;
      continue;
    }
    std::size_t j = 0;
    while (img[j] != img[i]) ++j;
    return Bijectivity{false, std::make_pair(proj_from_code(F, j), proj_from_code(F, i))};
  }
  return Bijectivity{true, std::nullopt};
}

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Bijective: return "bijective";
    case Verdict::NotBijective: return "not-bijective";
    case Verdict::BadReduction: return "bad-reduction";
    case Verdict::Ramified: return "ramified";
    case Verdict::OverCap: return "over-cap";
  }
  return "?";
}

std::size_t SweepReport::count(Verdict v) const {
  std::size_t n = 0;
  for (const auto& r : records) n += r.verdict == v;
  return n;
}

Rational SweepReport::density() const {
  std::size_t b = count(Verdict::Bijective), nb = count(Verdict::NotBijective);
  if (b + nb == 0) return Rational(0);
  Rational d(static_cast<unsigned long>(b), static_cast<unsigned long>(b + nb));
  d.canonicalize();
  return d;
}

std::string SweepReport::density_str() const {
  Rational d = density();
  return d.get_num().get_str() + "/" + d.get_den().get_str();
}

std::string SweepReport::to_json() const {
  nlohmann::ordered_json j;
  j["function"] = function;
  j["records"] = nlohmann::ordered_json::array();
  for (const auto& r : records)
    j["records"].push_back({{"p", r.p}, {"verdict", verdict_name(r.verdict)}, {"place_degree", r.place_degree}});
  j["density"] = density_str();
  return j.dump(2);
}

namespace {

SweepRecord sweep_one(const QRatFunc& f, long tag, std::uint32_t p, std::uint64_t cap) {
  SweepRecord rec;
  rec.p = p;
  try {
    Place pl = default_place(tag, p);
    rec.place_degree = pl.degree();
    if (pl.field.size() + 1 > cap) {
      rec.verdict = Verdict::OverCap;
      return rec;
    }
    FqRatFunc fp = reduce_mod_place(f, pl);
    rec.verdict = is_bijective(fp, cap, Backend::Serial).bijective ? Verdict::Bijective : Verdict::NotBijective;
  } catch (const RamifiedPlace&) {
    rec.verdict = Verdict::Ramified;
  } catch (const BadReduction&) {
    rec.verdict = Verdict::BadReduction;
  }
  return rec;
}

}  // namespace

SweepReport schur_sweep(const QRatFunc& f, std::uint32_t prime_bound, const std::string& name, std::uint64_t cap,
                        Backend backend) {
  if (prime_bound < 3) throw PreconditionError("prime bound must be at least 3");
  long tag = field_tag(f);
  std::vector<std::uint32_t> primes;
  for (std::uint32_t p : primes_up_to(prime_bound))
    if (p != 2) primes.push_back(p);
  SweepReport rep;
  rep.function = name;
  rep.records.resize(primes.size());
  const std::int64_t n = static_cast<std::int64_t>(primes.size());
  if (backend == Backend::Parallel) {
#pragma omp parallel for schedule(dynamic, 4)
    for (std::int64_t i = 0; i < n; ++i) rep.records[i] = sweep_one(f, tag, primes[i], cap);
  } else {
    for (std::int64_t i = 0; i < n; ++i) rep.records[i] = sweep_one(f, tag, primes[i], cap);
  }
  return rep;
}

}  // namespace schurscope
