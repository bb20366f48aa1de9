// Copyright 2026 The schurscope Authors
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#include "schurscope/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "schurscope/ellipt.hpp"
#include "schurscope/errors.hpp"
#include "schurscope/exceptio.hpp"
#include "schurscope/named.hpp"
#include "schurscope/parallel.hpp"
#include "schurscope/projmap.hpp"
#include "schurscope/ramgenus.hpp"
#include "schurscope/textio.hpp"
#include "schurscope/verify.hpp"

namespace schurscope {
namespace {

using json = nlohmann::ordered_json;

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  for (std::string part; std::getline(ss, part, sep);) out.push_back(part);
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

unsigned to_unsigned(const std::string& s) {
  std::size_t used = 0;
  long v = std::stol(s, &used);
  if (used != s.size() || v < 0) throw ParseError("expected a non-negative integer, got '" + s + "'");
  return static_cast<unsigned>(v);
}

Rational to_rational(const std::string& s) {
  ExactScalar v = parse_scalar(s);
  if (!v.is_rational()) throw ParseError("expected a rational number, got '" + s + "'");
  return v.rational_part();
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw ParseError("cannot write '" + path + "'");
  f << text;
}

json group_json(const PermGroup& G) {
  json gens = json::array();
  for (const auto& g : G.generators()) gens.push_back(g.to_cycles());
  return json{{"degree", G.degree()}, {"order", G.order().get_str()}, {"generators", gens}};
}

}  // namespace

QRatFunc load_function(const std::string& spec) {
  const std::string prefix = "builtin:";
  if (spec.rfind(prefix, 0) != 0) return parse_ratfunc(read_file(spec));
  auto f = split(spec.substr(prefix.size()), ':');
  if (f.empty()) throw ParseError("empty builtin name");
  auto need = [&](std::size_t n) {
    if (f.size() != n + 1) throw ParseError("builtin '" + f[0] + "' takes " + std::to_string(n) + " parameter(s)");
  };
  const std::string& k = f[0];
  if (k == "isogeny5") return need(0), sporadic_degree5();
  if (k == "redei-composition") return need(0), redei_composition();
  if (k == "cm7") {
    if (f.size() == 1) return cm7_function(ExactScalar(1));
    return need(1), cm7_function(ExactScalar(to_rational(f[1])));
  }
  if (k == "power") return need(1), power_function(to_unsigned(f[1]));
  if (k == "dickson") return need(2), dickson(to_unsigned(f[1]), parse_scalar(f[2]));
  if (k == "redei") return need(2), redei(to_unsigned(f[1]), to_rational(f[2]));
  if (k == "redei-f") return need(1), redei_f(std::stol(f[1]));
  if (k == "a4s4") return need(2), a4s4_function(parse_scalar(f[1]), parse_scalar(f[2]));
  throw ParseError("unknown builtin '" + k + "'");
}

PermGroup load_group(const std::string& spec) {
  if (spec.rfind("named:", 0) == 0) return named_group(spec.substr(6));
  json j;
  try {
    j = json::parse(read_file(spec));
  } catch (const json::exception& e) {
    throw ParseError("bad group JSON in '" + spec + "': " + e.what());
  }
  if (j.contains("named")) return named_group(j["named"].get<std::string>());
  if (!j.contains("degree") || !j.contains("generators")) throw ParseError("group JSON needs degree and generators");
  std::size_t n = j["degree"].get<std::size_t>();
  std::vector<Perm> gens;
  for (const auto& g : j["generators"]) gens.push_back(Perm::from_cycles(g.get<std::string>(), n));
  return PermGroup(n, std::move(gens));
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Schur covers: bijectivity sweeps, exceptionality, genus computations"};
  app.require_subcommand(1);
  int workers = 0;
  app.add_option("--workers", workers, "worker threads (default: SCHURSCOPE_WORKERS or all cores)");

  std::string function, outpath, group, normal, type_text, kind, curve;
  std::uint32_t bound = 1000;
  std::uint64_t cap = kDefaultPointCap, order_cap = kGenus0OrderCap;
  std::size_t index_cap = kIndexCap, rmax = 5;
  bool arith = false;
  std::string order_text, n_text = "3", a_text = "1", d_text = "-3", p_text = "0", q_text = "2", b_text = "1",
                         m_text = "1";
  long ea = 0, eb = 0;
  unsigned em = 2, beta = 2;
  std::vector<std::string> checks;

  auto* sweep = app.add_subcommand("sweep", "bijectivity of f on P^1(F_p) for every prime p up to a bound");
  sweep->add_option("--function", function, "builtin:NAME[:ARGS] or a file")->required();
  sweep->add_option("--bound", bound, "prime bound")->check(CLI::PositiveNumber);
  sweep->add_option("--cap", cap, "largest field size tested")->check(CLI::PositiveNumber);
  sweep->add_option("--out", outpath, "report path (default stdout)");

  auto* exc = app.add_subcommand("exceptional", "common-orbit verdict for a pair G <= A");
  exc->add_option("--group", group, "A: JSON file or named:SPEC")->required();
  exc->add_option("--normal", normal, "G: JSON file or named:SPEC")->required();
  exc->add_flag("--arith", arith, "also search cyclic-over-G overgroups");
  exc->add_option("--index-cap", index_cap, "largest |A:G| searched")->check(CLI::PositiveNumber);
  exc->add_option("--out", outpath);

  auto* gen = app.add_subcommand("genus", "classify a ramification type and its regular genus");
  gen->add_option("--type", type_text, "comma-separated indices, e.g. 2,3,8")->required();
  gen->add_option("--order", order_text, "group order");

  auto* g0 = app.add_subcommand("genus0", "genus-0 systems of a transitive group");
  g0->add_option("--group", group, "JSON file or named:SPEC")->required();
  g0->add_option("--rmax", rmax, "largest number of branch points")->check(CLI::PositiveNumber);
  g0->add_option("--order-cap", order_cap, "largest group order searched")->check(CLI::PositiveNumber);
  g0->add_option("--out", outpath);

  auto* fam = app.add_subcommand("family", "print a member of a named family in the text format");
  fam->add_option("kind", kind, "power|dickson|redei|redei-f|redei-composition|a4s4|isogeny5|cm7")->required();
  fam->add_option("--n", n_text);
  fam->add_option("--a", a_text);
  fam->add_option("--d", d_text);
  fam->add_option("--p", p_text);
  fam->add_option("--q", q_text);
  fam->add_option("--m", m_text);
  fam->add_option("--B", b_text);
  fam->add_option("--out", outpath);

  auto* ell = app.add_subcommand("ell", "elliptic curve maps");
  ell->require_subcommand(1);
  auto* desc = ell->add_subcommand("descend", "multiplication by m on y^2 = x^3 + ax + b, pushed to E/<beta>");
  desc->add_option("--a", ea);
  desc->add_option("--b", eb);
  desc->add_option("--curve", curve, "JSON {\"a\": ..., \"b\": ...} instead of --a/--b");
  desc->add_option("--m", em)->check(CLI::PositiveNumber);
  desc->add_option("--beta", beta, "automorphism order: 2, 3, 4 or 6");
  desc->add_option("--out", outpath);

  auto* ver = app.add_subcommand("verify-paper", "recompute the reference tables and verdicts");
  ver->add_option("checks", checks, "subset of checks (default all)");

  auto* grp = app.add_subcommand("group", "describe a group as JSON");
  grp->add_option("spec", group, "JSON file or named:SPEC")->required();
  grp->add_option("--out", outpath);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  if (workers == 0)
    if (const char* env = std::getenv("SCHURSCOPE_WORKERS")) {
      try {
        workers = std::stoi(env);
      } catch (const std::exception&) {
        workers = -1;
      }
      if (workers <= 0) {
        err << "error: SCHURSCOPE_WORKERS must be a positive integer\n";
        return 2;
      }
    }
  if (workers < 0) {
    err << "error: --workers must be positive\n";
    return 2;
  }
  if (workers > 0) set_worker_count(workers);

  try {
    if (*sweep) {
      SweepReport r = schur_sweep(load_function(function), bound, function, cap);
      emit(r.to_json() + "\n", outpath, out);
      if (!outpath.empty())
        out << function << ": " << r.count(Verdict::Bijective) << " bijective, " << r.count(Verdict::NotBijective)
            << " not, density " << r.density_str() << "\n";
    } else if (*exc) {
      PermGroup A = load_group(group), G = load_group(normal);
      auto v = is_exceptional(A, G);
      json j{{"exceptional", v.exceptional}, {"common_orbits", v.common_orbit_count}};
      j["witness"] = v.witness ? json::array({v.witness->first, v.witness->second}) : json(nullptr);
      if (arith) {
        auto a = is_arithmetically_exceptional(A, G, index_cap);
        j["arithmetic"] = {{"exceptional", a.arithmetically_exceptional},
                           {"witness", a.witness ? json(a.witness->to_cycles()) : json(nullptr)},
                           {"cosets_tested", a.cosets_tested}};
      }
      emit(j.dump(2) + "\n", outpath, out);
    } else if (*gen) {
      RamType t;
      for (const auto& e : split(type_text, ',')) t.push_back(to_unsigned(e));
      t = make_type(t);
      auto c = classify_type(t);
      json j{{"type", type_str(t)}, {"class", type_class_name(c.cls)}};
      if (!c.spherical_case.empty()) j["case"] = c.spherical_case;
      if (!order_text.empty()) {
        BigInt order(order_text);
        j["order"] = order.get_str();
        j["genus"] = regular_genus(t, order);
      }
      out << j.dump(2) << "\n";
    } else if (*g0) {
      PermGroup G = load_group(group);
      auto r = genus0_search(G, rmax, Backend::Parallel, order_cap);
      json sys = json::array();
      for (const auto& s : r.systems) {
        json el = json::array();
        for (const auto& g : s.elements) el.push_back(g.to_cycles());
        sys.push_back({{"type", type_str(s.type)}, {"elements", el}});
      }
      json types = json::array();
      for (const auto& t : r.types()) types.push_back(type_str(t));
      json j{{"degree", G.degree()}, {"order", G.order().get_str()}, {"class_count", r.class_count},
             {"candidates", r.candidates}, {"types", types}, {"systems", sys}};
      emit(j.dump(2) + "\n", outpath, out);
    } else if (*fam) {
      QRatFunc f;
      if (kind == "power") f = power_function(to_unsigned(n_text));
      else if (kind == "dickson") f = dickson(to_unsigned(n_text), parse_scalar(a_text));
      else if (kind == "redei") f = redei(to_unsigned(n_text), to_rational(d_text));
      else if (kind == "redei-f") f = redei_f(std::stol(m_text));
      else if (kind == "redei-composition") f = redei_composition();
      else if (kind == "a4s4") f = a4s4_function(parse_scalar(p_text), parse_scalar(q_text));
      else if (kind == "isogeny5") f = sporadic_degree5();
      else if (kind == "cm7") f = cm7_function(ExactScalar(to_rational(b_text)));
      else throw ParseError("unknown family '" + kind + "'");
      emit(to_text(f) + "\n", outpath, out);
    } else if (*desc) {
      ExactScalar a(ea), b(eb);
      if (!curve.empty()) {
        json j = json::parse(read_file(curve));
        a = parse_scalar(j.at("a").get<std::string>());
        b = parse_scalar(j.at("b").get<std::string>());
      }
      emit(to_text(quotient_descent(a, b, em, beta)) + "\n", outpath, out);
    } else if (*ver) {
      if (checks.empty()) checks = reference_check_names();
      bool all = true;
      for (const auto& name : checks) {
        CheckResult r = run_reference_check(name);
        all = all && r.pass;
        char head[128];
        std::snprintf(head, sizeof head, "%s %-15s %8.2fs", r.pass ? "PASS" : "FAIL", r.name.c_str(), r.seconds);
        out << head << "\n";
        for (const auto& l : r.lines) out << "    " << l << "\n";
      }
      return all ? 0 : 1;
    } else if (*grp) {
      emit(group_json(load_group(group)).dump(2) + "\n", outpath, out);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: malformed number\n";
    return 2;
  } catch (const std::out_of_range& e) {
    err << "error: number out of range\n";
    return 2;
  }
  return 0;
}

}  // namespace schurscope
