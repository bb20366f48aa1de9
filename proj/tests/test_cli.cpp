// Copyright 2026 The schurscope Authors
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "schurscope/cli.hpp"
#include "schurscope/ellipt.hpp"
#include "schurscope/named.hpp"
#include "schurscope/ntheory.hpp"
#include "schurscope/ramgenus.hpp"
#include "schurscope/textio.hpp"

using namespace schurscope;
using json = nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& body) {
  auto path = std::filesystem::temp_directory_path() / ("schurscope_cli_" + name);
  std::ofstream(path) << body;
  return path.string();
}

}  // namespace

TEST_CASE("usage errors exit 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"sweep", "--bogus"}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"sweep", "--bound", "10"}).code == 2);  // --function missing
  CHECK(run({"sweep", "--function", "builtin:nope", "--bound", "10"}).code == 2);
  CHECK(run({"sweep", "--function", "builtin:dickson:5", "--bound", "10"}).code == 2);
  CHECK(run({"sweep", "--function", temp_file("bad.rat", "x^^2"), "--bound", "10"}).code == 2);
  CHECK(run({"sweep", "--function", "/nonexistent/f.rat", "--bound", "10"}).code == 2);
  CHECK(run({"genus", "--type", "1,2"}).code == 2);
  CHECK(run({"genus", "--type", "2,x"}).code == 2);
  CHECK(run({"verify-paper", "no-such-check"}).code == 2);
  CHECK(run({"exceptional", "--group", "named:sym 4", "--normal", "named:psl2 4"}).code == 2);
  Run r = run({"sweep", "--bogus"});
  CHECK(!r.err.empty());
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("sweep report") {
  Run a = run({"sweep", "--function", "builtin:isogeny5", "--bound", "500"});
  REQUIRE(a.code == 0);
  json j = json::parse(a.out);
  CHECK(j["function"] == "builtin:isogeny5");
  std::string dens = j["density"];
  auto slash = dens.find('/');
  REQUIRE(slash != std::string::npos);
  double d = std::stod(dens.substr(0, slash)) / std::stod(dens.substr(slash + 1));
  CHECK(std::abs(d - 0.5) < 0.1);
  std::uint32_t last = 0;
  for (const auto& rec : j["records"]) {
    CHECK(rec["p"].get<std::uint32_t>() > last);
    last = rec["p"];
    if (rec["verdict"] == "bijective") CHECK(kronecker(5, last) == -1);
    if (rec["verdict"] == "not-bijective") CHECK(kronecker(5, last) == 1);
  }
  CHECK(last == 499);

  // byte-identical reruns, whatever the worker count
  CHECK(run({"sweep", "--function", "builtin:isogeny5", "--bound", "500"}).out == a.out);
  CHECK(run({"--workers", "1", "sweep", "--function", "builtin:isogeny5", "--bound", "500"}).out == a.out);
  setenv("SCHURSCOPE_WORKERS", "2", 1);
  CHECK(run({"sweep", "--function", "builtin:isogeny5", "--bound", "500"}).out == a.out);
  setenv("SCHURSCOPE_WORKERS", "zero", 1);
  CHECK(run({"sweep", "--function", "builtin:isogeny5", "--bound", "500"}).code == 2);
  unsetenv("SCHURSCOPE_WORKERS");

  // a function from a file, written to a report file
  std::string f = temp_file("cube.rat", "x^3 + 1\n");
  std::string out = (std::filesystem::temp_directory_path() / "schurscope_cli_report.json").string();
  Run b = run({"sweep", "--function", f, "--bound", "200", "--out", out});
  REQUIRE(b.code == 0);
  std::ifstream in(out);
  json k = json::parse(in);
  for (const auto& rec : k["records"]) {
    std::uint32_t p = rec["p"];
    if (p > 3) CHECK((rec["verdict"] == "bijective") == (p % 3 == 2));
  }
}

TEST_CASE("family output parses back") {
  Run d = run({"family", "dickson", "--n", "5", "--a", "1"});
  REQUIRE(d.code == 0);
  CHECK(parse_ratfunc(d.out) == parse_ratfunc("x^5 - 5*x^3 + 5*x"));
  Run r = run({"family", "redei", "--n", "3", "--d", "-3"});
  REQUIRE(r.code == 0);
  CHECK(parse_ratfunc(r.out) == parse_ratfunc("(x^3 - 9*x)/(3*x^2 - 3)"));
  Run a = run({"family", "a4s4", "--p", "0", "--q", "2"});
  REQUIRE(a.code == 0);
  CHECK(parse_ratfunc(a.out) == parse_ratfunc("(x^4 - 16*x)/(4*x^3 + 8)"));
  CHECK(run({"family", "cm7", "--B", "2"}).code == 0);
  CHECK(run({"family", "nonsense"}).code == 2);
  CHECK(load_function("builtin:redei-composition").degree() == 27);
}

TEST_CASE("genus and genus0") {
  Run g = run({"genus", "--type", "8,3,2", "--order", "5808"});
  REQUIRE(g.code == 0);
  json j = json::parse(g.out);
  CHECK(j["type"] == "(2,3,8)");
  CHECK(j["genus"] == 122);
  CHECK(j["class"] == "hyperbolic");
  json s = json::parse(run({"genus", "--type", "2,2,5"}).out);
  CHECK(s["class"] == "sub-Euclidean");
  CHECK(s["case"] == "(2,2,k)");

  Run z = run({"genus0", "--group", "named:psl2 8 on=cosets:nonsplit-torus-normalizer"});
  REQUIRE(z.code == 0);
  json t = json::parse(z.out);
  CHECK(t["degree"] == 28);
  CHECK(t["types"] == json::array({"(2,2,2,3)", "(2,3,7)", "(2,3,9)"}));
  // each system multiplies to 1 and has the listed type
  for (const auto& sys : t["systems"]) {
    Perm prod = Perm::identity(28);
    RamType type;
    for (const auto& e : sys["elements"]) {
      Perm p = Perm::from_cycles(e.get<std::string>(), 28);
      prod = prod * p;
      type.push_back(p.order());
    }
    CHECK(prod == Perm::identity(28));
    CHECK(type_str(make_type(type)) == sys["type"]);
  }
}

TEST_CASE("group files and exceptionality") {
  Run g = run({"group", "named:sym 3"});
  REQUIRE(g.code == 0);
  json s3 = json::parse(g.out);
  CHECK(s3["order"] == "6");
  std::string a = temp_file("s3.json", g.out);
  std::string c = temp_file("c3.json", R"j({"degree": 3, "generators": ["(0 1 2)"]})j");
  json v = json::parse(run({"exceptional", "--group", a, "--normal", c, "--arith"}).out);
  CHECK(v["exceptional"] == true);
  CHECK(v["common_orbits"] == 1);
  CHECK(v["arithmetic"]["exceptional"] == true);

  json w = json::parse(run({"exceptional", "--group", "named:sym 4", "--normal", "named:alt 4"}).out);
  CHECK(w["exceptional"] == false);
  CHECK(w["witness"].is_array());
  CHECK(run({"exceptional", "--group", temp_file("junk.json", "{"), "--normal", c}).code == 2);

  json p = json::parse(run({"exceptional", "--group", "named:pgaml2 8 on=cosets:nonsplit-torus-normalizer",
                            "--normal", "named:psl2 8 on=cosets:nonsplit-torus-normalizer", "--arith"})
                           .out);
  CHECK(p["exceptional"] == true);  // A/G is already cyclic
  CHECK(p["arithmetic"]["exceptional"] == true);
  CHECK(p["arithmetic"]["witness"].is_string());
}

TEST_CASE("ell descend") {
  Run r = run({"ell", "descend", "--a", "0", "--b", "1", "--m", "2", "--beta", "3"});
  REQUIRE(r.code == 0);
  CHECK(parse_ratfunc(r.out) == parse_ratfunc("(x^4 + 18*x^2 - 27)/(8*x^3)"));
  std::string curve = temp_file("curve.json", R"({"a": "-18", "b": "1"})");
  Run c = run({"ell", "descend", "--curve", curve, "--m", "3", "--beta", "2"});
  REQUIRE(c.code == 0);
  CHECK(parse_ratfunc(c.out) == xmul_map(-18, 1, 3));
  CHECK(run({"ell", "descend", "--a", "1", "--b", "1", "--m", "2", "--beta", "3"}).code == 2);
  CHECK(run({"ell"}).code == 2);
}

TEST_CASE("verify-paper") {
  Run r = run({"verify-paper", "genus-table"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("PASS genus-table", 0) == 0);
  CHECK(run({"verify-paper", "genus-table", "deg16"}).code == 0);
}
