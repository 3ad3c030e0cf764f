#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "doctest.h"
#include "epistrict/cli.hpp"
#include "epistrict/epistricted.hpp"
#include "epistrict/serialize.hpp"
#include "epistrict/stabilizer.hpp"
#include "json.hpp"

using namespace epistrict;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string fixture(const std::string& name) { return std::string(EPISTRICT_FIXTURES) + "/" + name; }

std::size_t count(const std::string& s, char c) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), c)); }

std::size_t lines(const std::string& s) { return count(s, '\n'); }

}  // namespace

TEST_CASE("states") {
  const Run a = run({"states", "--d", "3"});
  REQUIRE(a.code == 0);
  CHECK(a.out.find("12 pure states, 4 Lagrangian subspaces") != std::string::npos);
  CHECK(count(a.out, '#') == 36);
  // first listed state: q known, value 0, which is the left column
  CHECK(a.out.find("state 1: known {(1,0)} values (0)\n  #..\n  #..\n  #..\n") != std::string::npos);
  // p known, value 0, is the bottom row
  CHECK(a.out.find("state 4: known {(0,1)} values (0)\n  ...\n  ...\n  ###\n") != std::string::npos);

  const Run five = run({"states", "--d", "5"});
  CHECK(five.out.find("30 pure states") != std::string::npos);
  CHECK(count(five.out, '#') == 150);

  const Run j = run({"states", "--d", "3", "--format", "json"});
  REQUIRE(j.code == 0);
  const json doc = json::parse(j.out);
  CHECK(doc["count"] == 12);
  const auto states = enumerate_pure_states(PrimeField(3), 1);
  REQUIRE(doc["states"].size() == states.size());
  std::size_t points = 0;
  for (std::size_t i = 0; i < states.size(); ++i) {
    const auto& js = doc["states"][i];
    CHECK(js["values"].get<std::vector<Elem>>() == states[i].values());
    const auto b = js["basis"][0].get<std::vector<Elem>>();
    CHECK(FpVector(PrimeField(3), b) == states[i].known().basis()[0]);
    const auto sup = to_ontic(states[i]).support();
    REQUIRE(js["support"].size() == sup.size());
    for (std::size_t k = 0; k < sup.size(); ++k) CHECK(FpVector(PrimeField(3), js["support"][k].get<std::vector<Elem>>()) == sup[k]);
    points += sup.size();
  }

  const Run c = run({"states", "--d", "3", "--format", "csv"});
  REQUIRE(c.code == 0);
  CHECK(lines(c.out) == points + 1);
  CHECK(c.out.rfind("state,basis,values,point\n0,\"{(1,0)}\",\"(0)\",\"(0,0)\"\n", 0) == 0);

  const Run two = run({"states", "--d", "3", "--n", "2", "--format", "json"});
  CHECK(json::parse(two.out)["count"] == 360);
}

TEST_CASE("check") {
  const Run a = run({"check", "--d", "3", "--format", "json"});
  REQUIRE(a.code == 0);
  const json doc = json::parse(a.out);
  CHECK(doc["passed"] == true);
  CHECK(doc["groupoid"]["objects"] == json({"1", "4", "7"}));
  CHECK(doc["groupoid"]["arrows"] == 9);
  for (const char* k : {"F", "M", "A", "U", "C"}) CHECK(doc["axioms"][k] == true);

  CHECK(run({"check", "--algebra", fixture("spek3.alg")}).code == 0);
  const Run m = run({"check", "--algebra", fixture("spek3_mutated.alg")});
  CHECK(m.code == 1);
  CHECK(m.out.find("failing axioms:") != std::string::npos);
  CHECK(m.out.find("FAIL") != std::string::npos);
  const json mj = json::parse(run({"check", "--algebra", fixture("spek3_mutated.alg"), "--format", "json"}).out);
  CHECK(mj["passed"] == false);
  CHECK_FALSE(mj.contains("groupoid"));

  const Run e = run({"check", "--algebra", fixture("empty.alg")});
  CHECK(e.code == 2);
  CHECK(e.err.find("parse error") != std::string::npos);
  CHECK(run({"check", "--algebra", fixture("missing.alg")}).code == 2);

  const Run csv = run({"check", "--d", "5", "--format", "csv"});
  CHECK(csv.code == 0);
  CHECK(csv.out.find("arrows,25") != std::string::npos);
}

TEST_CASE("quantize") {
  const Run a = run({"quantize", "--d", "3", "--state", "1,0=0", "--format", "json"});
  REQUIRE(a.code == 0);
  const json doc = json::parse(a.out);
  const CMatrix p = cmatrix_from_json(doc["states"][0]["projector"]);
  CMatrix expected(3, 3);
  expected(0, 0) = 1.0;
  CHECK(p == expected);
  CHECK(doc["states"][0]["pvms"][0]["projectors"].size() == 3);
  CHECK(doc["states"][0]["wigner"].size() == 9);

  const Run all = run({"quantize", "--d", "3", "--all", "--format", "json"});
  REQUIRE(all.code == 0);
  const json aj = json::parse(all.out);
  REQUIRE(aj["states"].size() == 12);
  const auto states = enumerate_pure_states(PrimeField(3), 1);
  for (std::size_t i = 0; i < 12; ++i) {
    CHECK(aj["states"][i]["rank"] == 1);
    CHECK(cmatrix_from_json(aj["states"][i]["projector"]) == stabilizer_projector(states[i]));
  }

  const Run two = run({"quantize", "--d", "3", "--n", "2", "--state", "1,0,0,0=1;0,0,1,0=2"});
  CHECK(two.code == 0);
  CHECK(two.out.find("rank 1") != std::string::npos);

  const Run csv = run({"quantize", "--d", "3", "--state", "0,1=2", "--format", "csv"});
  CHECK(csv.code == 0);
  CHECK(csv.out.find("q\\p,0,1,2") != std::string::npos);

  CHECK(run({"quantize", "--d", "3", "--state", "1,0=0;0,1=0"}).code == 1);
  CHECK(run({"quantize", "--d", "3"}).code == 2);
  CHECK(run({"quantize", "--d", "3", "--all", "--state", "1,0=0"}).code == 2);
  CHECK(run({"quantize", "--d", "3", "--state", "1,x=0"}).code == 2);
  CHECK(run({"quantize", "--d", "3", "--state", "1,0,0=0"}).code == 2);
  CHECK(run({"quantize", "--d", "3", "--state", "1,0=0;2,0=1"}).code == 2);
}

TEST_CASE("equivalence") {
  const Run a = run({"equivalence", "--d", "3", "--format", "json"});
  REQUIRE(a.code == 0);
  const json doc = json::parse(a.out);
  CHECK(doc["passed"] == true);
  CHECK(doc["max_born_deviation"].get<double>() < 1e-10);
  CHECK(doc["max_wigner_deviation"].get<double>() < 1e-10);
  CHECK(run({"equivalence", "--d", "5"}).code == 0);
  const Run csv = run({"equivalence", "--d", "3", "--format", "csv"});
  CHECK(csv.out.find("passed,true") != std::string::npos);
}

TEST_CASE("exit codes and refusals") {
  for (const char* cmd : {"states", "check", "quantize", "equivalence"}) {
    std::vector<std::string> args{cmd, "--d", "2"};
    if (std::string(cmd) == "quantize") args.push_back("--all");
    const Run r = run(args);
    CHECK(r.code == 3);
    CHECK(r.err.find("division by two") != std::string::npos);
  }
  CHECK(run({"equivalence", "--d", "4"}).code == 2);
  CHECK(run({"states", "--d", "9"}).code == 2);
  CHECK(run({"states", "--n", "0"}).code == 2);
  CHECK(run({"states", "--format", "xml"}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({}).code == 2);
  const Run h = run({"--help"});
  CHECK(h.code == 0);
  CHECK(h.out.find("rows are momentum p from d-1 (top) down to 0") != std::string::npos);
  CHECK(h.out.find("states") != std::string::npos);

  setenv("EPISTRICT_GUARD", "5", 1);
  const Run g = run({"states", "--d", "3"});
  unsetenv("EPISTRICT_GUARD");
  CHECK(g.code == 1);
  CHECK(g.err.find("budget") != std::string::npos);
}
