#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "lpgraph/cli.hpp"

using namespace lpgraph;

namespace {

std::string data(const std::string& name) {
  const char* dir = std::getenv("LPGRAPH_DATA");
  return std::string(dir ? dir : "tests/data") + "/" + name;
}

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "lpgraph");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli_dispatch(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("ys prints the initial Y of a single vertex") {
  const Run r = run({"ys", "--graph", data("fig1.json"), "--set", "4"});
  CHECK(r.code == kExitOk);
  CHECK(r.out == "(A4 + X2)/X4\n");
  const Run all = run({"--graph", data("fig1.json"), "ys"});
  CHECK(all.code == kExitOk);
  CHECK(all.out.find("Y124 = ") != std::string::npos);
  const Run js = run({"ys", "--graph", data("fig1.json"), "--set", "1,2,4", "--format", "json"});
  CHECK(js.code == kExitOk);
  const auto j = nlohmann::json::parse(js.out);
  CHECK(j[0]["set"] == nlohmann::json::parse("[1,2,4]"));
}

TEST_CASE("info") {
  const Run e = run({"info", "--graph", data("edgeless3.json")});
  CHECK(e.code == kExitOk);
  CHECK(e.out.find("components (3): {1} {2} {3}") != std::string::npos);
  const Run f = run({"info", "--graph", data("fig1.json"), "--format", "json"});
  const auto j = nlohmann::json::parse(f.out);
  CHECK(j["strongly_connected"].size() == 11);
  CHECK(j["components"] == nlohmann::json::parse("[[1,2,3,4]]"));
}

TEST_CASE("seed and mutate agree on the worked seed") {
  const Run m = run({"mutate", "--graph", data("fig1.json"), "--path", "1,2,3", "--format", "json"});
  REQUIRE(m.code == kExitOk);
  const auto jm = nlohmann::json::parse(m.out);
  CHECK(jm["names"] == nlohmann::json::parse(R"(["Y1","Y12","Y123","X4"])"));
  const Run s = run({"seed", "--graph", data("fig1.json"), "--activation", "1,2,3", "--format", "json"});
  REQUIRE(s.code == kExitOk);
  const auto js = nlohmann::json::parse(s.out);
  CHECK(js["names"] == jm["names"]);
  CHECK(js["vars"] == jm["vars"]);
  const Run c = run({"seed", "--graph", data("fig1.json"), "--collection", "[[1],[1,2],[1,2,3]]", "--format", "json"});
  REQUIRE(c.code == kExitOk);
  CHECK(nlohmann::json::parse(c.out)["vars"] == js["vars"]);
  const Run text = run({"seed", "--graph", data("fig1.json"), "--activation", "1,2,3"});
  CHECK(text.out.find("collection {{1},{1,2},{1,2,3}}") != std::string::npos);
  CHECK(text.out.find("4: X4 = X4") != std::string::npos);
}

TEST_CASE("exchange graph exports") {
  const Run t = run({"exchange-graph", "--graph", data("fig1.json")});
  CHECK(t.code == kExitOk);
  CHECK(t.out.find("seeds: 46\n") != std::string::npos);
  CHECK(t.out.find("cluster variables: 15\n") != std::string::npos);
  CHECK(t.out.find("edges: 92\n") != std::string::npos);
  const Run d = run({"exchange-graph", "--graph", data("path3.json"), "--format", "dot"});
  CHECK(d.code == kExitOk);
  CHECK(d.out.rfind("graph exchange {", 0) == 0);
  CHECK(d.out.find(" -- ") != std::string::npos);
  const Run j = run({"exchange-graph", "--graph", data("path3.json"), "--format", "json", "--threads", "2"});
  const auto doc = nlohmann::json::parse(j.out);
  CHECK(doc["complete"] == true);
  CHECK(doc["edges"].size() * 2 == doc["nodes"].size() * 3);
  const Run b = run({"exchange-graph", "--graph", data("fig1.json"), "--budget", "10"});
  CHECK(b.out.find("seeds: 10 (budget reached)") != std::string::npos);
}

TEST_CASE("verify, freeze and conjectures") {
  const Run v = run({"verify", "--graph", data("fig1.json")});
  CHECK(v.code == kExitOk);
  CHECK(v.out.find("verify: ok") != std::string::npos);
  const Run f = run({"freeze", "--graph", data("path3.json"), "--format", "json"});
  CHECK(f.code == kExitOk);
  const auto jf = nlohmann::json::parse(f.out);
  CHECK(jf["seeds"].size() == 5);
  CHECK(jf["rank"] == 2);
  const Run c = run({"conjectures", "--graph", data("path3.json"), "--degree", "2", "--format", "json"});
  CHECK(c.code == kExitOk);
  const auto jc = nlohmann::json::parse(c.out);
  CHECK(jc["ok"] == true);
  CHECK(jc["reports"][1]["rank"] == jc["reports"][1]["monomials"]);
  // a truncated search cannot be verified
  CHECK(run({"verify", "--graph", data("fig1.json"), "--budget", "5"}).code == kExitVerifyFailed);
}

TEST_CASE("bad input exits with 2") {
  CHECK(run({"info"}).code == kExitBadInput);
  CHECK(run({"info", "--graph", "/nonexistent.json"}).code == kExitBadInput);
  CHECK(run({"info", "--graph", data("broken.json")}).code == kExitBadInput);
  const Run dup = run({"info", "--graph", data("duplicate.json")});
  CHECK(dup.code == kExitBadInput);
  CHECK(dup.err.find("duplicate edge") != std::string::npos);
  CHECK(run({"bogus"}).code == kExitBadInput);
  CHECK(run({"ys", "--graph", data("fig1.json"), "--set", "9"}).code == kExitBadInput);
  CHECK(run({"seed", "--graph", data("fig1.json"), "--collection", "[[1,4]]"}).code == kExitBadInput);
  CHECK(run({"seed", "--graph", data("fig1.json"), "--collection", "[[1"}).code == kExitBadInput);
  CHECK(run({"mutate", "--graph", data("fig1.json"), "--path", "0"}).code == kExitBadInput);
  CHECK(run({"info", "--graph", data("fig1.json"), "--format", "dot"}).code == kExitBadInput);
  CHECK(run({"info", "--graph", data("fig1.json"), "--format", "xml"}).code == kExitBadInput);
  CHECK(run({"info", "--graph", data("fig1.json"), "--cap", "3"}).code == kExitBadInput);
  CHECK(run({"--help"}).code == kExitOk);
}
