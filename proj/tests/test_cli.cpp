#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "gridhom/cli.hpp"

using nlohmann::json;

namespace {

struct CliRun {
  int code = 0;
  std::string out, err;
};

CliRun run(const std::vector<std::string>& args) {
  std::ostringstream o, e;
  int c = gridhom::run_cli(args, o, e);
  return {c, o.str(), e.str()};
}

}  // namespace

TEST_CASE("coxeter subcommand reports the tiny lattice exactly") {
  auto r = run({"coxeter", "--m", "1", "--n", "1", "--format", "json"});
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["schema"] == "fcy/1");
  CHECK(j["exponent"] == 3);
  CHECK(j["sign"] == -1);
  CHECK(j["holds"] == true);
}

TEST_CASE("corrupted sign injection is caught") {
  auto r = run({"coxeter", "--m", "1", "--n", "1", "--format", "json",
                "--corrupt-sign"});
  CHECK(r.code == 1);
  json j = json::parse(r.out);
  CHECK(j["holds"] == false);
  CHECK(j.contains("first_failure"));

  auto v = run({"verify", "--m", "1", "--n", "1", "--corrupt-sign"});
  CHECK(v.code == 1);
  CHECK(v.out.find("FAIL") != std::string::npos);
  CHECK(v.out.find("k0 coxeter order") != std::string::npos);
}

TEST_CASE("orbit trace sweeps the full grid once") {
  auto r = run({"orbit", "--m", "5", "--n", "7", "--alpha", "0,2,3,7,7",
                "--format", "json"});
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["steps"].size() == 13);
  CHECK(j["total"] == 35);
  CHECK(j["closes"] == true);
  int sum = 0;
  for (const auto& s : j["steps"]) sum += s["support"].get<int>();
  CHECK(sum == 35);
}

TEST_CASE("lattice export lists every element") {
  auto r = run({"lattice", "--m", "2", "--n", "2", "--format", "json"});
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["m"] == 2);
  CHECK(j["n"] == 2);
  REQUIRE(j["elements"].size() == 6);
  CHECK(j["elements"][0] == json::array({0, 0}));
  CHECK(j["elements"][5] == json::array({2, 2}));

  auto dot = run({"lattice", "--m", "2", "--n", "2", "--format", "dot"});
  REQUIRE(dot.code == 0);
  CHECK(dot.out.find("\"0,0\" -> \"0,1\"") != std::string::npos);
}

TEST_CASE("outputs are byte deterministic") {
  std::vector<std::string> args{"presentation", "--m", "2", "--n", "2",
                                "--variant", "v", "--format", "json"};
  auto a = run(args), b = run(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);

  auto v1 = run({"verify", "--m", "2", "--n", "2"});
  auto v4 = run({"verify", "--m", "2", "--n", "2", "--jobs", "4"});
  CHECK(v1.code == 0);
  CHECK(v4.code == 0);
  CHECK(v1.out == v4.out);
}

TEST_CASE("verify passes the small lattices with one line per family") {
  auto r = run({"verify", "--m", "2", "--n", "2"});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("11/11 checks passed") != std::string::npos);
  CHECK(r.out.find("FAIL") == std::string::npos);

  auto j = run({"verify", "--m", "1", "--n", "2", "--format", "json"});
  REQUIRE(j.code == 0);
  json doc = json::parse(j.out);
  REQUIRE(doc["items"].size() == 11);
  for (const auto& it : doc["items"]) CHECK(it["ok"] == true);
  CHECK(doc["all_ok"] == true);
}

TEST_CASE("hom table agrees with the oracle on the whole square") {
  auto r = run({"hom", "--m", "2", "--n", "2", "--format", "csv"});
  REQUIRE(r.code == 0);
  std::size_t lines = 0;
  for (char c : r.out) lines += c == '\n';
  CHECK(lines == 1 + 36);
  CHECK(r.out.find("MISMATCH") == std::string::npos);
}

TEST_CASE("resolve reports the signed subset cube") {
  auto r = run({"resolve", "--m", "2", "--n", "2", "--alpha", "1,2",
                "--format", "json"});
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  REQUIRE(j["degrees"].size() == 3);
  CHECK(j["degrees"][0].size() == 1);
  CHECK(j["degrees"][1].size() == 2);
  CHECK(j["degrees"][2].size() == 1);
  CHECK(j["boundaries"].size() == 2);
  CHECK(j["boundaries"][0].size() == 2);
  CHECK(j["boundaries"][1].size() == 2);
  for (const auto& layer : j["boundaries"])
    for (const auto& entry : layer) {
      int c = entry[2].get<int>();
      CHECK((c == 1 || c == -1));
    }
}

TEST_CASE("presentation export counts arrows and relations") {
  auto r = run({"presentation", "--m", "2", "--n", "2", "--variant", "v",
                "--format", "json"});
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["orientation"] == "op");
  CHECK(j["vertices"].size() == 6);
  CHECK(j["arrows"].size() == 6);
  CHECK(j["relations"].size() == 3);
}

TEST_CASE("auslander subcommand exposes the family and its dual") {
  auto r = run({"auslander", "--m", "3", "--n", "1", "--format", "json"});
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["vertices"].size() == 6);  // binom(4,2)

  auto chk = run({"auslander", "--m", "3", "--n", "1", "--variant", "check",
                  "--format", "json"});
  REQUIRE(chk.code == 0);
  CHECK(json::parse(chk.out)["isomorphic"] == true);
}

TEST_CASE("capacity and usage errors exit with diagnostics") {
  auto cap = run({"lattice", "--m", "10", "--n", "10", "--cap", "100"});
  CHECK(cap.code == 2);
  CHECK(cap.err.find("cap") != std::string::npos);

  auto bogus = run({"coxeter", "--m", "1", "--n", "1", "--bogus"});
  CHECK(bogus.code == 2);
  CHECK(!bogus.err.empty());

  auto missing = run({"lattice", "--n", "1"});
  CHECK(missing.code == 2);

  auto badalpha = run({"orbit", "--m", "2", "--n", "2", "--alpha", "2,1"});
  CHECK(badalpha.code == 2);
  CHECK(!badalpha.err.empty());

  auto badfmt = run({"lattice", "--m", "1", "--n", "1", "--format", "yaml"});
  CHECK(badfmt.code == 2);
}

TEST_CASE("payload can be redirected to a file") {
  std::string path = "cli_out_test.json";
  auto r = run({"coxeter", "--m", "1", "--n", "1", "--format", "json", "--out",
                path});
  REQUIRE(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream f(path);
  std::stringstream buf;
  buf << f.rdbuf();
  auto direct = run({"coxeter", "--m", "1", "--n", "1", "--format", "json"});
  CHECK(buf.str() == direct.out);
  std::remove(path.c_str());
}
