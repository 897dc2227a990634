#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"

using antipodal::cli::run_cli;
namespace fs = std::filesystem;

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

fs::path scratch(const std::string& name) {
  auto dir = fs::temp_directory_path() / "antipodal-cli-test";
  fs::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST_CASE("gen then verify on GP(8,1)") {
  auto gen = run({"gen", "--family", "gp", "--n", "8"});
  REQUIRE(gen.code == 0);
  auto doc = nlohmann::json::parse(gen.out);
  CHECK(doc["meta"]["claimed_span"] == 21);
  CHECK(doc["meta"]["formula"]["status"] == "Exact");
  CHECK(doc["meta"]["construction"] == "gp-0mod4");

  auto path = scratch("gp8.json");
  std::ofstream(path) << gen.out;
  auto ver = run({"verify", path.string()});
  CHECK(ver.code == 0);
  CHECK(ver.out.rfind("valid, span 21, certificate Certified", 0) == 0);
}

TEST_CASE("round trip for every supported instance in a small range") {
  for (int n = 3; n <= 14; ++n) {
    auto path = scratch("gp.json");
    auto gen = run({"gen", "--family", "gp", "--n", std::to_string(n), "--out", path.string()});
    REQUIRE(gen.code == 0);
    CHECK(run({"verify", path.string()}).code == 0);
  }
  for (int r = 3; r <= 8; ++r) {
    for (int s = 3; s <= 8; ++s) {
      if (r * s % 2 == 1) continue;
      auto path = scratch("torus.json");
      auto gen = run({"gen", "--family", "torus", "--r", std::to_string(r), "--s",
                      std::to_string(s), "--out", path.string()});
      REQUIRE(gen.code == 0);
      CHECK(run({"verify", path.string()}).code == 0);
    }
  }
}

TEST_CASE("identical invocations print identical bytes") {
  for (auto args : std::vector<std::vector<std::string>>{
           {"gen", "--family", "torus", "--r", "6", "--s", "4"},
           {"table", "--family", "gp", "--n-from", "3", "--n-to", "12", "--format", "json"},
           {"exact", "--family", "gp", "--n", "4"},
           {"formula", "--family", "torus", "--r", "6", "--s", "4"}}) {
    auto a = run(args);
    auto b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("verify rejects a broken coloring with exit 1") {
  auto gen = run({"gen", "--family", "gp", "--n", "5"});
  auto doc = nlohmann::json::parse(gen.out);
  doc["colors"][0] = doc["colors"][1];
  doc["meta"].erase("ordering");
  auto path = scratch("broken.json");
  std::ofstream(path) << doc.dump();
  auto ver = run({"verify", path.string()});
  CHECK(ver.code == 1);
  CHECK(ver.out.rfind("invalid", 0) == 0);
}

TEST_CASE("usage errors exit 2 and stay off stdout") {
  for (auto args : std::vector<std::vector<std::string>>{
           {},
           {"gen", "--family", "gp"},
           {"gen", "--family", "torus", "--r", "3", "--s", "5"},
           {"gen", "--family", "gp", "--n", "6", "--r", "3"},
           {"table", "--family", "gp", "--n-from", "3"},
           {"table", "--family", "gp", "--n-from", "3", "--n-to", "5", "--r-max", "4"},
           {"verify", "/nonexistent/file.json"},
           {"exact", "--family", "cycle", "--n", "5", "--k", "7"},
           {"bogus"}}) {
    auto r = run(args);
    CHECK(r.code == 2);
    CHECK(r.out.empty());
    CHECK_FALSE(r.err.empty());
  }
}

TEST_CASE("solver timeout exits 3") {
  auto r = run({"exact", "--family", "gp", "--n", "6", "--max-nodes", "10"});
  CHECK(r.code == 3);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["status"] == "TimedOut");
  CHECK(j["lower_bound"].get<int>() <= j["upper_bound"].get<int>());
}

TEST_CASE("exact on small families") {
  auto c4 = nlohmann::json::parse(run({"exact", "--family", "cycle", "--n", "4", "--k", "1"}).out);
  CHECK(c4["value"] == 1);
  auto gp4 = nlohmann::json::parse(run({"exact", "--family", "gp", "--n", "4"}).out);
  CHECK(gp4["value"] == 6);
  CHECK(gp4["k"] == 2);
  CHECK_FALSE(gp4.contains("elapsed_seconds"));
  auto timed = nlohmann::json::parse(run({"exact", "--family", "gp", "--n", "4", "--timing"}).out);
  CHECK(timed.contains("elapsed_seconds"));
}

TEST_CASE("torus table includes the (2,0) discrepancy row") {
  auto r = run({"table", "--family", "torus", "--r-max", "6", "--s-max", "6", "--format", "csv"});
  REQUIRE(r.code == 0);
  CHECK(r.out.rfind("family,params,n,diameter,k,case_label,formula_value,formula_status,"
                    "construction_span,certificate,discrepancy\n",
                    0) == 0);
  CHECK(r.out.find("torus,r=6;s=4,24,5,4,\"(2,0)\",33,Exact,33,Certified,") != std::string::npos);
  CHECK(r.out.find("65/2") != std::string::npos);
  // rows where the status is Exact carry a matching construction span
  std::istringstream lines(r.out);
  std::string line;
  std::getline(lines, line);
  int rows = 0;
  while (std::getline(lines, line)) {
    ++rows;
    if (line.find(",Exact,") == std::string::npos) continue;
    auto at = line.find(",Exact,");
    auto before = line.substr(0, at);
    auto formula = before.substr(before.rfind(',') + 1);
    auto after = line.substr(at + 7);
    CHECK(after.substr(0, after.find(',')) == formula);
  }
  CHECK(rows == 16);
}

TEST_CASE("gp table flags the open branch") {
  auto r = run({"table", "--family", "gp", "--n-from", "10", "--n-to", "10", "--format", "json"});
  auto rows = nlohmann::json::parse(r.out);
  REQUIRE(rows.size() == 1);
  CHECK(rows[0]["formula_status"] == "UpperBound");
  CHECK(rows[0]["certificate"] == "CriterionFailed");
  CHECK(rows[0]["construction_span"] == 36);
}

TEST_CASE("formula and validate-ordering") {
  auto f = nlohmann::json::parse(run({"formula", "--family", "torus", "--r", "5", "--s", "6"}).out);
  CHECK(f["value"] == 42);
  auto v = run({"validate-ordering", "--family", "gp", "--n", "12"});
  CHECK(v.code == 0);
  CHECK(nlohmann::json::parse(v.out)["ok"] == true);
}

TEST_CASE("DOT export labels vertices by color") {
  auto path = scratch("gp4.json");
  run({"gen", "--family", "gp", "--n", "4", "--out", path.string()});
  auto dot = run({"export-dot", path.string()});
  CHECK(dot.code == 0);
  CHECK(dot.out.rfind("graph G {", 0) == 0);
  CHECK(dot.out.find("tooltip=\"y0\"") != std::string::npos);
  CHECK(dot.out.find(" -- ") != std::string::npos);
}
