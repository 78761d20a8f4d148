#include <sys/wait.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "qmlab/scenarios.hpp"

using namespace qmlab::cli;

namespace {

std::vector<std::vector<double>> parse_csv_rows(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  std::vector<std::vector<double>> rows;
  bool header_seen = false;
  while (std::getline(is, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (!header_seen) {  // column names
      header_seen = true;
      continue;
    }
    std::vector<double> row;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) row.push_back(std::stod(cell));
    rows.push_back(row);
  }
  return rows;
}

}  // namespace

TEST_CASE("registry contents") {
  CHECK(registry().size() >= 12);
  CHECK(find_scenario("casimir-1d") != nullptr);
  CHECK(find_scenario("landau-edge") != nullptr);
  CHECK(find_scenario("ww-decay") != nullptr);
  CHECK(find_scenario("no-such-thing") == nullptr);
  for (const auto& s : registry()) {
    CHECK(!s.description.empty());
    CHECK(!s.formula.empty());
  }
  // every scenario documents its parameter schema in the listing
  const auto listing = list_text();
  for (const auto& s : registry()) CHECK(listing.find(s.name) != std::string::npos);
}

TEST_CASE("ab-ring produces the expected table") {
  std::string text;
  const int rc = run_scenario("ab-ring", {{"radius", "1"}, {"flux", "0.3"}, {"mmax", "5"}},
                              "", "csv", &text);
  CHECK(rc == 0);
  const auto rows = parse_csv_rows(text);
  REQUIRE(rows.size() == 11);
  for (const auto& row : rows) {
    const double m = row[0], e = row[1];
    CHECK(e == doctest::Approx((m + 0.3) * (m + 0.3) / 2.0));
  }
  CHECK(text.find("# params:") != std::string::npos);
  CHECK(text.find("version=") != std::string::npos);
}

TEST_CASE("schema violations and unknown scenarios") {
  std::string text;
  CHECK(run_scenario("no-such-thing", {}, "", "csv", &text) == 2);
  CHECK(run_scenario("ab-ring", {{"bogus", "1"}}, "", "csv", &text) == 2);
  CHECK(run_scenario("ab-ring", {{"radius", "fast"}}, "", "csv", &text) == 2);
  CHECK(run_scenario("ab-ring", {}, "", "yaml", &text) == 2);
  CHECK(run_scenario("ab-ring", {}, "/nonexistent-dir/out.csv", "csv", &text) == 4);
}

TEST_CASE("self-check scenarios signal tolerance failures") {
  std::string text;
  CHECK(run_scenario("casimir-sum", {{"nuc", "1000"}}, "", "csv", &text) == 0);
  // an impossible tolerance trips exit code 3
  CHECK(run_scenario("casimir-sum", {{"nuc", "50"}, {"tolerance", "1e-12"}}, "", "csv",
                     &text) == 3);
}

TEST_CASE("every scenario is byte-identical across two runs") {
  for (const auto& s : registry()) {
    std::string first, second;
    const int rc1 = run_scenario(s.name, {}, "", "csv", &first);
    const int rc2 = run_scenario(s.name, {}, "", "csv", &second);
    CAPTURE(s.name);
    CHECK(rc1 == rc2);
    CHECK(first == second);
    std::string json1, json2;
    run_scenario(s.name, {}, "", "json", &json1);
    run_scenario(s.name, {}, "", "json", &json2);
    CHECK(json1 == json2);
  }
}

TEST_CASE("csv and json agree numerically") {
  for (const std::string name : {"ab-ring", "string-modes", "coherent-evolve", "recoil"}) {
    std::string csv_text, json_text;
    REQUIRE(run_scenario(name, {}, "", "csv", &csv_text) == 0);
    REQUIRE(run_scenario(name, {}, "", "json", &json_text) == 0);
    const auto csv_rows = parse_csv_rows(csv_text);
    const auto j = nlohmann::json::parse(json_text);
    REQUIRE(j["rows"].size() == csv_rows.size());
    for (std::size_t r = 0; r < csv_rows.size(); ++r)
      for (std::size_t c = 0; c < csv_rows[r].size(); ++c) {
        const double a = csv_rows[r][c], b = j["rows"][r][c].get<double>();
        CHECK(std::abs(a - b) <= 1e-15 * std::max(1.0, std::abs(a)));
      }
  }
}

TEST_CASE("config file parsing with per-scenario sections") {
  const std::string cfg =
      "# comment\n"
      "[ab-ring]\n"
      "radius = 2.0\n"
      "flux = 0.5\n"
      "\n"
      "[two-slit]\n"
      "flux = 0.1\n";
  const auto p = parse_config(cfg, "ab-ring");
  REQUIRE(p.size() == 2);
  CHECK(p.at("radius") == "2.0");
  CHECK(p.at("flux") == "0.5");
  CHECK(parse_config(cfg, "two-slit").at("flux") == "0.1");
  CHECK(parse_config(cfg, "planck").empty());
  CHECK_THROWS_AS(parse_config("radius 2", "ab-ring"), std::invalid_argument);
}

TEST_CASE("installed binary behaves" * doctest::skip(std::getenv("QMLAB_CLI") == nullptr)) {
  const std::string exe = std::getenv("QMLAB_CLI") ? std::getenv("QMLAB_CLI") : "";
  REQUIRE(!exe.empty());
  auto run = [&](const std::string& cmd) {
    return std::system((exe + " " + cmd + " > /dev/null 2>&1").c_str());
  };
  CHECK(WEXITSTATUS(run("--list")) == 0);
  CHECK(WEXITSTATUS(run("no-such-scenario")) == 2);
  CHECK(WEXITSTATUS(run("ab-ring --bogus 1")) == 2);

  const std::string out1 = "/tmp/qmlab_cli_test_1.csv";
  const std::string out2 = "/tmp/qmlab_cli_test_2.csv";
  CHECK(WEXITSTATUS(run("ab-ring --flux 0.25 --output " + out1)) == 0);
  CHECK(WEXITSTATUS(run("ab-ring --flux 0.25 --output " + out2)) == 0);
  std::ifstream f1(out1), f2(out2);
  std::stringstream s1, s2;
  s1 << f1.rdbuf();
  s2 << f2.rdbuf();
  CHECK(!s1.str().empty());
  CHECK(s1.str() == s2.str());
  std::remove(out1.c_str());
  std::remove(out2.c_str());
}
