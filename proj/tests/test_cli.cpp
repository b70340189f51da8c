// Copyright 2026 The cobet Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// End-to-end tests of the installed command-line surface. The binary path
// arrives via the COBET_CLI environment variable (set by CTest).

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include <doctest.h>
#include <json.hpp>

#include "cobet/fixtures.hpp"
#include "cobet/graph.hpp"

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

const std::string& cli_path() {
  static const std::string path = [] {
    const char* env = std::getenv("COBET_CLI");
    REQUIRE_MESSAGE(env != nullptr, "COBET_CLI must point at the binary");
    return std::string(env);
  }();
  return path;
}

const std::string& work_dir() {
  static const std::string dir = [] {
    char tmpl[] = "/tmp/cobet_cli_XXXXXX";
    const char* made = mkdtemp(tmpl);
    REQUIRE(made != nullptr);
    return std::string(made);
  }();
  return dir;
}

RunResult run_cli(const std::string& args) {
  const std::string out_file = work_dir() + "/stdout.txt";
  const std::string err_file = work_dir() + "/stderr.txt";
  const std::string cmd =
      cli_path() + " " + args + " > " + out_file + " 2> " + err_file;
  const int status = std::system(cmd.c_str());
  RunResult result;
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  result.out = slurp(out_file);
  result.err = slurp(err_file);
  return result;
}

std::string write_input(const std::string& name, const std::string& text) {
  const std::string path = work_dir() + "/" + name;
  std::ofstream out(path);
  out << text;
  return path;
}

const std::string& p4_file() {
  static const std::string path = write_input("p4.txt", "a b\nb c\nc d\n");
  return path;
}

std::map<std::string, double> json_pairs(const nlohmann::json& j) {
  std::map<std::string, double> out;
  for (const auto& p : j["pairs"])
    out[p["u"].get<std::string>() + "|" + p["v"].get<std::string>()] =
        p["value"].get<double>();
  return out;
}

}  // namespace

TEST_CASE("cli: compute cob on P4 emits the expected JSON") {
  const RunResult r = run_cli("compute --input " + p4_file() + " --measure cob");
  REQUIRE(r.exit_code == 0);
  const nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j["betweenness"] == nlohmann::json({0.0, 2.0, 2.0, 0.0}));
  REQUIRE(j["pairs"].size() == 1);
  CHECK(j["pairs"][0]["u"] == "b");
  CHECK(j["pairs"][0]["v"] == "c");
  CHECK(j["pairs"][0]["value"] == 1.0);
}

TEST_CASE("cli: oracle omega CSV on P4 has the betweenness diagonal") {
  const RunResult r = run_cli("oracle --input " + p4_file() +
                              " --measure omega --format csv");
  REQUIRE(r.exit_code == 0);
  std::istringstream in(r.out);
  std::string line;
  std::vector<std::vector<std::string>> rows;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> cells;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    rows.push_back(cells);
  }
  REQUIRE(rows.size() == 5);  // header + 4 rows
  CHECK(rows[1][1] == "0");
  CHECK(rows[2][2] == "2");
  CHECK(rows[3][3] == "2");
  CHECK(rows[4][4] == "0");
}

TEST_CASE("cli: compute and oracle agree on every bundled fixture") {
  struct Case {
    const char* name;
    bool weighted;
  };
  for (const Case c : {Case{"karate", false}, Case{"abilene", true},
                       Case{"strike", false}}) {
    CAPTURE(c.name);
    const RunResult emit = run_cli(std::string("fixtures emit ") + c.name);
    REQUIRE(emit.exit_code == 0);
    const std::string input =
        write_input(std::string(c.name) + ".txt", emit.out);
    const std::string weighted = c.weighted ? " --weighted" : "";

    const RunResult fast = run_cli("compute --input " + input + weighted +
                                   " --measure cob --workers 2");
    const RunResult slow =
        run_cli("oracle --input " + input + weighted + " --measure cob");
    REQUIRE(fast.exit_code == 0);
    REQUIRE(slow.exit_code == 0);
    const nlohmann::json jf = nlohmann::json::parse(fast.out);
    const nlohmann::json js = nlohmann::json::parse(slow.out);
    REQUIRE(jf["betweenness"].size() == js["betweenness"].size());
    for (std::size_t v = 0; v < jf["betweenness"].size(); ++v)
      CHECK(std::abs(jf["betweenness"][v].get<double>() -
                     js["betweenness"][v].get<double>()) < 1e-9);
    const auto pf = json_pairs(jf);
    const auto ps = json_pairs(js);
    REQUIRE(pf.size() == ps.size());
    for (const auto& [key, value] : pf)
      CHECK(std::abs(value - ps.at(key)) < 1e-9);
  }
}

TEST_CASE("cli: fixtures list and emit") {
  const RunResult list = run_cli("fixtures list");
  REQUIRE(list.exit_code == 0);
  for (const char* name : {"karate", "abilene", "strike"})
    CHECK(list.out.find(name) != std::string::npos);

  const RunResult abilene = run_cli("fixtures emit abilene");
  REQUIRE(abilene.exit_code == 0);
  const cobet::Graph g =
      cobet::parse_edgelist(abilene.out, {.weighted = true});
  CHECK(g.vertex_count() == 11);
  CHECK(cobet::components(g).component_count == 1);
  CHECK(abilene.out.find("transcribed-from-figure") != std::string::npos);

  const RunResult strike = run_cli("fixtures emit strike");
  REQUIRE(strike.exit_code == 0);
  CHECK(cobet::parse_edgelist(strike.out).vertex_count() == 24);
  CHECK(strike.out.find("transcribed-from-figure") != std::string::npos);

  CHECK(run_cli("fixtures emit unknown-name").exit_code == 2);
}

TEST_CASE("cli: conditional DOT export of karate routes control to 1 and 34") {
  const RunResult emit = run_cli("fixtures emit karate");
  REQUIRE(emit.exit_code == 0);
  const std::string input = write_input("karate_dot.txt", emit.out);
  const RunResult dot =
      run_cli("export-dot --input " + input + " --measure cond");
  REQUIRE(dot.exit_code == 0);
  CHECK(dot.out.rfind("digraph", 0) == 0);

  // arcs v -> u carry width 8 * C(u|v) / max; the widest arcs must point
  // into the two dominant actors
  const std::regex arc_re(
      "\"([^\"]+)\" -> \"([^\"]+)\" \\[penwidth=([0-9.eE+-]+)\\]");
  double max_width = 0.0;
  std::vector<std::pair<std::string, double>> heads;
  for (std::sregex_iterator it(dot.out.begin(), dot.out.end(), arc_re), end;
       it != end; ++it) {
    const double width = std::stod((*it)[3]);
    heads.emplace_back((*it)[2], width);
    max_width = std::max(max_width, width);
  }
  REQUIRE(max_width == 8.0);
  int widest = 0;
  for (const auto& [head, width] : heads)
    if (width > 0.9 * max_width) {
      ++widest;
      CHECK((head == "1" || head == "34"));
    }
  CHECK(widest >= 4);
}

TEST_CASE("cli: exit codes") {
  SUBCASE("invalid configuration is 2") {
    CHECK(run_cli("compute --input " + p4_file() + " --measure nope").exit_code == 2);
    CHECK(run_cli("compute --input " + p4_file() + " --measure omega").exit_code == 2);
    CHECK(run_cli("compute --input " + p4_file() +
                  " --measure betweenness --format dot").exit_code == 2);
    CHECK(run_cli("compute --measure cob").exit_code == 2);  // missing input
    CHECK(run_cli("compute --input " + p4_file() + " --workers 0").exit_code == 2);
    CHECK(run_cli("totally-unknown-command").exit_code == 2);
  }
  SUBCASE("parse failure is 3") {
    const std::string bad = write_input("bad.txt", "a a\n");
    CHECK(run_cli("compute --input " + bad + " --measure cob").exit_code == 3);
    const std::string bad_cols = write_input("bad2.txt", "a b\nc d e f\n");
    CHECK(run_cli("compute --input " + bad_cols + " --measure cob").exit_code == 3);
  }
  SUBCASE("oracle size guard is 4, --force overrides") {
    std::string big;
    for (int v = 0; v + 1 < 205; ++v)
      big += "v" + std::to_string(v) + " v" + std::to_string(v + 1) + "\n";
    const std::string input = write_input("big.txt", big);
    CHECK(run_cli("oracle --input " + input + " --measure cob").exit_code == 4);
    CHECK(run_cli("oracle --input " + input +
                  " --measure omega --format json --force").exit_code == 0);
  }
}

TEST_CASE("cli: bench runs a tiny sweep and reports JSON") {
  const RunResult r = run_cli(
      "bench --model er --sizes 40,60 --mean-degree 4 --seed 5 --workers 2");
  REQUIRE(r.exit_code == 0);
  const nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j["model"] == "er");
  CHECK(j["sizes"] == nlohmann::json({40, 60}));
  CHECK(j["workers"] == 2);
  CHECK(j["mean_sigma"].size() == 2);
  CHECK(std::isfinite(j["fitted_exponent"].get<double>()));
}

TEST_CASE("cli: output file option") {
  const std::string out_path = work_dir() + "/result.json";
  const RunResult r = run_cli("compute --input " + p4_file() +
                              " --measure cob --output " + out_path);
  REQUIRE(r.exit_code == 0);
  CHECK(r.out.empty());
  const nlohmann::json j = nlohmann::json::parse(slurp(out_path));
  CHECK(j["measure"] == "cob");
}

TEST_CASE("cli: duplicate edges warn on stderr but succeed") {
  const std::string dup = write_input("dup.txt", "a b\nb c\nb a\n");
  const RunResult r = run_cli("compute --input " + dup + " --measure betweenness");
  CHECK(r.exit_code == 0);
  CHECK(r.err.find("duplicate") != std::string::npos);
}
