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

// Command-line front end: compute | oracle | bench | export-dot | fixtures.
//
// Exit codes: 0 success, 2 invalid configuration, 3 edge-list parse
// failure, 4 oracle size guard.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cobet/centrality.hpp"
#include "cobet/fixtures.hpp"
#include "cobet/graph.hpp"
#include "cobet/io.hpp"
#include "cobet/netgen.hpp"
#include "cobet/oracle.hpp"
#include "cobet/version.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitParse = 3;
constexpr int kExitGuard = 4;

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string input;
  std::string output;  // empty: stdout
  bool weighted = false;
  std::string measure = "cob";
  std::string convention = "unordered";
  std::string format;  // empty: command default
  int workers = 1;
  double min_value = 0.0;
  double tolerance = 0.0;
  bool force = false;
};

cobet::Graph load_graph(const RunConfig& cfg) {
  std::ifstream in(cfg.input);
  if (!in) throw ConfigError("cannot open input file '" + cfg.input + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  std::vector<cobet::ParseDiagnostic> warnings;
  const cobet::Graph g = cobet::parse_edgelist(
      buffer.str(), {.weighted = cfg.weighted}, &warnings);
  for (const auto& w : warnings)
    std::cerr << "warning: " << cfg.input << ":" << w.line << ": " << w.message
              << "\n";
  return g;
}

void write_output(const RunConfig& cfg, const std::string& text) {
  if (cfg.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(cfg.output);
  if (!out) throw ConfigError("cannot open output file '" + cfg.output + "'");
  out << text;
}

cobet::io::Measure parse_measure_or_throw(const std::string& name) {
  const auto measure = cobet::io::parse_measure(name);
  if (!measure) throw ConfigError("unknown measure '" + name + "'");
  return *measure;
}

cobet::io::Format resolve_format(const RunConfig& cfg, cobet::io::Format fallback) {
  if (cfg.format.empty()) return fallback;
  const auto format = cobet::io::parse_format(cfg.format);
  if (!format) throw ConfigError("unknown format '" + cfg.format + "'");
  return *format;
}

cobet::PairConvention parse_convention_or_throw(const std::string& name) {
  const auto convention = cobet::io::parse_convention(name);
  if (!convention) throw ConfigError("unknown convention '" + name + "'");
  return *convention;
}

int run_compute(const RunConfig& cfg, bool force_dot) {
  const auto measure = parse_measure_or_throw(cfg.measure);
  if (measure == cobet::io::Measure::kOmega)
    throw ConfigError("measure 'omega' is only available via the oracle command");
  const auto format = force_dot ? cobet::io::Format::kDot
                                : resolve_format(cfg, cobet::io::Format::kJson);
  if (format == cobet::io::Format::kDot && !cobet::io::is_pairwise(measure))
    throw ConfigError("DOT output is only defined for pairwise measures");
  if (cfg.workers < 1) throw ConfigError("--workers must be positive");
  if (cfg.tolerance < 0.0) throw ConfigError("--tolerance must be non-negative");

  const cobet::Graph g = load_graph(cfg);
  const cobet::CentralityResult result = cobet::compute_all(
      g, parse_convention_or_throw(cfg.convention), cfg.workers, cfg.tolerance);

  std::ostringstream out;
  switch (format) {
    case cobet::io::Format::kCsv:
      cobet::io::write_csv(out, g, result, measure);
      break;
    case cobet::io::Format::kJson:
      cobet::io::write_json(out, g, result, measure);
      break;
    case cobet::io::Format::kDot:
      cobet::io::write_dot(out, g, result, measure, cfg.min_value);
      break;
  }
  write_output(cfg, out.str());
  return kExitOk;
}

int run_oracle(const RunConfig& cfg) {
  const auto measure = parse_measure_or_throw(cfg.measure);
  const auto format = resolve_format(cfg, cobet::io::Format::kJson);
  if (format == cobet::io::Format::kDot)
    throw ConfigError("the oracle command has no DOT output");
  const auto convention = parse_convention_or_throw(cfg.convention);

  const cobet::Graph g = load_graph(cfg);
  std::ostringstream out;
  if (measure == cobet::io::Measure::kOmega) {
    const auto routing =
        cobet::oracle::build_routing_matrix(g, convention, cfg.force);
    const auto gram = cobet::oracle::omega(routing);
    if (format == cobet::io::Format::kCsv)
      cobet::io::write_omega_csv(out, g, gram, convention);
    else
      cobet::io::write_omega_json(out, g, gram, convention);
  } else {
    const cobet::CentralityResult result =
        cobet::oracle::brute_centrality(g, convention, cfg.force);
    if (format == cobet::io::Format::kCsv)
      cobet::io::write_csv(out, g, result, measure);
    else
      cobet::io::write_json(out, g, result, measure);
  }
  write_output(cfg, out.str());
  return kExitOk;
}

int run_fixtures(const std::string& action, const std::string& name,
                 const RunConfig& cfg) {
  if (action == "list") {
    std::ostringstream out;
    for (const cobet::Fixture& f : cobet::builtin_fixtures())
      out << f.name << "  (" << (f.weighted ? "weighted" : "unweighted") << ") "
          << f.description << "\n";
    write_output(cfg, out.str());
    return kExitOk;
  }
  if (action == "emit") {
    const cobet::Fixture* f = cobet::find_fixture(name);
    if (!f) throw ConfigError("unknown fixture '" + name + "'");
    write_output(cfg, std::string(f->edgelist));
    return kExitOk;
  }
  throw ConfigError("fixtures action must be 'list' or 'emit'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Vertex betweenness, pairwise co-betweenness, and derived\n"
               "centrality measures on undirected graphs."};
  app.set_version_flag("--version", std::string(cobet::kVersion));
  app.require_subcommand(1);

  RunConfig cfg;
  std::uint64_t seed = 1;

  auto add_io_options = [&](CLI::App* cmd, bool needs_input) {
    if (needs_input)
      cmd->add_option("--input", cfg.input, "edge-list file")->required();
    cmd->add_flag("--weighted", cfg.weighted,
                  "read the third column as edge weights");
    cmd->add_option("--output", cfg.output, "output file (default: stdout)");
  };

  CLI::App* compute =
      app.add_subcommand("compute", "three-stage centrality computation");
  add_io_options(compute, true);
  compute->add_option("--measure", cfg.measure, "betweenness|cob|corr|cond");
  compute->add_option("--convention", cfg.convention, "unordered|ordered");
  compute->add_option("--format", cfg.format, "csv|json|dot (default json)");
  compute->add_option("--workers", cfg.workers, "parallel source workers");
  compute->add_option("--min-value", cfg.min_value, "DOT edge threshold");
  compute->add_option("--tolerance", cfg.tolerance,
                      "weighted geodesic tie tolerance");

  CLI::App* oracle_cmd = app.add_subcommand(
      "oracle", "brute-force reference evaluation (small graphs)");
  add_io_options(oracle_cmd, true);
  oracle_cmd->add_option("--measure", cfg.measure,
                         "betweenness|cob|corr|cond|omega");
  oracle_cmd->add_option("--convention", cfg.convention, "unordered|ordered");
  oracle_cmd->add_option("--format", cfg.format, "csv|json (default json)");
  oracle_cmd->add_flag("--force", cfg.force, "override the size guard");

  CLI::App* bench =
      app.add_subcommand("bench", "seeded random-graph scaling study");
  std::string model = "er";
  std::vector<int> sizes{100, 200, 300, 400, 600, 800};
  double mean_degree = 6.0;
  int ba_m = 2;
  bench->add_option("--model", model, "er|ba");
  bench->add_option("--sizes", sizes, "graph sizes, ascending")->delimiter(',');
  bench->add_option("--mean-degree", mean_degree, "er mean degree");
  bench->add_option("--ba-m", ba_m, "ba edges per new vertex");
  bench->add_option("--seed", seed, "base RNG seed");
  bench->add_option("--workers", cfg.workers, "parallel source workers");
  bench->add_option("--output", cfg.output, "output file (default: stdout)");

  CLI::App* export_dot = app.add_subcommand(
      "export-dot", "Graphviz export of a pairwise measure");
  add_io_options(export_dot, true);
  export_dot->add_option("--measure", cfg.measure, "cob|corr|cond");
  export_dot->add_option("--convention", cfg.convention, "unordered|ordered");
  export_dot->add_option("--workers", cfg.workers, "parallel source workers");
  export_dot->add_option("--min-value", cfg.min_value, "edge threshold");
  export_dot->add_option("--tolerance", cfg.tolerance,
                         "weighted geodesic tie tolerance");

  CLI::App* fixtures =
      app.add_subcommand("fixtures", "bundled case-study edge lists");
  std::string fixtures_action;
  std::string fixtures_name;
  fixtures->add_option("action", fixtures_action, "list|emit")->required();
  fixtures->add_option("name", fixtures_name, "fixture name for emit");
  fixtures->add_option("--output", cfg.output, "output file (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  try {
    if (compute->parsed()) return run_compute(cfg, /*force_dot=*/false);
    if (export_dot->parsed()) return run_compute(cfg, /*force_dot=*/true);
    if (oracle_cmd->parsed()) return run_oracle(cfg);
    if (fixtures->parsed())
      return run_fixtures(fixtures_action, fixtures_name, cfg);
    if (bench->parsed()) {
      const cobet::netgen::ScalingOptions options{
          .er_mean_degree = mean_degree, .ba_m = ba_m, .workers = cfg.workers};
      const auto report =
          cobet::netgen::scaling_study(model, sizes, options, seed);
      write_output(cfg, cobet::netgen::to_json(report));
      return kExitOk;
    }
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const cobet::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const cobet::oracle::SizeGuardError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitGuard;
  } catch (const cobet::GraphError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  }
  return kExitConfig;
}
