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

#include "cobet/netgen.hpp"

#include <chrono>
#include <cmath>
#include <random>
#include <set>
#include <stdexcept>

#include <json.hpp>

#include "cobet/centrality.hpp"
#include "cobet/sp_dag.hpp"

namespace cobet::netgen {

namespace {

// mt19937_64 output is fully specified by the standard; the distributions
// on top of it are not. These two helpers keep draws portable.
double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::size_t uniform_index(std::mt19937_64& rng, std::size_t bound) {
  const std::uint64_t limit =
      std::numeric_limits<std::uint64_t>::max() -
      std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t draw;
  do {
    draw = rng();
  } while (draw >= limit);
  return static_cast<std::size_t>(draw % bound);
}

std::vector<std::string> index_labels(int n) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (int i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  return labels;
}

}  // namespace

Graph gen_er(int n, double edge_probability, std::uint64_t seed) {
  if (n < 2) throw GraphError("gen_er requires n >= 2");
  if (edge_probability < 0.0 || edge_probability > 1.0)
    throw GraphError("edge probability must lie in [0,1]");
  std::mt19937_64 rng(seed);
  std::vector<EdgeRecord> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (uniform01(rng) < edge_probability) edges.push_back({u, v, 1.0});
  return Graph::from_edges(index_labels(n), std::move(edges), false);
}

Graph gen_ba(int n, int m, std::uint64_t seed) {
  if (m < 1 || m >= n) throw GraphError("gen_ba requires 1 <= m < n");
  std::mt19937_64 rng(seed);
  std::vector<EdgeRecord> edges;
  // Every edge contributes both endpoints; sampling an index uniformly
  // from this list is degree-proportional sampling.
  std::vector<int> endpoints;
  for (int v = 1; v <= m; ++v) {
    edges.push_back({0, v, 1.0});
    endpoints.push_back(0);
    endpoints.push_back(v);
  }
  std::set<int> targets;
  for (int v = m + 1; v < n; ++v) {
    targets.clear();
    while (static_cast<int>(targets.size()) < m)
      targets.insert(endpoints[uniform_index(rng, endpoints.size())]);
    for (const int t : targets) {
      edges.push_back({t, v, 1.0});
      endpoints.push_back(t);
      endpoints.push_back(v);
    }
  }
  return Graph::from_edges(index_labels(n), std::move(edges), false);
}

ScalingReport scaling_study(std::string_view model, std::span<const int> sizes,
                            const ScalingOptions& options, std::uint64_t seed) {
  if (model != "er" && model != "ba")
    throw GraphError("unknown model '" + std::string(model) + "'");
  if (sizes.empty()) throw GraphError("scaling_study needs at least one size");
  for (std::size_t i = 1; i < sizes.size(); ++i)
    if (sizes[i] <= sizes[i - 1])
      throw GraphError("sizes must be strictly increasing");

  ScalingReport report;
  report.model = model;
  report.workers = options.workers;
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    const int n = sizes[i];
    const std::uint64_t graph_seed = seed + i;
    Graph graph;
    if (model == "er") {
      const double p = std::min(1.0, options.er_mean_degree / (n - 1));
      graph = gen_er(n, p, graph_seed);
    } else {
      graph = gen_ba(n, options.ba_m, graph_seed);
    }

    const auto start = std::chrono::steady_clock::now();
    const CentralityResult result =
        compute_all(graph, PairConvention::kUnordered, options.workers);
    const auto stop = std::chrono::steady_clock::now();
    (void)result;

    const double total = count_total_geodesics(graph);
    if (total <= 0.0)
      throw GraphError("degenerate graph in scaling sweep (no geodesics)");
    report.sizes.push_back(n);
    report.mean_sigma.push_back(total / (static_cast<double>(n) * n));
    report.runtimes_sec.push_back(
        std::chrono::duration<double>(stop - start).count());
  }

  // Log-log least squares for mean_sigma ~ n^p.
  const std::size_t k = report.sizes.size();
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < k; ++i) {
    const double x = std::log(static_cast<double>(report.sizes[i]));
    const double y = std::log(report.mean_sigma[i]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double denom = k * sxx - sx * sx;
  report.fitted_exponent = denom == 0.0 ? 0.0 : (k * sxy - sx * sy) / denom;
  return report;
}

std::string to_json(const ScalingReport& report) {
  nlohmann::json j;
  j["model"] = report.model;
  j["sizes"] = report.sizes;
  j["mean_sigma"] = report.mean_sigma;
  j["fitted_exponent"] = report.fitted_exponent;
  j["runtimes_sec"] = report.runtimes_sec;
  j["workers"] = report.workers;
  return j.dump(2) + "\n";
}

}  // namespace cobet::netgen
