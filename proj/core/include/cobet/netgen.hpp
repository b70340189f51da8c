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

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>

#include "cobet/graph.hpp"

namespace cobet::netgen {

// Seeded pseudo-randomness is part of the contract: the same seed must
// reproduce the same graph on every platform, so sampling avoids the
// implementation-defined standard distributions.

/// Erdos-Renyi G(n, p): every unordered pair is an edge independently with
/// probability edge_probability. Vertices are labeled "0".."n-1" and may
/// be isolated.
Graph gen_er(int n, double edge_probability, std::uint64_t seed);

/// Preferential attachment: start from a star on m+1 vertices (vertex 0 is
/// the hub), then attach each new vertex with m distinct edges to existing
/// vertices chosen proportionally to current degree. Edge count is
/// m + m*(n-m-1); m = 1 yields a tree; the result is always connected.
Graph gen_ba(int n, int m, std::uint64_t seed);

struct ScalingOptions {
  double er_mean_degree = 6.0;  // "er" model: edge probability mean_degree/(n-1)
  int ba_m = 2;                 // "ba" model: edges per new vertex
  int workers = 1;              // forwarded to compute_all and reported
};

/// One row per size: the mean geodesic multiplicity (total geodesic count
/// over ordered reachable pairs, divided by n^2) and the wall-clock cost of
/// a full centrality computation. fitted_exponent is the log-log
/// least-squares slope of mean_sigma against n.
struct ScalingReport {
  std::string model;
  std::vector<int> sizes;
  std::vector<double> mean_sigma;
  double fitted_exponent = 0.0;
  std::vector<double> runtimes_sec;
  int workers = 1;
};

/// model is "er" or "ba"; sizes must be strictly increasing. Graph i uses
/// seed + i, so a sweep is reproducible end to end.
ScalingReport scaling_study(std::string_view model, std::span<const int> sizes,
                            const ScalingOptions& options, std::uint64_t seed);

std::string to_json(const ScalingReport& report);

}  // namespace cobet::netgen
