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

#include <limits>
#include <span>
#include <vector>

#include "cobet/graph.hpp"

namespace cobet {

/// Distance value assigned to vertices with no path from the source.
inline constexpr double kUnreachable = std::numeric_limits<double>::infinity();

/// Stage 1 output: the union of all geodesics out of one source, directed
/// by increasing distance.
///
/// Invariants:
///   - v is a parent of w iff the edge (v,w) exists and
///     dist(w) = dist(v) + w_vw; children is the exact transpose,
///   - sigma(v) equals the sum of sigma over parents(v) for every
///     reachable v other than the source, and sigma(source) = 1,
///   - settle_order lists exactly the reachable vertices in non-decreasing
///     distance, which is a topological order of the parent relation,
///   - unreachable vertices have sigma 0 and empty parent/child lists.
struct SpDag {
  int source = 0;
  std::vector<double> dist;   // hop count, or weight sum; kUnreachable sentinel
  // Geodesic counts are real-valued: they grow combinatorially and the
  // downstream ratios are real anyway. Counts beyond 2^53 lose precision
  // instead of failing.
  std::vector<double> sigma;
  std::vector<int> settle_order;

  // Parent/child lists of the geodesic DAG, in compressed form. Stages 2
  // and 3 iterate children on their hot paths, so both directions are
  // materialized.
  std::vector<int> parent_offsets, parent_list;
  std::vector<int> child_offsets, child_list;

  int vertex_count() const { return static_cast<int>(dist.size()); }
  bool reachable(int v) const { return dist[v] != kUnreachable; }

  std::span<const int> parents(int v) const {
    return {parent_list.data() + parent_offsets[v],
            static_cast<std::size_t>(parent_offsets[v + 1] - parent_offsets[v])};
  }
  std::span<const int> children(int v) const {
    return {child_list.data() + child_offsets[v],
            static_cast<std::size_t>(child_offsets[v + 1] - child_offsets[v])};
  }
};

/// Builds the shortest-path DAG for one source: a breadth-first traversal
/// on unweighted graphs, non-negative-weight label settling otherwise.
/// Distinct sources share no state and may run fully in parallel.
///
/// tie_tolerance widens the weighted parent test dist(v) + w_vw = dist(w)
/// to |difference| <= tie_tolerance, for inputs whose weights carry
/// decimal-rounding artifacts. The default is exact comparison.
SpDag build_sp_dag(const Graph& graph, int source, double tie_tolerance = 0.0);

/// Sum of sigma(u, v) over all ordered reachable pairs u != v.
double count_total_geodesics(const Graph& graph);

}  // namespace cobet
