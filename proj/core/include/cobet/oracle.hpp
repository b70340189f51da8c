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

#include <vector>

#include "cobet/centrality.hpp"
#include "cobet/graph.hpp"

// Brute-force reference implementations. Everything here is deliberately
// simple and single-threaded: distances come from Floyd-Warshall rather
// than the per-source traversals the engine uses, geodesics are
// materialized explicitly, and the centrality sums follow the defining
// formulas term by term. This module is the trusted side of every
// engine-vs-oracle check, so it shares no shortest-path code with the
// engine.
//
// Exact distance comparisons assume edge-weight sums are exactly
// representable (integers and other dyadic rationals; unweighted graphs
// always qualify).
namespace cobet::oracle {

/// Hard ceiling on vertex count for the quartic-time operations. Callers
/// can override it with force=true.
inline constexpr int kSizeGuard = 200;

class SizeGuardError : public GraphError {
 public:
  using GraphError::GraphError;
};

/// All-pairs geodesic distances and counts.
class AllPairs {
 public:
  explicit AllPairs(const Graph& graph);

  int vertex_count() const { return n_; }
  double dist(int s, int t) const { return dist_[idx(s, t)]; }
  bool reachable(int s, int t) const { return dist(s, t) != kUnreachable; }
  /// Geodesic count sigma(s, t), with sigma(s, s) = 1.
  double sigma(int s, int t) const { return sigma_[idx(s, t)]; }

 private:
  std::size_t idx(int s, int t) const {
    return static_cast<std::size_t>(s) * n_ + t;
  }
  int n_ = 0;
  std::vector<double> dist_;
  std::vector<double> sigma_;
};

/// Exhaustive list of the geodesics between one vertex pair. Paths run
/// from s to t inclusive; the count equals sigma(s, t); an unreachable
/// pair yields an empty set.
struct GeodesicSet {
  int s = 0;
  int t = 0;
  std::vector<std::vector<int>> paths;
};

GeodesicSet enumerate_geodesics(const Graph& graph, const AllPairs& ap, int s,
                                int t);
GeodesicSet enumerate_geodesics(const Graph& graph, int s, int t);

/// Count of geodesics between s and t that pass through v, by the
/// distance-splitting identity: sigma(s,v) * sigma(v,t) when
/// d(s,t) = d(s,v) + d(v,t), else 0.
double sigma_through(const AllPairs& ap, int s, int t, int v);
double sigma_through(const Graph& graph, int s, int t, int v);

/// Count of geodesics between s and t passing through both u and v, by the
/// three-factor splitting in whichever ordering of u and v satisfies the
/// distance identity (at most one can).
double sigma_through_pair(const AllPairs& ap, int s, int t, int u, int v);
double sigma_through_pair(const Graph& graph, int s, int t, int u, int v);

/// Direct evaluation of the defining double sums for betweenness and
/// co-betweenness. Quartic time; refuses graphs above kSizeGuard vertices
/// unless forced.
CentralityResult brute_centrality(const Graph& graph,
                                  PairConvention convention = PairConvention::kUnordered,
                                  bool force = false);

/// Vertex-by-geodesic incidence matrix. Every geodesic of every
/// (reachable, distinct) vertex pair gets its own column; the entries of a
/// column are sigma(s,t)^{-1/2} at the column's interior vertices and zero
/// elsewhere, so that the Gram matrix R R^T carries betweenness on the
/// diagonal and co-betweenness off it under the unordered convention.
/// (With sigma^{-1} entries the Gram product would be a sum of
/// sigma(s,t)(u,v)/sigma(s,t)^2 terms, which is not the co-betweenness
/// unless geodesics are unique.) The ordered convention duplicates every
/// column.
struct RoutingMatrix {
  struct Column {
    int s = 0;
    int t = 0;
    double entry = 0.0;         // shared by all interior vertices
    std::vector<int> interior;  // vertices with nonzero incidence
  };
  int vertex_count = 0;
  std::vector<Column> columns;

  double entry(int v, std::size_t column) const;
};

RoutingMatrix build_routing_matrix(const Graph& graph,
                                   PairConvention convention = PairConvention::kUnordered,
                                   bool force = false);

/// Gram matrix R R^T, dense row-major vertex_count x vertex_count.
std::vector<double> omega(const RoutingMatrix& routing);

}  // namespace cobet::oracle
