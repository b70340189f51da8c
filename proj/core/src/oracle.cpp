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

#include "cobet/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "cobet/sp_dag.hpp"

namespace cobet::oracle {

namespace {

void check_size_guard(const Graph& graph, bool force, const char* what) {
  if (!force && graph.vertex_count() > kSizeGuard)
    throw SizeGuardError(std::string(what) + ": " +
                         std::to_string(graph.vertex_count()) +
                         " vertices exceed the size guard of " +
                         std::to_string(kSizeGuard) +
                         " (pass force to override)");
}

}  // namespace

AllPairs::AllPairs(const Graph& graph) : n_(graph.vertex_count()) {
  const std::size_t nn = static_cast<std::size_t>(n_) * n_;
  dist_.assign(nn, kUnreachable);
  sigma_.assign(nn, 0.0);

  for (int v = 0; v < n_; ++v) dist_[idx(v, v)] = 0.0;
  for (int v = 0; v < n_; ++v)
    for (const Neighbor& nb : graph.neighbors(v))
      dist_[idx(v, nb.to)] = std::min(dist_[idx(v, nb.to)], nb.weight);

  // Floyd-Warshall; deliberately not the engine's per-source traversal.
  for (int k = 0; k < n_; ++k)
    for (int i = 0; i < n_; ++i) {
      const double dik = dist_[idx(i, k)];
      if (dik == kUnreachable) continue;
      for (int j = 0; j < n_; ++j) {
        const double alt = dik + dist_[idx(k, j)];
        if (alt < dist_[idx(i, j)]) dist_[idx(i, j)] = alt;
      }
    }

  // Geodesic counts per source: sweep vertices by increasing distance and
  // sum the counts of the geodesic predecessors, i.e. neighbors u of v
  // with d(s,u) + w(u,v) = d(s,v).
  std::vector<int> order(n_);
  for (int s = 0; s < n_; ++s) {
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
      return dist_[idx(s, a)] < dist_[idx(s, b)];
    });
    sigma_[idx(s, s)] = 1.0;
    for (const int v : order) {
      if (v == s || dist_[idx(s, v)] == kUnreachable) continue;
      double total = 0.0;
      for (const Neighbor& nb : graph.neighbors(v))
        if (dist_[idx(s, nb.to)] + nb.weight == dist_[idx(s, v)])
          total += sigma_[idx(s, nb.to)];
      sigma_[idx(s, v)] = total;
    }
  }
}

GeodesicSet enumerate_geodesics(const Graph& graph, const AllPairs& ap, int s,
                                int t) {
  GeodesicSet set;
  set.s = s;
  set.t = t;
  if (!ap.reachable(s, t)) return set;

  // Backward walk from t: a neighbor u of v precedes v on a geodesic from
  // s exactly when d(s,u) + w(u,v) = d(s,v).
  std::vector<int> partial{t};
  auto walk = [&](auto&& self, int v) -> void {
    if (v == s) {
      set.paths.emplace_back(partial.rbegin(), partial.rend());
      return;
    }
    for (const Neighbor& nb : graph.neighbors(v)) {
      if (ap.dist(s, nb.to) + nb.weight == ap.dist(s, v)) {
        partial.push_back(nb.to);
        self(self, nb.to);
        partial.pop_back();
      }
    }
  };
  walk(walk, t);
  return set;
}

GeodesicSet enumerate_geodesics(const Graph& graph, int s, int t) {
  return enumerate_geodesics(graph, AllPairs(graph), s, t);
}

double sigma_through(const AllPairs& ap, int s, int t, int v) {
  if (!ap.reachable(s, v) || !ap.reachable(v, t)) return 0.0;
  if (ap.dist(s, v) + ap.dist(v, t) != ap.dist(s, t)) return 0.0;
  return ap.sigma(s, v) * ap.sigma(v, t);
}

double sigma_through(const Graph& graph, int s, int t, int v) {
  return sigma_through(AllPairs(graph), s, t, v);
}

double sigma_through_pair(const AllPairs& ap, int s, int t, int u, int v) {
  if (!ap.reachable(s, t)) return 0.0;
  // At most one ordering can satisfy the identity: on any geodesic the
  // distance from s increases strictly along the path.
  if (ap.reachable(s, u) && ap.reachable(u, v) && ap.reachable(v, t) &&
      ap.dist(s, u) + ap.dist(u, v) + ap.dist(v, t) == ap.dist(s, t))
    return ap.sigma(s, u) * ap.sigma(u, v) * ap.sigma(v, t);
  if (ap.reachable(s, v) && ap.reachable(v, u) && ap.reachable(u, t) &&
      ap.dist(s, v) + ap.dist(v, u) + ap.dist(u, t) == ap.dist(s, t))
    return ap.sigma(s, v) * ap.sigma(v, u) * ap.sigma(u, t);
  return 0.0;
}

double sigma_through_pair(const Graph& graph, int s, int t, int u, int v) {
  return sigma_through_pair(AllPairs(graph), s, t, u, v);
}

CentralityResult brute_centrality(const Graph& graph, PairConvention convention,
                                  bool force) {
  check_size_guard(graph, force, "brute_centrality");
  const AllPairs ap(graph);
  const int n = graph.vertex_count();
  const double factor = convention == PairConvention::kOrdered ? 2.0 : 1.0;

  CentralityResult result;
  result.convention = convention;
  result.betweenness.assign(n, 0.0);

  // Defining sums over unordered (s,t); the ordered convention doubles
  // them since sigma terms are symmetric on an undirected graph.
  for (int s = 0; s < n; ++s)
    for (int t = s + 1; t < n; ++t) {
      const double st = ap.sigma(s, t);
      if (st == 0.0) continue;  // unreachable pairs contribute nothing
      for (int v = 0; v < n; ++v) {
        if (v == s || v == t) continue;
        const double through = sigma_through(ap, s, t, v);
        if (through != 0.0) result.betweenness[v] += factor * through / st;
      }
    }

  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      for (int s = 0; s < n; ++s) {
        if (s == u || s == v) continue;
        for (int t = s + 1; t < n; ++t) {
          if (t == u || t == v) continue;
          const double st = ap.sigma(s, t);
          if (st == 0.0) continue;
          const double through = sigma_through_pair(ap, s, t, u, v);
          if (through != 0.0)
            result.cobetweenness.add(u, v, factor * through / st);
        }
      }

  return result;
}

double RoutingMatrix::entry(int v, std::size_t column) const {
  const Column& col = columns[column];
  for (const int u : col.interior)
    if (u == v) return col.entry;
  return 0.0;
}

RoutingMatrix build_routing_matrix(const Graph& graph, PairConvention convention,
                                   bool force) {
  check_size_guard(graph, force, "build_routing_matrix");
  const AllPairs ap(graph);
  const int n = graph.vertex_count();

  RoutingMatrix routing;
  routing.vertex_count = n;
  for (int s = 0; s < n; ++s)
    for (int t = s + 1; t < n; ++t) {
      if (!ap.reachable(s, t)) continue;
      const GeodesicSet set = enumerate_geodesics(graph, ap, s, t);
      const double entry = 1.0 / std::sqrt(ap.sigma(s, t));
      for (const auto& path : set.paths) {
        RoutingMatrix::Column col;
        col.s = s;
        col.t = t;
        col.entry = entry;
        col.interior.assign(path.begin() + 1, path.end() - 1);
        routing.columns.push_back(col);
        if (convention == PairConvention::kOrdered)
          routing.columns.push_back(std::move(col));
      }
    }
  return routing;
}

std::vector<double> omega(const RoutingMatrix& routing) {
  const int n = routing.vertex_count;
  std::vector<double> gram(static_cast<std::size_t>(n) * n, 0.0);
  for (const auto& col : routing.columns) {
    const double w = col.entry * col.entry;
    for (const int i : col.interior)
      for (const int j : col.interior)
        gram[static_cast<std::size_t>(i) * n + j] += w;
  }
  return gram;
}

}  // namespace cobet::oracle
