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

#include "cobet/sp_dag.hpp"

#include <cmath>
#include <queue>
#include <stdexcept>
#include <utility>

namespace cobet {

namespace {

void settle_breadth_first(const Graph& graph, SpDag& dag) {
  dag.dist[dag.source] = 0.0;
  dag.settle_order.push_back(dag.source);
  for (std::size_t head = 0; head < dag.settle_order.size(); ++head) {
    const int v = dag.settle_order[head];
    for (const Neighbor& nb : graph.neighbors(v)) {
      if (dag.dist[nb.to] == kUnreachable) {
        dag.dist[nb.to] = dag.dist[v] + 1.0;
        dag.settle_order.push_back(nb.to);
      }
    }
  }
}

void settle_dijkstra(const Graph& graph, SpDag& dag) {
  using Entry = std::pair<double, int>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> queue;
  std::vector<char> settled(graph.vertex_count(), 0);
  dag.dist[dag.source] = 0.0;
  queue.push({0.0, dag.source});
  while (!queue.empty()) {
    const auto [d, v] = queue.top();
    queue.pop();
    if (settled[v]) continue;
    settled[v] = 1;
    dag.settle_order.push_back(v);
    for (const Neighbor& nb : graph.neighbors(v)) {
      const double nd = d + nb.weight;
      if (nd < dag.dist[nb.to]) {
        dag.dist[nb.to] = nd;
        queue.push({nd, nb.to});
      }
    }
  }
}

}  // namespace

SpDag build_sp_dag(const Graph& graph, int source, double tie_tolerance) {
  const int n = graph.vertex_count();
  if (source < 0 || source >= n)
    throw GraphError("source vertex out of range");

  SpDag dag;
  dag.source = source;
  dag.dist.assign(n, kUnreachable);
  dag.sigma.assign(n, 0.0);
  dag.settle_order.reserve(n);

  if (graph.weighted())
    settle_dijkstra(graph, dag);
  else
    settle_breadth_first(graph, dag);

  // A DAG edge runs from v to w when the edge lies on a geodesic. The
  // strict dist(v) < dist(w) requirement keeps the relation acyclic even
  // when a positive tolerance is in play.
  auto dag_edge = [&](int v, int w, double weight) {
    return dag.dist[v] < dag.dist[w] &&
           std::abs(dag.dist[v] + weight - dag.dist[w]) <= tie_tolerance;
  };

  dag.parent_offsets.assign(n + 1, 0);
  dag.child_offsets.assign(n + 1, 0);
  for (int v = 0; v < n; ++v) {
    if (!dag.reachable(v)) continue;
    for (const Neighbor& nb : graph.neighbors(v)) {
      if (dag_edge(v, nb.to, nb.weight)) {
        ++dag.child_offsets[v + 1];
        ++dag.parent_offsets[nb.to + 1];
      }
    }
  }
  for (int v = 0; v < n; ++v) {
    dag.parent_offsets[v + 1] += dag.parent_offsets[v];
    dag.child_offsets[v + 1] += dag.child_offsets[v];
  }
  dag.parent_list.resize(dag.parent_offsets[n]);
  dag.child_list.resize(dag.child_offsets[n]);
  std::vector<int> parent_fill(dag.parent_offsets.begin(),
                               dag.parent_offsets.end() - 1);
  std::vector<int> child_fill(dag.child_offsets.begin(),
                              dag.child_offsets.end() - 1);
  for (int v = 0; v < n; ++v) {
    if (!dag.reachable(v)) continue;
    for (const Neighbor& nb : graph.neighbors(v)) {
      if (dag_edge(v, nb.to, nb.weight)) {
        dag.child_list[child_fill[v]++] = nb.to;
        dag.parent_list[parent_fill[nb.to]++] = v;
      }
    }
  }

  // Geodesic counts: the count at v is the sum of the counts at its
  // parents. settle_order is topological for the parent relation, so a
  // single forward sweep suffices.
  for (const int v : dag.settle_order) {
    if (v == source) {
      dag.sigma[v] = 1.0;
      continue;
    }
    double total = 0.0;
    for (const int p : dag.parents(v)) total += dag.sigma[p];
    dag.sigma[v] = total;
  }
  return dag;
}

double count_total_geodesics(const Graph& graph) {
  double total = 0.0;
  for (int s = 0; s < graph.vertex_count(); ++s) {
    const SpDag dag = build_sp_dag(graph, s);
    for (const int v : dag.settle_order)
      if (v != s) total += dag.sigma[v];
  }
  return total;
}

}  // namespace cobet
