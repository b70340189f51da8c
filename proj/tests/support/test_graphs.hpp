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

#include <deque>
#include <string>
#include <utility>
#include <vector>

#include "cobet/graph.hpp"
#include "cobet/netgen.hpp"

namespace cobet::testing {

inline std::vector<std::string> index_labels(int n) {
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  return labels;
}

inline Graph from_pairs(int n, const std::vector<std::pair<int, int>>& pairs) {
  std::vector<EdgeRecord> edges;
  for (const auto& [u, v] : pairs) edges.push_back({u, v, 1.0});
  return Graph::from_edges(index_labels(n), std::move(edges), false);
}

inline Graph make_path(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int v = 0; v + 1 < n; ++v) pairs.emplace_back(v, v + 1);
  return from_pairs(n, pairs);
}

inline Graph make_cycle(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int v = 0; v + 1 < n; ++v) pairs.emplace_back(v, v + 1);
  pairs.emplace_back(n - 1, 0);
  return from_pairs(n, pairs);
}

// Star with the hub at index 0.
inline Graph make_star(int leaves) {
  std::vector<std::pair<int, int>> pairs;
  for (int v = 1; v <= leaves; ++v) pairs.emplace_back(0, v);
  return from_pairs(leaves + 1, pairs);
}

inline Graph make_complete(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  return from_pairs(n, pairs);
}

// Plain queue-based hop distances, kept separate from the library's
// traversal on purpose; -1 marks unreachable vertices.
inline std::vector<int> reference_hop_distances(const Graph& graph, int source) {
  std::vector<int> dist(graph.vertex_count(), -1);
  std::deque<int> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    for (const Neighbor& nb : graph.neighbors(v))
      if (dist[nb.to] < 0) {
        dist[nb.to] = dist[v] + 1;
        queue.push_back(nb.to);
      }
  }
  return dist;
}

struct CorpusEntry {
  std::string name;
  Graph graph;
};

// The graph families shared by the property tests and the acceptance
// suite: 200 seeded random graphs (100 Erdos-Renyi over p in
// {0.08, 0.15, 0.3}, 100 preferential-attachment over m in {1,2,3}, sizes
// spread over [5,60]) plus paths P2..P10, cycles C3..C12, stars with 2..8
// leaves, and complete graphs K3..K8.
inline std::vector<CorpusEntry> acceptance_corpus() {
  std::vector<CorpusEntry> corpus;
  const double er_p[] = {0.08, 0.15, 0.3};
  for (int i = 0; i < 100; ++i) {
    const int n = 5 + (i * 7) % 56;
    const double p = er_p[i % 3];
    const std::uint64_t seed = 1000 + i;
    corpus.push_back({"er-n" + std::to_string(n) + "-p" + std::to_string(p) +
                          "-s" + std::to_string(seed),
                      netgen::gen_er(n, p, seed)});
  }
  const int ba_m[] = {1, 2, 3};
  for (int i = 0; i < 100; ++i) {
    const int n = 5 + (i * 11) % 56;
    const int m = ba_m[i % 3];
    const std::uint64_t seed = 2000 + i;
    corpus.push_back({"ba-n" + std::to_string(n) + "-m" + std::to_string(m) +
                          "-s" + std::to_string(seed),
                      netgen::gen_ba(n, m, seed)});
  }
  for (int n = 2; n <= 10; ++n)
    corpus.push_back({"path-" + std::to_string(n), make_path(n)});
  for (int n = 3; n <= 12; ++n)
    corpus.push_back({"cycle-" + std::to_string(n), make_cycle(n)});
  for (int leaves = 2; leaves <= 8; ++leaves)
    corpus.push_back({"star-" + std::to_string(leaves), make_star(leaves)});
  for (int n = 3; n <= 8; ++n)
    corpus.push_back({"complete-" + std::to_string(n), make_complete(n)});
  return corpus;
}

// A cheap slice of the corpus for unit-level property tests.
inline std::vector<CorpusEntry> small_corpus() {
  std::vector<CorpusEntry> corpus;
  for (int i = 0; i < 8; ++i) {
    const int n = 6 + i * 5;
    corpus.push_back({"er-" + std::to_string(i),
                      netgen::gen_er(n, 0.2, 100 + i)});
    corpus.push_back({"ba-" + std::to_string(i),
                      netgen::gen_ba(n, 1 + i % 3, 200 + i)});
  }
  corpus.push_back({"path-7", make_path(7)});
  corpus.push_back({"cycle-8", make_cycle(8)});
  corpus.push_back({"star-5", make_star(5)});
  corpus.push_back({"complete-5", make_complete(5)});
  return corpus;
}

}  // namespace cobet::testing
