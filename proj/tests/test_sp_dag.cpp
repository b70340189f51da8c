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

#include <algorithm>
#include <set>
#include <vector>

#include <doctest.h>

#include "cobet/oracle.hpp"
#include "cobet/sp_dag.hpp"
#include "support/test_graphs.hpp"

using namespace cobet;

namespace {

std::set<int> as_set(std::span<const int> span) {
  return {span.begin(), span.end()};
}

}  // namespace

TEST_CASE("sp-dag: path P4 from one end") {
  const SpDag dag = build_sp_dag(testing::make_path(4), 0);
  CHECK(dag.dist == std::vector<double>{0, 1, 2, 3});
  CHECK(dag.sigma == std::vector<double>{1, 1, 1, 1});
  CHECK(as_set(dag.parents(3)) == std::set<int>{2});
  CHECK(as_set(dag.children(0)) == std::set<int>{1});
  CHECK(dag.parents(0).empty());
}

TEST_CASE("sp-dag: cycle C4 has two geodesics to the antipode") {
  const SpDag dag = build_sp_dag(testing::make_cycle(4), 0);
  CHECK(dag.dist == std::vector<double>{0, 1, 2, 1});
  CHECK(dag.sigma[2] == 2.0);
  CHECK(as_set(dag.parents(2)) == std::set<int>{1, 3});
}

TEST_CASE("sp-dag: weighted triangle prefers the two-hop route") {
  const Graph g = parse_edgelist("a b 1\nb c 1\na c 3", {.weighted = true});
  const SpDag dag = build_sp_dag(g, 0);
  CHECK(dag.dist[2] == 2.0);
  CHECK(dag.sigma[2] == 1.0);
  CHECK(as_set(dag.parents(2)) == std::set<int>{1});
}

TEST_CASE("sp-dag: unreachable vertices keep the sentinel and zero count") {
  const Graph g = parse_edgelist("a b\nc d");
  const SpDag dag = build_sp_dag(g, 0);
  CHECK(dag.dist[2] == kUnreachable);
  CHECK(dag.sigma[2] == 0.0);
  CHECK(dag.parents(2).empty());
  CHECK(dag.children(2).empty());
  CHECK(dag.settle_order.size() == 2);
}

TEST_CASE("sp-dag: geodesic-count identity and DAG structure hold") {
  for (const auto& [name, graph] : testing::small_corpus()) {
    CAPTURE(name);
    for (int s = 0; s < graph.vertex_count(); ++s) {
      const SpDag dag = build_sp_dag(graph, s);
      std::vector<int> settle_pos(graph.vertex_count(), -1);
      for (int i = 0; i < static_cast<int>(dag.settle_order.size()); ++i)
        settle_pos[dag.settle_order[i]] = i;
      for (int v = 0; v < graph.vertex_count(); ++v) {
        if (v == s || !dag.reachable(v)) continue;
        // sigma(v) equals the sum over parents
        double total = 0.0;
        for (const int p : dag.parents(v)) total += dag.sigma[p];
        CHECK(dag.sigma[v] == total);
        // settle order is topological for the parent relation
        for (const int p : dag.parents(v)) {
          CHECK(settle_pos[p] >= 0);
          CHECK(settle_pos[p] < settle_pos[v]);
        }
        // children is the exact transpose of parents
        for (const int p : dag.parents(v)) {
          const auto kids = dag.children(p);
          CHECK(std::count(kids.begin(), kids.end(), v) == 1);
        }
      }
      int child_edges = 0, parent_edges = 0;
      for (int v = 0; v < graph.vertex_count(); ++v) {
        child_edges += static_cast<int>(dag.children(v).size());
        parent_edges += static_cast<int>(dag.parents(v).size());
      }
      CHECK(child_edges == parent_edges);
    }
  }
}

TEST_CASE("sp-dag: unweighted distances match a reference traversal") {
  for (const auto& [name, graph] : testing::small_corpus()) {
    CAPTURE(name);
    for (int s = 0; s < graph.vertex_count(); s += 3) {
      const SpDag dag = build_sp_dag(graph, s);
      const std::vector<int> ref = testing::reference_hop_distances(graph, s);
      for (int v = 0; v < graph.vertex_count(); ++v) {
        if (ref[v] < 0)
          CHECK(dag.dist[v] == kUnreachable);
        else
          CHECK(dag.dist[v] == static_cast<double>(ref[v]));
      }
    }
  }
}

TEST_CASE("sp-dag: sigma is symmetric in source and target") {
  for (const auto& [name, graph] : testing::small_corpus()) {
    CAPTURE(name);
    const int n = graph.vertex_count();
    std::vector<SpDag> dags;
    dags.reserve(n);
    for (int s = 0; s < n; ++s) dags.push_back(build_sp_dag(graph, s));
    for (int s = 0; s < n; ++s)
      for (int t = 0; t < n; ++t) CHECK(dags[s].sigma[t] == dags[t].sigma[s]);
  }
}

TEST_CASE("sp-dag: total geodesic counts") {
  CHECK(count_total_geodesics(testing::make_path(3)) == 6.0);
  CHECK(count_total_geodesics(testing::make_cycle(4)) == 16.0);
}

TEST_CASE("sp-dag: total geodesic count matches exhaustive enumeration") {
  const Graph g = netgen::gen_er(30, 0.2, 7);
  const oracle::AllPairs ap(g);
  double total = 0.0;
  for (int s = 0; s < g.vertex_count(); ++s)
    for (int t = 0; t < g.vertex_count(); ++t) {
      if (s == t) continue;
      total += static_cast<double>(
          oracle::enumerate_geodesics(g, ap, s, t).paths.size());
    }
  CHECK(count_total_geodesics(g) == total);
}

TEST_CASE("sp-dag: tie tolerance widens the parent relation") {
  // Two routes of weight 2.0 and 1.9999999999; exact comparison keeps only
  // the cheaper one, a loose tolerance admits both.
  const Graph g = parse_edgelist(
      "a b 1.0\nb d 1.0\na c 1.0\nc d 0.9999999999", {.weighted = true});
  const int d = g.find_vertex("d");

  const SpDag exact = build_sp_dag(g, 0);
  CHECK(exact.sigma[d] == 1.0);
  CHECK(as_set(exact.parents(d)) == std::set<int>{g.find_vertex("c")});

  const SpDag loose = build_sp_dag(g, 0, 1e-6);
  CHECK(loose.sigma[d] == 2.0);
  CHECK(as_set(loose.parents(d)) ==
        std::set<int>{g.find_vertex("b"), g.find_vertex("c")});
}
