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

#include "cobet/centrality.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

namespace cobet {

std::vector<PairValue> PairAccumulator::sorted_entries() const {
  std::vector<PairValue> out;
  out.reserve(entries_.size());
  for (const auto& [k, v] : entries_)
    out.push_back({static_cast<int>(k >> 32),
                   static_cast<int>(k & 0xffffffffu), v});
  std::sort(out.begin(), out.end(), [](const PairValue& a, const PairValue& b) {
    return a.u != b.u ? a.u < b.u : a.v < b.v;
  });
  return out;
}

PairValue PairAccumulator::max_entry() const {
  PairValue best;
  bool first = true;
  for (const auto& [k, v] : entries_) {
    if (first || v > best.value) {
      best = {static_cast<int>(k >> 32), static_cast<int>(k & 0xffffffffu), v};
      first = false;
    }
  }
  return best;
}

void accumulate_pair_contributions(const SpDag& dag, const DependencyScores& dep,
                                   PairAccumulator& acc) {
  struct Frame {
    int vertex;
    const int* next;
    const int* end;
  };
  const auto root = dag.children(dag.source);
  if (root.empty()) return;

  // Iterative depth-first walk: recursion depth would otherwise be bounded
  // only by diameter times branching.
  std::vector<Frame> stack;
  stack.push_back({dag.source, root.data(), root.data() + root.size()});
  while (!stack.empty()) {
    Frame& top = stack.back();
    if (top.next == top.end) {
      stack.pop_back();
      continue;
    }
    const int v = *top.next++;
    // Leaves carry zero dependency and contribute nothing.
    if (dep.delta[v] > 0.0) {
      const double amount = dep.delta[v] / dag.sigma[v];
      // stack[0] is the source, which never plays the ancestor role.
      for (std::size_t i = 1; i < stack.size(); ++i)
        acc.add(stack[i].vertex, v, amount);
    }
    const auto kids = dag.children(v);
    if (!kids.empty())
      stack.push_back({v, kids.data(), kids.data() + kids.size()});
  }
}

CentralityResult compute_all(const Graph& graph, PairConvention convention,
                             int workers, double tie_tolerance) {
  const int n = graph.vertex_count();
  if (workers < 1) throw GraphError("worker count must be positive");
  workers = std::min(workers, std::max(1, n));

  std::vector<std::vector<double>> partial_b(workers);
  std::vector<PairAccumulator> partial_c(workers);

  // Static round-robin source assignment: for a fixed worker count the
  // summation order is reproducible run to run, so repeated invocations
  // (and the ordered/unordered pair of runs) agree bitwise.
  auto run_worker = [&](int w) {
    auto& b = partial_b[w];
    b.assign(n, 0.0);
    auto& acc = partial_c[w];
    for (int s = w; s < n; s += workers) {
      const SpDag dag = build_sp_dag(graph, s, tie_tolerance);
      const DependencyScores dep = accumulate_dependencies(dag);
      for (const int v : dag.settle_order)
        if (v != s) b[v] += dep.delta[v];
      accumulate_pair_contributions(dag, dep, acc);
    }
  };

  if (workers == 1) {
    run_worker(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) pool.emplace_back(run_worker, w);
    for (auto& t : pool) t.join();
  }

  CentralityResult result;
  result.convention = convention;
  result.betweenness.assign(n, 0.0);
  for (int w = 0; w < workers; ++w) {
    for (int v = 0; v < n; ++v) result.betweenness[v] += partial_b[w][v];
    result.cobetweenness.merge(partial_c[w]);
  }
  if (convention == PairConvention::kUnordered) {
    for (double& b : result.betweenness) b *= 0.5;
    result.cobetweenness.scale(0.5);
  }
  return result;
}

PairAccumulator corr_matrix(const CentralityResult& result) {
  PairAccumulator corr;
  for (const PairValue& e : result.cobetweenness.sorted_entries()) {
    const double denom = result.betweenness[e.u] * result.betweenness[e.v];
    if (denom > 0.0 && e.value != 0.0)
      corr.add(e.u, e.v, e.value / std::sqrt(denom));
  }
  return corr;
}

double cond_value(const CentralityResult& result, int u, int given) {
  const double b = result.betweenness[given];
  if (b == 0.0) return 0.0;
  return result.cobetweenness.value(u, given) / b;
}

std::vector<CondValue> cond_matrix(const CentralityResult& result) {
  std::vector<CondValue> out;
  for (const PairValue& e : result.cobetweenness.sorted_entries()) {
    if (e.value == 0.0) continue;
    if (result.betweenness[e.v] > 0.0)
      out.push_back({e.u, e.v, e.value / result.betweenness[e.v]});
    if (result.betweenness[e.u] > 0.0)
      out.push_back({e.v, e.u, e.value / result.betweenness[e.u]});
  }
  std::sort(out.begin(), out.end(), [](const CondValue& a, const CondValue& b) {
    return a.given != b.given ? a.given < b.given : a.u < b.u;
  });
  return out;
}

}  // namespace cobet
