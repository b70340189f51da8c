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

#include "cobet/dependency.hpp"

namespace cobet {

DependencyScores accumulate_dependencies(const SpDag& dag) {
  DependencyScores scores;
  scores.source = dag.source;
  scores.delta.assign(dag.vertex_count(), 0.0);
  for (auto it = dag.settle_order.rbegin(); it != dag.settle_order.rend(); ++it) {
    const int v = *it;
    double acc = 0.0;
    for (const int w : dag.children(v))
      acc += dag.sigma[v] / dag.sigma[w] * (1.0 + scores.delta[w]);
    scores.delta[v] = acc;
  }
  return scores;
}

}  // namespace cobet
