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

#include "cobet/sp_dag.hpp"

namespace cobet {

/// Stage 2 output: the dependency of a source on each vertex, i.e. the
/// aggregate fraction of the source's geodesic traffic (over all targets
/// other than the vertex itself) that passes through the vertex.
///
/// delta is zero exactly at the DAG leaves, unreachable vertices included.
/// The entry for the source itself falls out of the recursion but is never
/// consumed downstream; pair sums always exclude the source.
struct DependencyScores {
  int source = 0;
  std::vector<double> delta;
};

/// Backward recursion over the shortest-path DAG:
///
///   delta(v) = sum over children w of (sigma(v)/sigma(w)) * (1 + delta(w))
///
/// evaluated in reverse settle order, so every child is final before its
/// parents read it. Runs in time proportional to the DAG edge count.
DependencyScores accumulate_dependencies(const SpDag& dag);

}  // namespace cobet
