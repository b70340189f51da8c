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
#include <unordered_map>
#include <vector>

#include "cobet/dependency.hpp"
#include "cobet/graph.hpp"
#include "cobet/sp_dag.hpp"

namespace cobet {

/// Pair-sum convention for betweenness-style measures on undirected
/// graphs. The defining double sums run over ordered source/target pairs,
/// which counts every unordered pair twice; the unordered convention
/// halves them so that "betweenness equals the number of geodesics through
/// the vertex" holds literally under unique shortest paths. Ordered values
/// are exactly twice the unordered ones. Ratio measures (correlation-style
/// and conditional) are identical under both.
enum class PairConvention { kUnordered, kOrdered };

struct PairValue {
  int u = 0;  // u < v
  int v = 0;
  double value = 0.0;
};

/// Symmetric map from unordered vertex pairs to accumulated contributions.
/// Keys are canonically ordered, so symmetry holds by construction. Merging
/// two accumulators adds values per key; merge is associative and
/// commutative, which is what makes per-worker accumulation sound.
class PairAccumulator {
 public:
  void add(int u, int v, double amount) { entries_[key(u, v)] += amount; }
  double value(int u, int v) const {
    auto it = entries_.find(key(u, v));
    return it == entries_.end() ? 0.0 : it->second;
  }
  void merge(const PairAccumulator& other) {
    for (const auto& [k, v] : other.entries_) entries_[k] += v;
  }
  void scale(double factor) {
    for (auto& [k, v] : entries_) v *= factor;
  }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  /// Entries with u < v, ascending by (u, v). Zero-valued entries that
  /// happen to exist in the map are reported as stored.
  std::vector<PairValue> sorted_entries() const;

  /// Largest entry, or {0,0,0} when empty.
  PairValue max_entry() const;

 private:
  static std::uint64_t key(int u, int v) {
    const auto lo = static_cast<std::uint64_t>(u < v ? u : v);
    const auto hi = static_cast<std::uint64_t>(u < v ? v : u);
    return (lo << 32) | hi;
  }
  std::unordered_map<std::uint64_t, double> entries_;
};

/// Betweenness vector plus co-betweenness pair map under one convention.
/// For every pair, 0 <= C(u,v) <= min(B(u), B(v)).
struct CentralityResult {
  std::vector<double> betweenness;
  PairAccumulator cobetweenness;
  PairConvention convention = PairConvention::kUnordered;
};

/// Stage 3: walks every geodesic out of the DAG's source depth-first with
/// an explicit path stack, and for each visited vertex v with positive
/// dependency adds delta(v)/sigma(v) to the accumulator entry {u, v} for
/// every ancestor u of v on the current path, the source excluded. A
/// vertex reached by sigma(v) distinct geodesics therefore receives one
/// addition per geodesic per ancestor. Time is proportional to the total
/// geodesic length out of the source.
void accumulate_pair_contributions(const SpDag& dag, const DependencyScores& dep,
                                   PairAccumulator& acc);

/// Runs the per-source pipeline (DAG build, dependency recursion, pair
/// accumulation) over all sources, distributing sources across `workers`
/// threads. Each worker owns a private accumulator; a single merge phase
/// follows. The result is independent of the worker count up to floating
/// summation order (1e-9 absolute in practice).
CentralityResult compute_all(const Graph& graph,
                             PairConvention convention = PairConvention::kUnordered,
                             int workers = 1, double tie_tolerance = 0.0);

/// Standardized co-betweenness: C(u,v)/sqrt(B(u)B(v)), defined as 0 when
/// the denominator vanishes (the numerator is then necessarily 0). Values
/// lie in [0,1] and do not depend on the pair convention.
PairAccumulator corr_matrix(const CentralityResult& result);

/// One directed conditional-measure entry: `value` is the fraction of
/// `given`'s geodesic traffic that also passes through `u`.
struct CondValue {
  int u = 0;
  int given = 0;
  double value = 0.0;
};

/// Conditional betweenness C(u|v) = C(u,v)/B(v), 0 when B(v) = 0; in
/// general C(u|v) != C(v|u). Returns the nonzero entries for both
/// orientations of every stored pair, ascending by (given, u).
std::vector<CondValue> cond_matrix(const CentralityResult& result);

/// Point lookup of C(u|v).
double cond_value(const CentralityResult& result, int u, int given);

}  // namespace cobet
