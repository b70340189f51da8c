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

#include <benchmark/benchmark.h>

#include "cobet/centrality.hpp"
#include "cobet/netgen.hpp"
#include "cobet/sp_dag.hpp"

namespace {

cobet::Graph er_graph(int n) {
  return cobet::netgen::gen_er(n, 6.0 / (n - 1), 7);
}

void BM_BuildSpDag(benchmark::State& state) {
  const cobet::Graph g = er_graph(static_cast<int>(state.range(0)));
  int source = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(cobet::build_sp_dag(g, source));
    source = (source + 1) % g.vertex_count();
  }
}
BENCHMARK(BM_BuildSpDag)->Arg(200)->Arg(1000)->Arg(4000);

void BM_ComputeAllEr(benchmark::State& state) {
  const cobet::Graph g = er_graph(static_cast<int>(state.range(0)));
  const int workers = static_cast<int>(state.range(1));
  for (auto _ : state)
    benchmark::DoNotOptimize(
        cobet::compute_all(g, cobet::PairConvention::kUnordered, workers));
}
BENCHMARK(BM_ComputeAllEr)
    ->Args({200, 1})
    ->Args({400, 1})
    ->Args({400, 4})
    ->Args({800, 4})
    ->Unit(benchmark::kMillisecond);

void BM_ComputeAllBa(benchmark::State& state) {
  const cobet::Graph g =
      cobet::netgen::gen_ba(static_cast<int>(state.range(0)), 2, 11);
  for (auto _ : state)
    benchmark::DoNotOptimize(
        cobet::compute_all(g, cobet::PairConvention::kUnordered, 4));
}
BENCHMARK(BM_ComputeAllBa)->Arg(400)->Arg(800)->Unit(benchmark::kMillisecond);

void BM_BruteOracle(benchmark::State& state) {
  const cobet::Graph g = er_graph(static_cast<int>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(cobet::count_total_geodesics(g));
}
BENCHMARK(BM_BruteOracle)->Arg(200)->Arg(800);

}  // namespace

int main(int argc, char** argv) {
  benchmark::Initialize(&argc, argv);
  benchmark::RunSpecifiedBenchmarks();
  return 0;
}
