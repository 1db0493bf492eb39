// Copyright 2026 The hrecol Authors
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

#include <random>

#include "hrecol/graph.hpp"
#include "hrecol/graph_algorithms.hpp"
#include "hrecol/incidence.hpp"
#include "hrecol/structure.hpp"

namespace {

using namespace hrecol;

Graph random_graph(int n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  GraphBuilder b(n);
  b.add_all_loops();
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (coin(rng)) b.add_edge(u, v);
    }
  }
  return b.build();
}

void BM_MaximalCliques(benchmark::State& state) {
  const Graph g = random_graph(static_cast<int>(state.range(0)), 0.3, 7);
  std::size_t count = 0;
  for (auto _ : state) {
    const auto cliques = maximal_cliques(g);
    count = cliques.size();
    benchmark::DoNotOptimize(cliques.data());
  }
  state.counters["cliques"] = static_cast<double>(count);
}
BENCHMARK(BM_MaximalCliques)->RangeMultiplier(2)->Range(16, 128);

void BM_CliqueIncidence(benchmark::State& state) {
  // A long reflexive path is diamond-free; every edge is its own clique.
  const Graph h = path_graph(static_cast<int>(state.range(0)), true);
  for (auto _ : state) benchmark::DoNotOptimize(build_clique_incidence(h, true));
}
BENCHMARK(BM_CliqueIncidence)->RangeMultiplier(4)->Range(16, 256);

void BM_Dismantle(benchmark::State& state) {
  const Graph g = random_graph(static_cast<int>(state.range(0)), 0.5, 11);
  for (auto _ : state) benchmark::DoNotOptimize(dismantle(g));
}
BENCHMARK(BM_Dismantle)->RangeMultiplier(2)->Range(8, 64);

}  // namespace
