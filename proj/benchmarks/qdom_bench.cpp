// Copyright 2026 The qdom Authors
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

#include "qdom/annulus.hpp"
#include "qdom/board.hpp"
#include "qdom/construction.hpp"
#include "qdom/solver.hpp"
#include "qdom/visibility.hpp"

namespace {

using namespace qdom;

Placement random_placement(int n, std::uint64_t seed) {
  const BoardGeometry g(n);
  Placement p(g);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> square(0, n * n - 1);
  for (int i = 0; i < n; ++i) p.add(g.square_at(square(rng)));
  return p;
}

void BM_Coverage(benchmark::State& state) {
  const Placement p = random_placement(static_cast<int>(state.range(0)), 7);
  for (auto _ : state) benchmark::DoNotOptimize(coverage(p));
}
BENCHMARK(BM_Coverage)->Arg(8)->Arg(16)->Arg(32);

void BM_BuildVisibility(benchmark::State& state) {
  const Placement p = random_placement(static_cast<int>(state.range(0)), 11);
  for (auto _ : state) benchmark::DoNotOptimize(build_visibility(p));
}
BENCHMARK(BM_BuildVisibility)->Arg(8)->Arg(16)->Arg(32);

void BM_Decompose(benchmark::State& state) {
  const Placement p = construct_connected(static_cast<int>(state.range(0))).placement;
  for (auto _ : state) {
    const RegionMap m = decompose(p);
    benchmark::DoNotOptimize(tally_commonality(p, m));
  }
}
BENCHMARK(BM_Decompose)->Arg(12)->Arg(30);

void BM_SolveBranchAndBound(benchmark::State& state) {
  SolveRequest r;
  r.n = static_cast<int>(state.range(0));
  r.variant = static_cast<Variant>(state.range(1));
  r.method = Method::branch_and_bound;
  for (auto _ : state) benchmark::DoNotOptimize(solve(r));
}
BENCHMARK(BM_SolveBranchAndBound)
    ->ArgsProduct({{6, 7, 8}, {static_cast<int>(Variant::simple), static_cast<int>(Variant::connected)}})
    ->Unit(benchmark::kMillisecond);

void BM_SolveExhaustive(benchmark::State& state) {
  SolveRequest r;
  r.n = static_cast<int>(state.range(0));
  r.variant = Variant::connected;
  r.method = Method::exhaustive;
  for (auto _ : state) benchmark::DoNotOptimize(solve(r));
}
BENCHMARK(BM_SolveExhaustive)->DenseRange(4, 7)->Unit(benchmark::kMillisecond);

void BM_ConstructConnected(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(construct_connected(n));
}
BENCHMARK(BM_ConstructConnected)->Arg(9)->Arg(30)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
