// Copyright 2026 The fovmax Authors
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

// Serial reference vs OpenMP kernels for the solver and the grid oracle.

#include <benchmark/benchmark.h>

#include <utility>
#include <vector>

#include "../tests/support.hpp"
#include "fovmax/oracle.hpp"
#include "fovmax/solver.hpp"

using namespace fovmax;
using namespace fovmax::testing;

namespace {

std::vector<std::pair<ConvexPolygon, Point>> scenes(int n, int count) {
  Rng rng(7 + n);
  std::vector<std::pair<ConvexPolygon, Point>> out;
  for (int i = 0; i < count; ++i) {
    auto poly = random_convex(rng, n);
    const Point apex = random_outside_apex(rng, poly);
    out.emplace_back(std::move(poly), apex);
  }
  return out;
}

void solve(benchmark::State& state, Execution exec) {
  const auto s = scenes(static_cast<int>(state.range(0)), 16);
  long iterations = 0;
  for (auto _ : state) {
    for (const auto& [poly, apex] : s) {
      const auto r = maximize_global(poly, apex, Angle(0.5), Precision(10), std::nullopt, exec);
      iterations += r.newton_iterations;
      benchmark::DoNotOptimize(r.area);
    }
  }
  state.counters["newton_iters_per_solve"] = benchmark::Counter(
      static_cast<double>(iterations) / (16.0 * static_cast<double>(state.iterations())));
  state.SetItemsProcessed(state.iterations() * 16);
}

void oracle(benchmark::State& state, Execution exec) {
  const auto s = scenes(static_cast<int>(state.range(0)), 1);
  GridOptions o;
  o.step = 1e-4;
  o.exec = exec;
  for (auto _ : state) {
    const auto g = grid_scan_max(s[0].first, s[0].second, Angle(0.5), o);
    benchmark::DoNotOptimize(g.best_area);
  }
}

void BM_SolveSerial(benchmark::State& state) { solve(state, Execution::serial); }
void BM_SolveParallel(benchmark::State& state) { solve(state, Execution::parallel); }
void BM_OracleSerial(benchmark::State& state) { oracle(state, Execution::serial); }
void BM_OracleParallel(benchmark::State& state) { oracle(state, Execution::parallel); }

}  // namespace

BENCHMARK(BM_SolveSerial)->Arg(8)->Arg(64)->Arg(512);
BENCHMARK(BM_SolveParallel)->Arg(8)->Arg(64)->Arg(512);
BENCHMARK(BM_OracleSerial)->Arg(8)->Arg(64);
BENCHMARK(BM_OracleParallel)->Arg(8)->Arg(64);

BENCHMARK_MAIN();
