// Copyright 2026 The shishkin-rk Authors
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

#include <cmath>
#include <cstddef>

#include <benchmark/benchmark.h>

#include "shishkin/convergence.hpp"
#include "shishkin/mesh.hpp"
#include "shishkin/stepper.hpp"
#include "shishkin/tableau.hpp"

namespace {

using namespace shishkin;

void BM_ExplicitStep(benchmark::State& state) {
  const Scheme scheme = all_schemes()[static_cast<std::size_t>(state.range(0))];
  const ButcherTableau& tableau = named_tableau(scheme);
  const Problem problem = make_builtin(BuiltinName::layer1, 1.0 / 64.0);
  double y = 0.5;
  for (auto _ : state) {
    y = explicit_rk_step(tableau, problem, 0.25, y, 1e-3);
    benchmark::DoNotOptimize(y);
    y = 0.5;
  }
  state.SetLabel(std::string(to_string(scheme)));
}
BENCHMARK(BM_ExplicitStep)->DenseRange(0, 4);

void BM_GaussLinearStep(benchmark::State& state) {
  const Problem problem = make_builtin(BuiltinName::layer1, 1.0 / 64.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(gauss2_linear_step(problem, 0.25, 0.5, 1e-3));
  }
}
BENCHMARK(BM_GaussLinearStep);

void BM_BuildShishkinMesh(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_shishkin_mesh({n, 1.0 / 1024.0, 2, 1.0, 0.5}));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_BuildShishkinMesh)->RangeMultiplier(8)->Range(1 << 10, 1 << 19);

void BM_Integrate(benchmark::State& state) {
  const Scheme scheme = all_schemes()[static_cast<std::size_t>(state.range(0))];
  const auto n = static_cast<std::size_t>(state.range(1));
  const double eps = 1.0 / 256.0;
  const Problem problem = make_builtin(BuiltinName::layer1, eps);
  const Mesh mesh = build_shishkin_mesh({n, eps, 2, 1.0, 0.5});
  for (auto _ : state) {
    benchmark::DoNotOptimize(integrate(scheme, problem, mesh));
  }
  state.SetItemsProcessed(state.iterations() * state.range(1));
  state.SetLabel(std::string(to_string(scheme)));
}
BENCHMARK(BM_Integrate)->ArgsProduct({{0, 3, 5}, {1 << 12, 1 << 16}});

void BM_Sweep(benchmark::State& state) {
  SweepSpec spec;
  spec.scheme = Scheme::heun;
  spec.epsilons = {0.25, 1.0 / 16.0, 1.0 / 64.0, 1.0 / 256.0, 1.0 / 1024.0};
  spec.k_min = 10;
  spec.k_max = 14;
  spec.threads = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_sweep(spec));
  }
}
BENCHMARK(BM_Sweep)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

}  // namespace
BENCHMARK_MAIN();
