// Copyright 2026 The lopc Authors
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

#include <Eigen/QR>
#include <random>

#include "lopc/liftops.hpp"
#include "lopc/mesh.hpp"
#include "lopc/simulate.hpp"

namespace {

lopc::ComplexMatrix haar(int n, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g;
  lopc::ComplexMatrix z(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) z(i, j) = {g(rng), g(rng)};
  }
  Eigen::HouseholderQR<lopc::ComplexMatrix> qr(z);
  return qr.householderQ();
}

void BM_ReckDecompose(benchmark::State& state) {
  const auto u = haar(static_cast<int>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(lopc::reck_decompose(u));
}
BENCHMARK(BM_ReckDecompose)->RangeMultiplier(2)->Range(2, 64);

void BM_LiftUnitary(benchmark::State& state) {
  const auto u = haar(static_cast<int>(state.range(0)), 2);
  const int photons = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(lopc::lift_unitary(u, photons));
  state.counters["dim"] =
      static_cast<double>(lopc::dimension(u.rows(), photons));
}
BENCHMARK(BM_LiftUnitary)
    ->Args({2, 8})
    ->Args({4, 3})
    ->Args({4, 6})
    ->Args({8, 3})
    ->Args({8, 4})
    ->Unit(benchmark::kMillisecond);

void BM_Permanent(benchmark::State& state) {
  const auto m = haar(static_cast<int>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(lopc::permanent(m));
}
BENCHMARK(BM_Permanent)->DenseRange(4, 20, 4);

void BM_RunSimulation(benchmark::State& state) {
  const int modes = static_cast<int>(state.range(0));
  const lopc::Netlist net = lopc::reck_decompose(haar(modes, 4));
  std::vector<int> occ(static_cast<std::size_t>(modes), 0);
  for (int i = 0; i < 3; ++i) occ[static_cast<std::size_t>(i)] = 1;
  const lopc::OccupationVector in(occ);
  for (auto _ : state) benchmark::DoNotOptimize(lopc::run(net, in));
}
BENCHMARK(BM_RunSimulation)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
