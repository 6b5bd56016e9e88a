// Copyright 2026 The quegraph Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include <string>

#include "quegraph/eigenbasis.hpp"
#include "quegraph/group.hpp"
#include "quegraph/numkit.hpp"
#include "quegraph/que.hpp"
#include "quegraph/repdec.hpp"
#include "quegraph/tails.hpp"

using namespace quegraph;

namespace {

const char* const kSpecs[] = {"sym:4", "psl2:5", "psl2:7", "psl2:11"};

void BM_BuildGroup(benchmark::State& state) {
  const auto spec = parse_group_spec(kSpecs[state.range(0)]);
  for (auto _ : state) benchmark::DoNotOptimize(build_group(spec));
  state.SetLabel(kSpecs[state.range(0)]);
}
BENCHMARK(BM_BuildGroup)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

void BM_UnitaryDual(benchmark::State& state) {
  const auto group = build_group(parse_group_spec(kSpecs[state.range(0)]));
  for (auto _ : state) {
    RandomSource rng(1);
    benchmark::DoNotOptimize(build_unitary_dual(group, rng));
  }
  state.SetLabel(kSpecs[state.range(0)]);
}
BENCHMARK(BM_UnitaryDual)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

void BM_HermitianEig(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  RandomSource rng(2);
  CMatrix m(n, n);
  for (auto& x : m.reshaped()) x = rng.complex_normal();
  m = (0.5 * (m + m.adjoint())).eval();
  for (auto _ : state) benchmark::DoNotOptimize(hermitian_eig(m));
}
BENCHMARK(BM_HermitianEig)->RangeMultiplier(2)->Range(8, 256)->Unit(benchmark::kMicrosecond);

void BM_HaarUnitary(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  RandomSource rng(3);
  for (auto _ : state) benchmark::DoNotOptimize(haar_unitary(n, rng));
}
BENCHMARK(BM_HaarUnitary)->RangeMultiplier(2)->Range(2, 64);

void BM_HaarOrthogonal(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  RandomSource rng(4);
  for (auto _ : state) benchmark::DoNotOptimize(haar_orthogonal(n, rng));
}
BENCHMARK(BM_HaarOrthogonal)->RangeMultiplier(2)->Range(2, 64);

void BM_SampleEigenbasis(benchmark::State& state) {
  const auto group = build_group(parse_group_spec(kSpecs[state.range(0)]));
  RandomSource rng(5);
  const auto dual = build_unitary_dual(group, rng);
  const auto gens = random_symmetric_set(group, 4, rng);
  const RandomSource basis_rng(6);
  for (auto _ : state) benchmark::DoNotOptimize(sample_eigenbasis(group, dual, gens, basis_rng));
  state.SetLabel(kSpecs[state.range(0)]);
}
BENCHMARK(BM_SampleEigenbasis)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

void BM_QueExperiment(benchmark::State& state) {
  QueConfig cfg;
  cfg.group = "psl2:7";
  cfg.gens = "random:4";
  cfg.seed = 7;
  cfg.m = static_cast<std::size_t>(state.range(0));
  cfg.t = 40.0;
  cfg.resamples = 2;
  for (auto _ : state) benchmark::DoNotOptimize(run_que_experiment(cfg));
}
BENCHMARK(BM_QueExperiment)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_MatrixCoeffSampler(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  CMatrix beta = CMatrix::Zero(n, n);
  beta(0, 0) = 1;
  beta(1, 1) = -1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(sample_matrix_coeff(n, beta, CoeffKind::unitary_mixed, 0, 10000, RandomSource(8)));
  }
}
BENCHMARK(BM_MatrixCoeffSampler)->Arg(2)->Arg(10)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
