// Copyright 2026 The qsig authors
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

#include "qsig/circuit.hpp"
#include "qsig/execute.hpp"
#include "qsig/rng.hpp"
#include "qsig/state_vector.hpp"

namespace {

using namespace qsig;

void BM_ApplyH(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  StateVector s(n);
  int wire = 0;
  for (auto _ : state) {
    s.apply(GateKind::H, wire);
    wire = (wire + 1) % n;
    benchmark::DoNotOptimize(s.amplitudes().data());
  }
  state.SetItemsProcessed(state.iterations() * (1LL << n));
}
BENCHMARK(BM_ApplyH)->DenseRange(12, 22, 2);

void BM_ApplyCnot(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  StateVector s(n);
  s.apply(GateKind::H, 0);
  int wire = 1;
  for (auto _ : state) {
    s.apply_cnot(0, wire);
    wire = 1 + (wire % (n - 1));
    benchmark::DoNotOptimize(s.amplitudes().data());
  }
  state.SetItemsProcessed(state.iterations() * (1LL << n));
}
BENCHMARK(BM_ApplyCnot)->DenseRange(12, 22, 2);

void BM_HadamardSampling(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  StateVector s(n);
  for (int w = 0; w < n; ++w) s.apply(GateKind::H, w);
  CounterRng rng(42, 0, 0, 0);
  for (auto _ : state) {
    auto drawn = sample_measurement(s, {0}, BasisKind::Hadamard, rng);
    benchmark::DoNotOptimize(drawn.first.data());
  }
}
BENCHMARK(BM_HadamardSampling)->DenseRange(12, 20, 4);

void BM_RunExactDecoder2(benchmark::State& state) {
  const Convention conv = static_cast<Convention>(state.range(0));
  const Circuit circuit = build_decoder2(conv);
  const StateVector input = branch_input(BranchState::Psi3, circuit.width);
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_exact(circuit, input).joint.entries().size());
  }
}
BENCHMARK(BM_RunExactDecoder2)->DenseRange(0, 2, 1);

}  // namespace

BENCHMARK_MAIN();
