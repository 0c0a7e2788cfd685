// Copyright 2026 The bqaoa Authors.
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

#include "bqaoa/circuit.hpp"
#include "bqaoa/statevector.hpp"

namespace {

using bqaoa::Circuit;
using bqaoa::Statevector;

void BM_HadamardLayer(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  Statevector sv = bqaoa::new_uniform(n, 0);
  Circuit c(n);
  for (std::size_t q = 0; q < n; ++q) c.h(q);
  for (auto _ : state) {
    sv.apply(c);
    benchmark::DoNotOptimize(sv[0]);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(n));
}
BENCHMARK(BM_HadamardLayer)->DenseRange(10, 20, 5);

// Doubly controlled phase, the workhorse of the arithmetic circuits.
void BM_ControlledPhase(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  Statevector sv = bqaoa::new_uniform(n, 0);
  Circuit c(n);
  c.add({bqaoa::GateKind::kPhase, 0.3, 0, {1, 2}});
  for (auto _ : state) {
    sv.apply(c);
    benchmark::DoNotOptimize(sv[0]);
  }
}
BENCHMARK(BM_ControlledPhase)->DenseRange(10, 20, 5);

}  // namespace
