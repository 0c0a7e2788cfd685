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

#include "bqaoa/driver.hpp"
#include "bqaoa/experiment.hpp"

namespace {

using namespace bqaoa;

void BM_BuildRelaxedCircuit(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto spec = ObjectiveSpec::relaxed(gen_instance(n, {}, 11), 1.0);
  const auto schedule = linear_schedule(4);
  for (auto _ : state) {
    auto qc = build_qaoa_circuit(spec, Approach::kRelaxed, CostVariant::kSequential, schedule, 4096);
    benchmark::DoNotOptimize(qc.body.size());
  }
}
BENCHMARK(BM_BuildRelaxedCircuit)->RangeMultiplier(2)->Range(4, 16);

void BM_BuildConstrainedCircuit(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto spec = ObjectiveSpec::constrained(gen_instance(n, {}, 12));
  const auto schedule = linear_schedule(4);
  for (auto _ : state) {
    auto qc = build_qaoa_circuit(spec, Approach::kConstrained, CostVariant::kSequential, schedule, 4096);
    benchmark::DoNotOptimize(qc.body.size());
  }
}
BENCHMARK(BM_BuildConstrainedCircuit)->RangeMultiplier(2)->Range(4, 16);

void BM_RunRelaxedGateLevel(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto spec = ObjectiveSpec::relaxed(gen_instance(n, {}, 13), 1.0);
  for (auto _ : state) {
    auto r = run_qaoa(spec, Approach::kRelaxed, CostVariant::kSequential, 3, 256, 1);
    benchmark::DoNotOptimize(r.expectation);
  }
}
BENCHMARK(BM_RunRelaxedGateLevel)->DenseRange(2, 5, 1)->Unit(benchmark::kMillisecond);

void BM_RunOracle(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto spec = ObjectiveSpec::relaxed(gen_instance(n, {}, 14), 1.0);
  for (auto _ : state) {
    auto r = run_qaoa_oracle(spec, 10, 256, 1);
    benchmark::DoNotOptimize(r.expectation);
  }
}
BENCHMARK(BM_RunOracle)->DenseRange(4, 12, 4);

}  // namespace
