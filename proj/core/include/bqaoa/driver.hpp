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

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bqaoa/battery.hpp"
#include "bqaoa/circuit.hpp"
#include "bqaoa/relaxed.hpp"
#include "bqaoa/statevector.hpp"

namespace bqaoa {

struct AngleSchedule {
  std::vector<double> betas;
  std::vector<double> gammas;

  std::size_t depth() const { return betas.size(); }
};

// beta_k = 1 - k/p, gamma_k = k/p for k = 1..p. Throws ValidationError for p = 0.
AngleSchedule linear_schedule(std::size_t p);

enum class Approach { kConstrained, kRelaxed };

struct QaoaRunResult {
  double expectation = 0.0;
  // Highest-valued bitstring among the samples; empty when shots = 0.
  std::optional<std::pair<Bits, double>> best_sampled;
  // Exact distribution over the measured register.
  Distribution distribution;
  std::size_t measured_bits = 0;
  // expectation / optimum, NaN when the optimum is not positive.
  double ratio = 0.0;
  double optimum = 0.0;
  std::uint64_t shots = 0;
  std::uint64_t seed = 0;
  ResourceReport resources;
};

// Gate-level QAOA. The approach must agree with the objective: kConstrained
// pairs with a constrained spec, kRelaxed with return-only (no penalty
// circuit) or relaxed specs. `variant` selects the relaxed cost adder.
QaoaRunResult run_qaoa(const ObjectiveSpec& spec, Approach approach, CostVariant variant,
                       const AngleSchedule& schedule, std::uint64_t shots, std::uint64_t seed);
QaoaRunResult run_qaoa(const ObjectiveSpec& spec, Approach approach, CostVariant variant,
                       std::size_t p, std::uint64_t shots, std::uint64_t seed);

// Same alternation with the diagonal oracle as phase separator, simulated on
// the measured register alone. Resources are left empty.
QaoaRunResult run_qaoa_oracle(const ObjectiveSpec& spec, const AngleSchedule& schedule,
                              std::uint64_t shots, std::uint64_t seed);
QaoaRunResult run_qaoa_oracle(const ObjectiveSpec& spec, std::size_t p, std::uint64_t shots,
                              std::uint64_t seed);

// The p alternating (separator, mixer) blocks without state preparation,
// plus the register they mix. Useful for resource studies; the layout cap
// is lifted so the circuit can be larger than the simulator allows.
struct QaoaCircuit {
  Circuit body;
  QuantumRegister mixed;
};
QaoaCircuit build_qaoa_circuit(const ObjectiveSpec& spec, Approach approach, CostVariant variant,
                               const AngleSchedule& schedule,
                               std::size_t qubit_cap = kMaxSimulatedQubits);

// "z" bits first (window 0 leftmost) then slack bits, e.g. "0110|01".
std::string format_register(Bits reg, std::size_t n, std::size_t slack_bits);

}  // namespace bqaoa
