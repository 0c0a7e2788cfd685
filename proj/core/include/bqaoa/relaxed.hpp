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
#include <vector>

#include "bqaoa/arithmetic.hpp"
#include "bqaoa/battery.hpp"
#include "bqaoa/statevector.hpp"

namespace bqaoa {

// How subroutine 1 accumulates cost(z).
enum class CostVariant {
  kSequential = 1,  // controlled constant adds into one register
  kTree = 2,        // per-window loads, then a balanced tree of register adds
};

// Qubit map for the linear-penalty phase separator. Registers are laid out
// in order: choices, cost slots, work, flag, carries.
//
// The accumulator (cost_slots[0]) ends subroutine 1 holding cost(z) + offset,
// where offset = 2^threshold_bit - c_max, so cost(z) >= c_max exactly when
// some accumulator bit at or above threshold_bit is set.
struct RelaxedLayout {
  CostVariant variant = CostVariant::kSequential;
  std::size_t n = 0;
  QuantumRegister choices;
  // Variant 1: a single register. Variant 2: slot t belongs to window t and
  // slot 0 doubles as the accumulator.
  std::vector<QuantumRegister> cost_slots;
  QuantumRegister work;
  Qubit flag = 0;
  QuantumRegister carries;
  double alpha = 1.0;
  std::int64_t max_cost = 0;         // d
  std::size_t threshold_bit = 0;     // c, minimal with 2^c >= c_max
  std::int64_t offset = 0;           // w = 2^c - c_max
  std::size_t accumulator_width = 0; // k1
  std::size_t num_qubits = 0;

  const QuantumRegister& accumulator() const { return cost_slots.front(); }
  std::size_t ancilla_count() const { return num_qubits - n; }
  std::vector<Qubit> ancillas() const;
  std::size_t cost_slot_qubits() const;
};

// Throws ValidationError for c_max < 1 or alpha <= 0, and CapacityError
// (naming the required qubit count) when the layout exceeds `qubit_cap`.
// Pass a larger cap to build circuits that are only counted, not simulated.
RelaxedLayout make_layout(const BatteryInstance& inst, CostVariant variant,
                          double alpha = 1.0,
                          std::size_t qubit_cap = kMaxSimulatedQubits);

// Appendix-style slot width for tree slot s of a 2^q-leaf tree: enough bits
// for the sum of the 2^{trailing zeros of s} costs it accumulates (slot 0
// takes all 2^q).
std::size_t tree_slot_width(std::size_t slot, std::size_t padded_leaves, std::int64_t max_cost);

// Phase e^{-i gamma (lambda2[t] - lambda1[t])} on |1> of each choice qubit t
// (qubit t), i.e. exp(-i gamma return(z)) up to e^{-i gamma sum lambda1}.
Circuit build_return_phase(const BatteryInstance& inst, double gamma, std::size_t num_qubits);

// |z>|0> -> |z>|cost(z) + offset> in the accumulator.
Circuit build_cost_calc(const BatteryInstance& inst, const RelaxedLayout& layout);

// Flag := 1 iff an accumulator bit in [threshold_bit, k1) is set. Work
// qubits are restored. Empty when threshold_bit >= k1.
Circuit build_constraint_test(const RelaxedLayout& layout);

// Under flag = 1: phase e^{+i gamma alpha (accumulator - 2^c)}.
Circuit build_penalty_dephase(const RelaxedLayout& layout, double gamma);

// return phase, cost calc, test, dephase, then the test and cost calc
// undone. Net effect exp(-i gamma f(z)) up to global phase with every
// ancilla back in |0>.
Circuit build_phase_separator_relaxed(const BatteryInstance& inst, const RelaxedLayout& layout,
                                      double gamma);

}  // namespace bqaoa
