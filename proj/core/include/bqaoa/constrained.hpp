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
#include <map>
#include <utility>
#include <vector>

#include "bqaoa/arithmetic.hpp"
#include "bqaoa/battery.hpp"

namespace bqaoa {

// Quadratic-penalty objective
//   f(z, b) = -A (cost(z) - slack(b))^2 + return(z)
// expanded over the binary register x = (z_0..z_{n-1}, b_0..b_{s-1}) as
//   constant + sum_i linear[i] x_i + sum_{i<j} quadratic[{i,j}] x_i x_j.
// Zero coefficients are not stored.
struct ConstrainedEncoding {
  std::size_t n = 0;
  std::vector<std::int64_t> slack_coeffs;
  std::int64_t penalty_weight = 0;
  double constant = 0.0;
  std::map<std::size_t, double> linear;
  std::map<std::pair<std::size_t, std::size_t>, double> quadratic;

  std::size_t register_width() const { return n + slack_coeffs.size(); }
  double evaluate(Bits reg) const;
};

ConstrainedEncoding expand_ising(const ObjectiveSpec& spec);
inline ConstrainedEncoding expand_ising(const BatteryInstance& inst) {
  return expand_ising(ObjectiveSpec::constrained(inst));
}

// R holds the schedule then the slack bits; `ancilla` carries the
// product of a crossed term.
struct ConstrainedLayout {
  QuantumRegister reg;
  Qubit ancilla = 0;
  std::size_t num_qubits = 0;
};

ConstrainedLayout make_constrained_layout(const ConstrainedEncoding& enc);

// exp(-i gamma f) up to the dropped constant: a phase gate per linear term
// and, per crossed term, Toffoli into the ancilla, phase, Toffoli back.
Circuit build_phase_separator_constrained(const ConstrainedEncoding& enc,
                                          const ConstrainedLayout& layout, double gamma);

// RX(2 beta) on every qubit of `reg`, i.e. exp(-i beta sum_t X_t).
Circuit build_mixer(std::size_t num_qubits, const QuantumRegister& reg, double beta);

}  // namespace bqaoa
