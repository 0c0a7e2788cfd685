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

#include "bqaoa/circuit.hpp"

namespace bqaoa {

// Little-endian integer register: bit j of the stored value lives on
// qubits[j].
struct QuantumRegister {
  std::string name;
  std::vector<Qubit> qubits;

  std::size_t width() const { return qubits.size(); }
  Qubit operator[](std::size_t j) const { return qubits[j]; }
};

// Contiguous register qubits [first, first + width).
QuantumRegister make_register(std::string name, Qubit first, std::size_t width);

// Carry qubits a controlled add of 2^k into a register of `width` bits
// consumes (uncontrolled adds need one fewer).
std::size_t carries_needed(std::size_t width, std::size_t k, bool controlled);

// |z> -> |(z + 2^k) mod 2^width> when `control` is 1 or absent. Ripple
// carry through `carries`, which start and end in |0>. O(width) gates.
// Throws ValidationError for k >= width and CapacityError for a short
// carry register.
Circuit build_add_pow2(std::size_t num_qubits, const QuantumRegister& reg, std::size_t k,
                       std::optional<Qubit> control, const QuantumRegister& carries);

// |z> -> |(z + x) mod 2^width>, one add_pow2 per set bit of x.
// Throws ValidationError for x >= 2^width.
Circuit build_add_const(std::size_t num_qubits, const QuantumRegister& reg, std::uint64_t x,
                        std::optional<Qubit> control, const QuantumRegister& carries);

// |A>|B> -> |(A + B) mod 2^width(a)>|B>: for each bit b_j, add 2^j to `a`
// under control of b_j. Bits j >= width(a) vanish modulo 2^width(a).
// Throws ValidationError when the registers overlap.
Circuit build_add_register(std::size_t num_qubits, const QuantumRegister& a,
                           const QuantumRegister& b, const QuantumRegister& carries);

}  // namespace bqaoa
