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

#include "bqaoa/arithmetic.hpp"

#include <algorithm>

#include "bqaoa/error.hpp"

namespace bqaoa {
namespace {

void check_disjoint(std::vector<Qubit> qubits, const char* what) {
  std::sort(qubits.begin(), qubits.end());
  if (std::adjacent_find(qubits.begin(), qubits.end()) != qubits.end()) {
    throw ValidationError(std::string(what) + ": registers overlap");
  }
}

}  // namespace

QuantumRegister make_register(std::string name, Qubit first, std::size_t width) {
  QuantumRegister reg{std::move(name), {}};
  reg.qubits.reserve(width);
  for (std::size_t j = 0; j < width; ++j) reg.qubits.push_back(first + static_cast<Qubit>(j));
  return reg;
}

std::size_t carries_needed(std::size_t width, std::size_t k, bool controlled) {
  const std::size_t span = width - k;  // bits touched: k .. width-1
  if (controlled) return span - 1;
  return span >= 2 ? span - 2 : 0;
}

Circuit build_add_pow2(std::size_t num_qubits, const QuantumRegister& reg, std::size_t k,
                       std::optional<Qubit> control, const QuantumRegister& carries) {
  const std::size_t width = reg.width();
  if (k >= width) {
    throw ValidationError("add_pow2: bit " + std::to_string(k) + " outside a " +
                          std::to_string(width) + "-bit register");
  }
  const std::size_t need = carries_needed(width, k, control.has_value());
  if (carries.width() < need) {
    throw CapacityError("add_pow2: needs " + std::to_string(need) +
                        " carry qubits, got " + std::to_string(carries.width()));
  }
  std::vector<Qubit> used(reg.qubits);
  if (control) used.push_back(*control);
  used.insert(used.end(), carries.qubits.begin(),
              carries.qubits.begin() + static_cast<std::ptrdiff_t>(need));
  check_disjoint(std::move(used), "add_pow2");

  Circuit out(num_qubits);
  // carry[i] holds "a carry reaches bit k+i+1". With a control the first
  // carry is control & z_k; without one, z_k itself plays that role.
  std::vector<Qubit> carry;
  carry.reserve(width - k);
  if (control) {
    if (width - k > 1) {
      out.ccx(*control, reg[k], carries[0]);
      carry.push_back(carries[0]);
    }
  } else {
    carry.push_back(reg[k]);
  }
  for (std::size_t bit = k + 1; bit + 1 < width; ++bit) {
    const Qubit next = carries[carry.size() - (control ? 0 : 1)];
    out.ccx(carry.back(), reg[bit], next);
    carry.push_back(next);
  }
  // Flip from the top down, uncomputing each carry while the bit it was
  // built from still holds its original value.
  for (std::size_t bit = width - 1; bit > k; --bit) {
    const std::size_t ci = bit - k - 1;
    out.cx(carry[ci], reg[bit]);
    if (ci > 0) {
      out.ccx(carry[ci - 1], reg[bit - 1], carry[ci]);
    } else if (control) {
      out.ccx(*control, reg[k], carry[0]);
    }
  }
  if (control) {
    out.cx(*control, reg[k]);
  } else {
    out.x(reg[k]);
  }
  return out;
}

Circuit build_add_const(std::size_t num_qubits, const QuantumRegister& reg, std::uint64_t x,
                        std::optional<Qubit> control, const QuantumRegister& carries) {
  const std::size_t width = reg.width();
  if (width < 64 && x >= (std::uint64_t{1} << width)) {
    throw ValidationError("add_const: " + std::to_string(x) + " does not fit in " +
                          std::to_string(width) + " bits");
  }
  Circuit out(num_qubits);
  for (std::size_t k = 0; k < width; ++k) {
    if ((x >> k) & 1U) out.append(build_add_pow2(num_qubits, reg, k, control, carries));
  }
  return out;
}

Circuit build_add_register(std::size_t num_qubits, const QuantumRegister& a,
                           const QuantumRegister& b, const QuantumRegister& carries) {
  if (a.width() < 1 || b.width() < 1) {
    throw ValidationError("add_register: registers must be non-empty");
  }
  std::vector<Qubit> used(a.qubits);
  used.insert(used.end(), b.qubits.begin(), b.qubits.end());
  check_disjoint(std::move(used), "add_register");
  Circuit out(num_qubits);
  for (std::size_t j = 0; j < b.width() && j < a.width(); ++j) {
    out.append(build_add_pow2(num_qubits, a, j, b[j], carries));
  }
  return out;
}

}  // namespace bqaoa
