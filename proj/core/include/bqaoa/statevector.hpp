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

#include <complex>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <vector>

#include "bqaoa/circuit.hpp"

namespace bqaoa {

using Amplitude = std::complex<double>;

// Largest register the dense simulator will allocate (2^24 amplitudes,
// 256 MiB).
inline constexpr std::size_t kMaxSimulatedQubits = 24;

// Bitstring over an ordered qubit subset: bit i of the integer is the value
// of subset[i].
using Bits = std::uint64_t;

// Probability per subset bitstring, indexed by the Bits value.
using Distribution = std::vector<double>;

struct MeasurementResult {
  std::map<Bits, std::uint64_t> counts;
  std::uint64_t shots = 0;
  std::uint64_t seed = 0;
};

// Dense state over num_qubits qubits. Basis index bit j is the value of
// qubit j (qubit 0 is the least-significant bit).
class Statevector {
 public:
  // |0...0>.
  explicit Statevector(std::size_t num_qubits);

  // Takes ownership of explicit amplitudes; length must be a power of two.
  static Statevector from_amplitudes(std::vector<Amplitude> amplitudes);

  std::size_t num_qubits() const { return num_qubits_; }
  std::size_t dimension() const { return amps_.size(); }
  std::span<const Amplitude> amplitudes() const { return amps_; }
  std::span<Amplitude> amplitudes() { return amps_; }
  const Amplitude& operator[](std::size_t i) const { return amps_[i]; }
  Amplitude& operator[](std::size_t i) { return amps_[i]; }

  double norm_squared() const;

  void apply(const Gate& gate);
  void apply(const Circuit& circuit);

 private:
  Statevector() = default;

  std::size_t num_qubits_ = 0;
  std::vector<Amplitude> amps_;
};

// System qubits 0..n_system-1 in |+>, ancillas n_system.. in |0>.
Statevector new_uniform(std::size_t n_system, std::size_t n_ancilla);

Statevector apply(Statevector state, const Circuit& circuit);

// Marginal distribution over `subset`. Throws ValidationError on duplicate
// indices and IndexError on out-of-range ones.
Distribution probabilities(const Statevector& state, std::span<const Qubit> subset);

// Seeded multinomial draw from probabilities(state, subset).
MeasurementResult sample(const Statevector& state, std::span<const Qubit> subset,
                         std::uint64_t shots, std::uint64_t seed);

// Exact sum_z P(z) f(z) over the subset marginal.
double expectation_diagonal(const Statevector& state, std::span<const Qubit> subset,
                            const std::function<double(Bits)>& f);

// Largest elementwise |a_i - e^{i phi} b_i|, with phi chosen so the first
// amplitude of `a` above 1e-12 in magnitude matches `b`. Dimensions must agree.
double max_deviation_up_to_phase(const Statevector& a, const Statevector& b);

// Probability mass on basis states where any of `qubits` is 1.
double mass_on_nonzero(const Statevector& state, std::span<const Qubit> qubits);

}  // namespace bqaoa
