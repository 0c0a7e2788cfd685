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

#include "bqaoa/statevector.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "bqaoa/error.hpp"
#include "bqaoa/rng.hpp"

namespace bqaoa {
namespace {

void check_capacity(std::size_t num_qubits) {
  if (num_qubits > kMaxSimulatedQubits) {
    throw CapacityError("statevector of " + std::to_string(num_qubits) +
                        " qubits exceeds the simulator cap of " +
                        std::to_string(kMaxSimulatedQubits));
  }
}

void check_subset(std::size_t num_qubits, std::span<const Qubit> subset) {
  if (subset.size() > 63) throw ValidationError("subset wider than 63 qubits");
  for (std::size_t i = 0; i < subset.size(); ++i) {
    if (subset[i] >= num_qubits) {
      throw IndexError("qubit " + std::to_string(subset[i]) + " outside a " +
                       std::to_string(num_qubits) + "-qubit state");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (subset[j] == subset[i]) {
        throw ValidationError("duplicate qubit " + std::to_string(subset[i]) +
                              " in subset");
      }
    }
  }
}

// Visits every basis index whose bits at `fixed_positions` (ascending) are
// zero, OR-ed with `set_mask`.
template <typename Fn>
void for_each_index(std::size_t num_qubits, std::span<const unsigned> fixed_positions,
                    std::uint64_t set_mask, Fn&& fn) {
  const std::uint64_t count = std::uint64_t{1}
                              << (num_qubits - fixed_positions.size());
  for (std::uint64_t k = 0; k < count; ++k) {
    std::uint64_t i = k;
    for (unsigned p : fixed_positions) {
      const std::uint64_t low = i & ((std::uint64_t{1} << p) - 1);
      i = ((i >> p) << (p + 1)) | low;
    }
    fn(i | set_mask);
  }
}

}  // namespace

Statevector::Statevector(std::size_t num_qubits) : num_qubits_(num_qubits) {
  check_capacity(num_qubits);
  amps_.assign(std::size_t{1} << num_qubits, Amplitude{0.0, 0.0});
  amps_[0] = 1.0;
}

Statevector Statevector::from_amplitudes(std::vector<Amplitude> amplitudes) {
  if (amplitudes.empty() || !std::has_single_bit(amplitudes.size())) {
    throw ValidationError("amplitude count must be a power of two");
  }
  Statevector s;
  s.num_qubits_ = static_cast<std::size_t>(std::countr_zero(amplitudes.size()));
  check_capacity(s.num_qubits_);
  s.amps_ = std::move(amplitudes);
  return s;
}

double Statevector::norm_squared() const {
  double sum = 0.0;
  for (const Amplitude& a : amps_) sum += std::norm(a);
  return sum;
}

void Statevector::apply(const Gate& gate) {
  if (gate.target >= num_qubits_) {
    throw IndexError("gate target " + std::to_string(gate.target) +
                     " outside a " + std::to_string(num_qubits_) + "-qubit state");
  }
  std::uint64_t control_mask = 0;
  unsigned positions[64];
  std::size_t npos = 0;
  for (Qubit c : gate.controls) {
    if (c >= num_qubits_) {
      throw IndexError("control " + std::to_string(c) + " outside a " +
                       std::to_string(num_qubits_) + "-qubit state");
    }
    control_mask |= std::uint64_t{1} << c;
    positions[npos++] = c;
  }
  positions[npos++] = gate.target;
  std::sort(positions, positions + npos);
  const std::span<const unsigned> fixed(positions, npos);
  const std::uint64_t tbit = std::uint64_t{1} << gate.target;
  Amplitude* a = amps_.data();

  switch (gate.kind) {
    case GateKind::kX:
      for_each_index(num_qubits_, fixed, control_mask,
                     [a, tbit](std::uint64_t i) { std::swap(a[i], a[i | tbit]); });
      break;
    case GateKind::kH: {
      const double r = 1.0 / std::sqrt(2.0);
      for_each_index(num_qubits_, fixed, control_mask, [a, tbit, r](std::uint64_t i) {
        const Amplitude a0 = a[i];
        const Amplitude a1 = a[i | tbit];
        a[i] = r * (a0 + a1);
        a[i | tbit] = r * (a0 - a1);
      });
      break;
    }
    case GateKind::kRx: {
      const double c = std::cos(gate.angle / 2);
      const Amplitude ms{0.0, -std::sin(gate.angle / 2)};
      for_each_index(num_qubits_, fixed, control_mask, [a, tbit, c, ms](std::uint64_t i) {
        const Amplitude a0 = a[i];
        const Amplitude a1 = a[i | tbit];
        a[i] = c * a0 + ms * a1;
        a[i | tbit] = ms * a0 + c * a1;
      });
      break;
    }
    case GateKind::kPhase: {
      const Amplitude f = std::polar(1.0, gate.angle);
      for_each_index(num_qubits_, fixed, control_mask | tbit,
                     [a, f](std::uint64_t i) { a[i] *= f; });
      break;
    }
  }
}

void Statevector::apply(const Circuit& circuit) {
  for (const Gate& g : circuit.gates()) apply(g);
}

Statevector new_uniform(std::size_t n_system, std::size_t n_ancilla) {
  if (n_system < 1) throw ValidationError("new_uniform needs at least one system qubit");
  if (n_system + n_ancilla > kMaxSimulatedQubits) {
    throw CapacityError("statevector of " + std::to_string(n_system + n_ancilla) +
                        " qubits exceeds the simulator cap of " +
                        std::to_string(kMaxSimulatedQubits));
  }
  Statevector s(n_system + n_ancilla);
  const double amp = std::pow(2.0, -0.5 * static_cast<double>(n_system));
  const std::size_t count = std::size_t{1} << n_system;
  for (std::size_t i = 0; i < count; ++i) s[i] = amp;
  return s;
}

Statevector apply(Statevector state, const Circuit& circuit) {
  state.apply(circuit);
  return state;
}

Distribution probabilities(const Statevector& state, std::span<const Qubit> subset) {
  check_subset(state.num_qubits(), subset);
  Distribution dist(std::size_t{1} << subset.size(), 0.0);
  const auto amps = state.amplitudes();
  for (std::size_t i = 0; i < amps.size(); ++i) {
    const double p = std::norm(amps[i]);
    if (p == 0.0) continue;
    Bits key = 0;
    for (std::size_t j = 0; j < subset.size(); ++j) {
      key |= static_cast<Bits>((i >> subset[j]) & 1U) << j;
    }
    dist[key] += p;
  }
  return dist;
}

MeasurementResult sample(const Statevector& state, std::span<const Qubit> subset,
                         std::uint64_t shots, std::uint64_t seed) {
  if (shots == 0) throw ValidationError("sample needs at least one shot");
  const Distribution dist = probabilities(state, subset);
  std::vector<double> cdf(dist.size());
  double acc = 0.0;
  for (std::size_t i = 0; i < dist.size(); ++i) {
    acc += dist[i];
    cdf[i] = acc;
  }
  MeasurementResult result;
  result.shots = shots;
  result.seed = seed;
  Rng rng(seed);
  for (std::uint64_t s = 0; s < shots; ++s) {
    const double u = rng.uniform01() * acc;
    auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
    if (it == cdf.end()) --it;
    // Skip zero-probability entries that share the same cumulative value.
    auto idx = static_cast<std::size_t>(it - cdf.begin());
    while (dist[idx] == 0.0 && idx + 1 < dist.size()) ++idx;
    ++result.counts[static_cast<Bits>(idx)];
  }
  return result;
}

double expectation_diagonal(const Statevector& state, std::span<const Qubit> subset,
                            const std::function<double(Bits)>& f) {
  const Distribution dist = probabilities(state, subset);
  double sum = 0.0;
  for (std::size_t z = 0; z < dist.size(); ++z) {
    if (dist[z] != 0.0) sum += dist[z] * f(static_cast<Bits>(z));
  }
  return sum;
}

double max_deviation_up_to_phase(const Statevector& a, const Statevector& b) {
  if (a.dimension() != b.dimension()) {
    throw ValidationError("statevector dimensions differ");
  }
  Amplitude rot{1.0, 0.0};
  for (std::size_t i = 0; i < a.dimension(); ++i) {
    if (std::abs(a[i]) > 1e-12) {
      if (std::abs(b[i]) > 1e-12) rot = a[i] / b[i] / std::abs(a[i] / b[i]);
      break;
    }
  }
  double worst = 0.0;
  for (std::size_t i = 0; i < a.dimension(); ++i) {
    worst = std::max(worst, std::abs(a[i] - rot * b[i]));
  }
  return worst;
}

double mass_on_nonzero(const Statevector& state, std::span<const Qubit> qubits) {
  std::uint64_t mask = 0;
  for (Qubit q : qubits) {
    if (q >= state.num_qubits()) throw IndexError("qubit outside state");
    mask |= std::uint64_t{1} << q;
  }
  double mass = 0.0;
  const auto amps = state.amplitudes();
  for (std::size_t i = 0; i < amps.size(); ++i) {
    if (i & mask) mass += std::norm(amps[i]);
  }
  return mass;
}

}  // namespace bqaoa
