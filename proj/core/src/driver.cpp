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

#include "bqaoa/driver.hpp"

#include <cmath>
#include <limits>

#include "bqaoa/constrained.hpp"
#include "bqaoa/error.hpp"

namespace bqaoa {
namespace {

void check_schedule(const AngleSchedule& s) {
  if (s.betas.size() != s.gammas.size() || s.betas.empty()) {
    throw ValidationError("angle schedule needs p >= 1 matching betas and gammas");
  }
}

void check_pairing(const ObjectiveSpec& spec, Approach approach) {
  const bool constrained = spec.kind == ObjectiveKind::kConstrained;
  if (constrained != (approach == Approach::kConstrained)) {
    throw ValidationError("objective kind does not match the QAOA approach");
  }
}

// Fills expectation, ratio, distribution and samples from a final state
// whose measured register is `measured`.
void summarize(const ObjectiveSpec& spec, const Statevector& state,
               std::span<const Qubit> measured, std::uint64_t shots, std::uint64_t seed,
               QaoaRunResult& out) {
  const std::vector<double> table = objective_table(spec);
  out.distribution = probabilities(state, measured);
  out.measured_bits = measured.size();
  out.expectation = 0.0;
  for (std::size_t r = 0; r < table.size(); ++r) {
    out.expectation += out.distribution[r] * table[r];
  }
  out.optimum = brute_force_max(spec).value;
  out.ratio = out.optimum > 0.0 ? out.expectation / out.optimum
                                : std::numeric_limits<double>::quiet_NaN();
  out.shots = shots;
  out.seed = seed;
  if (shots > 0) {
    const MeasurementResult m = sample(state, measured, shots, seed);
    for (const auto& [bits, count] : m.counts) {
      const double v = table[bits];
      if (!out.best_sampled || v > out.best_sampled->second) out.best_sampled = {bits, v};
    }
  }
}

}  // namespace

AngleSchedule linear_schedule(std::size_t p) {
  if (p == 0) throw ValidationError("QAOA depth p must be at least 1");
  AngleSchedule s;
  for (std::size_t k = 1; k <= p; ++k) {
    const double frac = static_cast<double>(k) / static_cast<double>(p);
    s.betas.push_back(1.0 - frac);
    s.gammas.push_back(frac);
  }
  return s;
}

QaoaCircuit build_qaoa_circuit(const ObjectiveSpec& spec, Approach approach, CostVariant variant,
                               const AngleSchedule& schedule, std::size_t qubit_cap) {
  check_schedule(schedule);
  check_pairing(spec, approach);
  const BatteryInstance& inst = spec.instance;

  if (approach == Approach::kConstrained) {
    const ConstrainedEncoding enc = expand_ising(spec);
    const ConstrainedLayout layout = make_constrained_layout(enc);
    if (layout.num_qubits > qubit_cap) {
      throw CapacityError("constrained circuit needs " + std::to_string(layout.num_qubits) +
                          " qubits, cap is " + std::to_string(qubit_cap));
    }
    QaoaCircuit qc{Circuit(layout.num_qubits), layout.reg};
    for (std::size_t k = 0; k < schedule.depth(); ++k) {
      qc.body.append(build_phase_separator_constrained(enc, layout, schedule.gammas[k]),
                     "separator");
      qc.body.append(build_mixer(layout.num_qubits, layout.reg, schedule.betas[k]), "mixer");
    }
    return qc;
  }

  if (spec.kind == ObjectiveKind::kReturnOnly) {
    if (inst.n() > qubit_cap) {
      throw CapacityError("return-only circuit needs " + std::to_string(inst.n()) +
                          " qubits, cap is " + std::to_string(qubit_cap));
    }
    const std::size_t nq = inst.n();
    QaoaCircuit qc{Circuit(nq), make_register("R", 0, nq)};
    for (std::size_t k = 0; k < schedule.depth(); ++k) {
      qc.body.append(build_return_phase(inst, schedule.gammas[k], nq), "separator");
      qc.body.append(build_mixer(nq, qc.mixed, schedule.betas[k]), "mixer");
    }
    return qc;
  }

  const RelaxedLayout layout = make_layout(inst, variant, spec.alpha, qubit_cap);
  QaoaCircuit qc{Circuit(layout.num_qubits), layout.choices};
  for (std::size_t k = 0; k < schedule.depth(); ++k) {
    qc.body.append(build_phase_separator_relaxed(inst, layout, schedule.gammas[k]),
                   "separator");
    qc.body.append(build_mixer(layout.num_qubits, layout.choices, schedule.betas[k]), "mixer");
  }
  return qc;
}

QaoaRunResult run_qaoa(const ObjectiveSpec& spec, Approach approach, CostVariant variant,
                       const AngleSchedule& schedule, std::uint64_t shots, std::uint64_t seed) {
  const QaoaCircuit qc = build_qaoa_circuit(spec, approach, variant, schedule);
  const std::size_t mixed = qc.mixed.width();
  Statevector state = new_uniform(mixed, qc.body.num_qubits() - mixed);
  state.apply(qc.body);
  QaoaRunResult out;
  summarize(spec, state, qc.mixed.qubits, shots, seed, out);
  out.resources = resources(qc.body);
  return out;
}

QaoaRunResult run_qaoa(const ObjectiveSpec& spec, Approach approach, CostVariant variant,
                       std::size_t p, std::uint64_t shots, std::uint64_t seed) {
  return run_qaoa(spec, approach, variant, linear_schedule(p), shots, seed);
}

QaoaRunResult run_qaoa_oracle(const ObjectiveSpec& spec, const AngleSchedule& schedule,
                              std::uint64_t shots, std::uint64_t seed) {
  check_schedule(schedule);
  const std::size_t width = spec.arity();
  if (width > kMaxSimulatedQubits) {
    throw CapacityError("oracle run needs " + std::to_string(width) + " qubits, cap is " +
                        std::to_string(kMaxSimulatedQubits));
  }
  const QuantumRegister reg = make_register("R", 0, width);
  const std::vector<double> table = objective_table(spec);
  Statevector state = new_uniform(width, 0);
  for (std::size_t k = 0; k < schedule.depth(); ++k) {
    // The register is the whole state, so the oracle is a pointwise product.
    auto amps = state.amplitudes();
    for (std::size_t r = 0; r < amps.size(); ++r) {
      amps[r] *= std::polar(1.0, -schedule.gammas[k] * table[r]);
    }
    state.apply(build_mixer(width, reg, schedule.betas[k]));
  }
  QaoaRunResult out;
  summarize(spec, state, reg.qubits, shots, seed, out);
  return out;
}

QaoaRunResult run_qaoa_oracle(const ObjectiveSpec& spec, std::size_t p, std::uint64_t shots,
                              std::uint64_t seed) {
  return run_qaoa_oracle(spec, linear_schedule(p), shots, seed);
}

std::string format_register(Bits reg, std::size_t n, std::size_t slack_bits) {
  std::string s;
  for (std::size_t t = 0; t < n; ++t) s.push_back(((reg >> t) & 1U) ? '1' : '0');
  if (slack_bits > 0) {
    s.push_back('|');
    for (std::size_t j = 0; j < slack_bits; ++j) {
      s.push_back(((reg >> (n + j)) & 1U) ? '1' : '0');
    }
  }
  return s;
}

}  // namespace bqaoa
