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

#include "bqaoa/constrained.hpp"

#include "bqaoa/error.hpp"

namespace bqaoa {

double ConstrainedEncoding::evaluate(Bits reg) const {
  double v = constant;
  for (const auto& [i, a] : linear) {
    if ((reg >> i) & 1U) v += a;
  }
  for (const auto& [ij, a] : quadratic) {
    if (((reg >> ij.first) & 1U) && ((reg >> ij.second) & 1U)) v += a;
  }
  return v;
}

ConstrainedEncoding expand_ising(const ObjectiveSpec& spec) {
  if (spec.kind != ObjectiveKind::kConstrained) {
    throw ValidationError("expand_ising needs a constrained objective");
  }
  const BatteryInstance& inst = spec.instance;
  ConstrainedEncoding enc;
  enc.n = inst.n();
  enc.slack_coeffs = slack_coefficients(inst.c_max);
  enc.penalty_weight = spec.penalty_weight;
  const auto a = static_cast<double>(spec.penalty_weight);

  // cost(z) - slack(b) = k0 + sum_i g_i x_i; return(z) = r0 + sum_i r_i x_i.
  const std::size_t width = enc.register_width();
  std::vector<double> g(width, 0.0), r(width, 0.0);
  double k0 = 0.0, r0 = 0.0;
  for (std::size_t t = 0; t < enc.n; ++t) {
    k0 += static_cast<double>(inst.cost1[t]);
    r0 += static_cast<double>(inst.lambda1[t]);
    g[t] = static_cast<double>(inst.cost2[t] - inst.cost1[t]);
    r[t] = static_cast<double>(inst.lambda2[t] - inst.lambda1[t]);
  }
  for (std::size_t j = 0; j < enc.slack_coeffs.size(); ++j) {
    g[enc.n + j] = -static_cast<double>(enc.slack_coeffs[j]);
  }

  // Squaring with x^2 = x for binaries.
  enc.constant = -a * k0 * k0 + r0;
  for (std::size_t i = 0; i < width; ++i) {
    const double lin = -a * (2.0 * k0 * g[i] + g[i] * g[i]) + r[i];
    if (lin != 0.0) enc.linear[i] = lin;
    for (std::size_t j = i + 1; j < width; ++j) {
      const double quad = -2.0 * a * g[i] * g[j];
      if (quad != 0.0) enc.quadratic[{i, j}] = quad;
    }
  }
  return enc;
}

ConstrainedLayout make_constrained_layout(const ConstrainedEncoding& enc) {
  ConstrainedLayout layout;
  const std::size_t width = enc.register_width();
  layout.reg = make_register("R", 0, width);
  layout.ancilla = static_cast<Qubit>(width);
  layout.num_qubits = width + 1;
  return layout;
}

Circuit build_phase_separator_constrained(const ConstrainedEncoding& enc,
                                          const ConstrainedLayout& layout, double gamma) {
  if (layout.reg.width() != enc.register_width()) {
    throw ValidationError("constrained layout does not match the encoding");
  }
  Circuit out(layout.num_qubits);
  for (const auto& [i, a] : enc.linear) out.phase(-gamma * a, layout.reg[i]);
  for (const auto& [ij, a] : enc.quadratic) {
    const Qubit q1 = layout.reg[ij.first];
    const Qubit q2 = layout.reg[ij.second];
    out.ccx(q1, q2, layout.ancilla);
    out.phase(-gamma * a, layout.ancilla);
    out.ccx(q1, q2, layout.ancilla);
  }
  return out;
}

Circuit build_mixer(std::size_t num_qubits, const QuantumRegister& reg, double beta) {
  Circuit out(num_qubits);
  for (Qubit q : reg.qubits) out.rx(2.0 * beta, q);
  return out;
}

}  // namespace bqaoa
