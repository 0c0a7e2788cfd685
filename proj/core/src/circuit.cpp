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

#include "bqaoa/circuit.hpp"

#include <algorithm>
#include <ostream>
#include <string>

#include "bqaoa/error.hpp"

namespace bqaoa {

const char* to_string(GateKind kind) {
  switch (kind) {
    case GateKind::kH:
      return "H";
    case GateKind::kX:
      return "X";
    case GateKind::kRx:
      return "RX";
    case GateKind::kPhase:
      return "PHASE";
  }
  return "?";
}

Gate adjoint(const Gate& gate) {
  Gate out = gate;
  if (gate.kind == GateKind::kRx || gate.kind == GateKind::kPhase) {
    out.angle = -gate.angle;
  }
  return out;
}

Circuit& Circuit::add(Gate gate) {
  if (gate.target >= num_qubits_) {
    throw IndexError("gate target " + std::to_string(gate.target) +
                     " outside circuit of " + std::to_string(num_qubits_) +
                     " qubits");
  }
  for (std::size_t i = 0; i < gate.controls.size(); ++i) {
    const Qubit c = gate.controls[i];
    if (c >= num_qubits_) {
      throw IndexError("control " + std::to_string(c) + " outside circuit of " +
                       std::to_string(num_qubits_) + " qubits");
    }
    if (c == gate.target) {
      throw ValidationError("qubit " + std::to_string(c) +
                            " is both control and target");
    }
    if (std::find(gate.controls.begin(), gate.controls.begin() + i, c) !=
        gate.controls.begin() + i) {
      throw ValidationError("repeated control " + std::to_string(c));
    }
  }
  gates_.push_back(std::move(gate));
  return *this;
}

Circuit& Circuit::append(const Circuit& other, std::string label) {
  if (other.num_qubits_ != num_qubits_) {
    throw ValidationError("cannot append a " + std::to_string(other.num_qubits_) +
                          "-qubit circuit to a " + std::to_string(num_qubits_) +
                          "-qubit circuit");
  }
  const std::size_t offset = gates_.size();
  gates_.insert(gates_.end(), other.gates_.begin(), other.gates_.end());
  for (const Span& s : other.spans_) {
    spans_.push_back({s.name, s.begin + offset, s.end + offset});
  }
  if (!label.empty()) {
    spans_.push_back({std::move(label), offset, gates_.size()});
  }
  return *this;
}

Circuit compose(const Circuit& a, const Circuit& b) {
  Circuit out = a;
  out.append(b);
  return out;
}

Circuit inverse(const Circuit& c) {
  Circuit out(c.num_qubits_);
  out.gates_.reserve(c.gates_.size());
  for (auto it = c.gates_.rbegin(); it != c.gates_.rend(); ++it) {
    out.gates_.push_back(adjoint(*it));
  }
  const std::size_t n = c.gates_.size();
  for (auto it = c.spans_.rbegin(); it != c.spans_.rend(); ++it) {
    out.spans_.push_back({it->name, n - it->end, n - it->begin});
  }
  return out;
}

Circuit multi_controlled_x(std::size_t num_qubits, std::span<const Qubit> controls,
                           Qubit target, std::span<const Qubit> work) {
  Circuit out(num_qubits);
  const std::size_t m = controls.size();
  const std::size_t needed = m > 2 ? m - 2 : 0;
  if (work.size() < needed) {
    throw CapacityError(std::to_string(m) + "-controlled X needs " +
                        std::to_string(needed) + " work qubits, got " +
                        std::to_string(work.size()));
  }
  std::vector<Qubit> all(controls.begin(), controls.end());
  all.push_back(target);
  all.insert(all.end(), work.begin(), work.begin() + static_cast<std::ptrdiff_t>(needed));
  std::vector<Qubit> sorted = all;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw ValidationError("multi-controlled X: controls, target and work overlap");
  }

  if (m <= 2) {
    out.add({GateKind::kX, 0.0, target, {controls.begin(), controls.end()}});
    return out;
  }
  // Ladder: work[0] = c0 & c1, work[j] = c_{j+1} & work[j-1].
  Circuit ladder(num_qubits);
  ladder.ccx(controls[0], controls[1], work[0]);
  for (std::size_t j = 1; j < needed; ++j) {
    ladder.ccx(controls[j + 1], work[j - 1], work[j]);
  }
  out.append(ladder);
  out.ccx(controls[m - 1], work[needed - 1], target);
  out.append(inverse(ladder));
  return out;
}

ResourceReport resources(const Circuit& c) {
  ResourceReport report;
  report.gate_count = c.size();
  report.qubit_count = c.num_qubits();
  std::vector<std::size_t> level(c.num_qubits(), 0);
  for (const Gate& g : c.gates()) {
    std::size_t layer = level[g.target];
    for (Qubit q : g.controls) layer = std::max(layer, level[q]);
    ++layer;
    level[g.target] = layer;
    for (Qubit q : g.controls) level[q] = layer;
    report.depth = std::max(report.depth, layer);
  }
  return report;
}

void dump(const Circuit& c, std::ostream& out) {
  for (const Gate& g : c.gates()) {
    out << to_string(g.kind) << ' ' << g.angle << " [";
    for (std::size_t i = 0; i < g.controls.size(); ++i) {
      if (i) out << ',';
      out << g.controls[i];
    }
    out << "] " << g.target << '\n';
  }
}

}  // namespace bqaoa
