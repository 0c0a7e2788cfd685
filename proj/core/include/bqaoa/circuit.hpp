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
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace bqaoa {

using Qubit = std::uint32_t;

enum class GateKind { kH, kX, kRx, kPhase };

const char* to_string(GateKind kind);

// Single-target gate with any number of positive-polarity controls.
//   H, X        : angle unused (0).
//   Rx(theta)   : exp(-i theta/2 X).
//   Phase(theta): diag(1, e^{i theta}).
// A negative control is expressed by sandwiching the control qubit in X.
struct Gate {
  GateKind kind = GateKind::kX;
  double angle = 0.0;
  Qubit target = 0;
  std::vector<Qubit> controls;

  bool operator==(const Gate&) const = default;
};

Gate adjoint(const Gate& gate);

// Named sub-range [begin, end) of a circuit's gate list.
struct Span {
  std::string name;
  std::size_t begin = 0;
  std::size_t end = 0;

  bool operator==(const Span&) const = default;
};

struct ResourceReport {
  std::size_t gate_count = 0;
  std::size_t depth = 0;
  std::size_t qubit_count = 0;

  bool operator==(const ResourceReport&) const = default;
};

// Ordered gate list over a fixed number of qubits. Every gate is validated
// on insertion, so a constructed Circuit only references declared qubits.
class Circuit {
 public:
  explicit Circuit(std::size_t num_qubits = 0) : num_qubits_(num_qubits) {}

  std::size_t num_qubits() const { return num_qubits_; }
  std::size_t size() const { return gates_.size(); }
  bool empty() const { return gates_.empty(); }
  std::span<const Gate> gates() const { return gates_; }
  std::span<const Span> spans() const { return spans_; }

  // Throws IndexError for an out-of-range qubit and ValidationError when
  // the target appears among the controls or a control is repeated.
  Circuit& add(Gate gate);

  Circuit& h(Qubit q) { return add({GateKind::kH, 0.0, q, {}}); }
  Circuit& x(Qubit q) { return add({GateKind::kX, 0.0, q, {}}); }
  Circuit& rx(double theta, Qubit q) { return add({GateKind::kRx, theta, q, {}}); }
  Circuit& phase(double theta, Qubit q) {
    return add({GateKind::kPhase, theta, q, {}});
  }
  Circuit& cx(Qubit control, Qubit target) {
    return add({GateKind::kX, 0.0, target, {control}});
  }
  Circuit& ccx(Qubit c0, Qubit c1, Qubit target) {
    return add({GateKind::kX, 0.0, target, {c0, c1}});
  }
  Circuit& cphase(double theta, Qubit control, Qubit target) {
    return add({GateKind::kPhase, theta, target, {control}});
  }

  // Appends all gates of `other` (same qubit count required). A non-empty
  // label records the appended range as a named span.
  Circuit& append(const Circuit& other, std::string label = {});

  bool operator==(const Circuit&) const = default;

 private:
  friend Circuit inverse(const Circuit& c);

  std::size_t num_qubits_;
  std::vector<Gate> gates_;
  std::vector<Span> spans_;
};

// Gates of a followed by gates of b. Throws ValidationError when the
// declared qubit counts differ.
Circuit compose(const Circuit& a, const Circuit& b);

// Reversed gate order, each gate replaced by its adjoint.
Circuit inverse(const Circuit& c);

// Flips target iff every control is 1, using a Toffoli ladder through
// `work` (needs max(0, |controls| - 2) qubits, all |0> on entry and exit).
// Throws CapacityError when `work` is too short.
Circuit multi_controlled_x(std::size_t num_qubits, std::span<const Qubit> controls,
                           Qubit target, std::span<const Qubit> work);

// Exact gate count plus ASAP depth, where gates sharing no qubit may share
// a layer.
ResourceReport resources(const Circuit& c);

// Debug listing, one gate per line: KIND angle controls target.
// Not a stable interchange format.
void dump(const Circuit& c, std::ostream& out);

}  // namespace bqaoa
