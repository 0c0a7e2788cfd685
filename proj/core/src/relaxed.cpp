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

#include "bqaoa/relaxed.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "bqaoa/circuit.hpp"
#include "bqaoa/error.hpp"

namespace bqaoa {
namespace {

std::size_t bits_for(std::int64_t value) {
  return std::max<std::size_t>(1, std::bit_width(static_cast<std::uint64_t>(value)));
}

}  // namespace

std::vector<Qubit> RelaxedLayout::ancillas() const {
  std::vector<Qubit> out;
  for (std::size_t q = n; q < num_qubits; ++q) out.push_back(static_cast<Qubit>(q));
  return out;
}

std::size_t RelaxedLayout::cost_slot_qubits() const {
  std::size_t total = 0;
  for (const auto& slot : cost_slots) total += slot.width();
  return total;
}

std::size_t tree_slot_width(std::size_t slot, std::size_t padded_leaves, std::int64_t max_cost) {
  const std::size_t leaves =
      slot == 0 ? padded_leaves : (std::size_t{1} << std::countr_zero(slot));
  return bits_for(static_cast<std::int64_t>(leaves) * max_cost);
}

RelaxedLayout make_layout(const BatteryInstance& inst, CostVariant variant, double alpha,
                          std::size_t qubit_cap) {
  inst.validate();
  if (inst.n() < 1) throw ValidationError("relaxed layout needs at least one window");
  if (inst.c_max < 1) throw ValidationError("relaxed layout needs c_max >= 1");
  if (!(alpha > 0.0)) throw ValidationError("relaxed penalty slope must be positive");

  RelaxedLayout l;
  l.variant = variant;
  l.n = inst.n();
  l.alpha = alpha;
  l.max_cost = inst.max_cost();
  l.threshold_bit = static_cast<std::size_t>(
      std::bit_width(static_cast<std::uint64_t>(inst.c_max - 1)));
  l.offset = (std::int64_t{1} << l.threshold_bit) - inst.c_max;

  const std::int64_t peak = l.max_cost * static_cast<std::int64_t>(l.n) + l.offset;
  std::vector<std::size_t> slot_widths;
  if (variant == CostVariant::kSequential) {
    slot_widths.push_back(bits_for(peak));
  } else {
    const std::size_t padded = std::bit_ceil(l.n);
    for (std::size_t s = 0; s < l.n; ++s) {
      slot_widths.push_back(tree_slot_width(s, padded, l.max_cost));
    }
    slot_widths[0] = std::max(slot_widths[0], bits_for(peak));
  }
  l.accumulator_width = slot_widths[0];
  const std::size_t k1 = l.accumulator_width;
  const std::size_t tested = k1 > l.threshold_bit ? k1 - l.threshold_bit : 0;
  const std::size_t work_width = tested > 2 ? tested - 2 : 0;
  const std::size_t carry_width = k1 - 1;

  std::size_t total = l.n + work_width + 1 + carry_width;
  for (std::size_t w : slot_widths) total += w;
  if (total > qubit_cap) {
    throw CapacityError("relaxed layout (variant " + std::to_string(static_cast<int>(variant)) +
                        ", n=" + std::to_string(l.n) + ") needs " + std::to_string(total) +
                        " qubits, cap is " + std::to_string(qubit_cap));
  }

  Qubit next = 0;
  l.choices = make_register("R", next, l.n);
  next += static_cast<Qubit>(l.n);
  for (std::size_t s = 0; s < slot_widths.size(); ++s) {
    l.cost_slots.push_back(make_register("A1." + std::to_string(s), next, slot_widths[s]));
    next += static_cast<Qubit>(slot_widths[s]);
  }
  l.work = make_register("A2", next, work_width);
  next += static_cast<Qubit>(work_width);
  l.flag = next++;
  l.carries = make_register("carry", next, carry_width);
  next += static_cast<Qubit>(carry_width);
  l.num_qubits = next;
  return l;
}

Circuit build_return_phase(const BatteryInstance& inst, double gamma, std::size_t num_qubits) {
  Circuit out(num_qubits);
  for (std::size_t t = 0; t < inst.n(); ++t) {
    const auto delta = static_cast<double>(inst.lambda2[t] - inst.lambda1[t]);
    if (delta != 0.0) out.phase(-gamma * delta, static_cast<Qubit>(t));
  }
  return out;
}

Circuit build_cost_calc(const BatteryInstance& inst, const RelaxedLayout& layout) {
  if (inst.n() != layout.n) throw ValidationError("layout built for a different instance");
  if (inst.max_cost() > layout.max_cost) {
    throw ValidationError("instance costs exceed the layout's sizing");
  }
  const std::size_t nq = layout.num_qubits;
  Circuit out(nq);
  const QuantumRegister& acc = layout.accumulator();

  if (layout.variant == CostVariant::kSequential) {
    for (std::size_t t = 0; t < layout.n; ++t) {
      const Qubit z = layout.choices[t];
      const auto c1 = static_cast<std::uint64_t>(inst.cost1[t]);
      const auto c2 = static_cast<std::uint64_t>(inst.cost2[t]);
      if (c2 != 0) out.append(build_add_const(nq, acc, c2, z, layout.carries));
      if (c1 != 0) {
        out.x(z);
        out.append(build_add_const(nq, acc, c1, z, layout.carries));
        out.x(z);
      }
    }
  } else {
    // Leaves: slot t starts at |0>, so loading a constant is an XOR.
    for (std::size_t t = 0; t < layout.n; ++t) {
      const Qubit z = layout.choices[t];
      const QuantumRegister& slot = layout.cost_slots[t];
      const auto c1 = static_cast<std::uint64_t>(inst.cost1[t]);
      const auto c2 = static_cast<std::uint64_t>(inst.cost2[t]);
      for (std::size_t j = 0; j < slot.width(); ++j) {
        if ((c2 >> j) & 1U) out.cx(z, slot[j]);
      }
      if (c1 != 0) {
        out.x(z);
        for (std::size_t j = 0; j < slot.width(); ++j) {
          if ((c1 >> j) & 1U) out.cx(z, slot[j]);
        }
        out.x(z);
      }
    }
    const std::size_t padded = std::bit_ceil(layout.n);
    for (std::size_t half = 1; half < padded; half *= 2) {
      for (std::size_t s = 0; s + half < layout.n; s += 2 * half) {
        out.append(build_add_register(nq, layout.cost_slots[s], layout.cost_slots[s + half],
                                      layout.carries));
      }
    }
  }
  if (layout.offset != 0) {
    out.append(build_add_const(nq, acc, static_cast<std::uint64_t>(layout.offset),
                               std::nullopt, layout.carries));
  }
  return out;
}

Circuit build_constraint_test(const RelaxedLayout& layout) {
  Circuit out(layout.num_qubits);
  const QuantumRegister& acc = layout.accumulator();
  if (layout.threshold_bit >= acc.width()) return out;
  std::vector<Qubit> high(acc.qubits.begin() + static_cast<std::ptrdiff_t>(layout.threshold_bit),
                          acc.qubits.end());
  for (Qubit q : high) out.x(q);
  out.append(multi_controlled_x(layout.num_qubits, high, layout.flag, layout.work.qubits));
  out.x(layout.flag);  // cascade marks "all high bits zero"; invert to "violated"
  for (Qubit q : high) out.x(q);
  return out;
}

Circuit build_penalty_dephase(const RelaxedLayout& layout, double gamma) {
  Circuit out(layout.num_qubits);
  const QuantumRegister& acc = layout.accumulator();
  const double slope = gamma * layout.alpha;
  for (std::size_t j = 0; j < acc.width(); ++j) {
    out.cphase(slope * static_cast<double>(std::uint64_t{1} << j), layout.flag, acc[j]);
  }
  out.phase(-slope * static_cast<double>(std::uint64_t{1} << layout.threshold_bit),
            layout.flag);
  return out;
}

Circuit build_phase_separator_relaxed(const BatteryInstance& inst, const RelaxedLayout& layout,
                                      double gamma) {
  const Circuit cost = build_cost_calc(inst, layout);
  const Circuit test = build_constraint_test(layout);
  Circuit out(layout.num_qubits);
  out.append(build_return_phase(inst, gamma, layout.num_qubits), "return");
  out.append(cost, "cost");
  out.append(test, "test");
  out.append(build_penalty_dephase(layout, gamma), "dephase");
  out.append(inverse(test), "untest");
  out.append(inverse(cost), "uncost");
  return out;
}

}  // namespace bqaoa
