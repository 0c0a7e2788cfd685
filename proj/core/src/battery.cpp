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

#include "bqaoa/battery.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <string>

#include "bqaoa/error.hpp"

namespace bqaoa {

std::int64_t BatteryInstance::max_cost() const {
  std::int64_t d = 0;
  for (std::size_t t = 0; t < n(); ++t) d = std::max({d, cost1[t], cost2[t]});
  return d;
}

void BatteryInstance::validate() const {
  const std::size_t len = lambda1.size();
  if (lambda2.size() != len || cost1.size() != len || cost2.size() != len) {
    throw ValidationError("instance arrays must all have length n");
  }
  if (len > 63) throw CapacityError("instances are limited to 63 windows");
  for (const auto* v : {&lambda1, &lambda2, &cost1, &cost2}) {
    for (std::int64_t x : *v) {
      if (x < 0) throw ValidationError("returns and costs must be non-negative");
    }
  }
  if (c_max < 0) throw ValidationError("c_max must be non-negative");
}

std::int64_t schedule_return(const BatteryInstance& inst, Bits z) {
  std::int64_t r = 0;
  for (std::size_t t = 0; t < inst.n(); ++t) {
    r += ((z >> t) & 1U) ? inst.lambda2[t] : inst.lambda1[t];
  }
  return r;
}

std::int64_t schedule_cost(const BatteryInstance& inst, Bits z) {
  std::int64_t c = 0;
  for (std::size_t t = 0; t < inst.n(); ++t) {
    c += ((z >> t) & 1U) ? inst.cost2[t] : inst.cost1[t];
  }
  return c;
}

KnapsackInstance reduce_to_knapsack(const BatteryInstance& inst) {
  inst.validate();
  KnapsackInstance k;
  k.num_windows = inst.n();
  for (std::size_t t = 0; t < inst.n(); ++t) {
    const std::int64_t l1 = inst.lambda1[t], l2 = inst.lambda2[t];
    const std::int64_t c1 = inst.cost1[t], c2 = inst.cost2[t];
    if (l1 >= l2 && c1 <= c2) {
      // Market 1 dominates (ties land here too).
      k.forced[t] = 0;
      k.base_return += l1;
      k.base_cost += c1;
    } else if (l2 >= l1 && c2 <= c1) {
      k.forced[t] = 1;
      k.base_return += l2;
      k.base_cost += c2;
    } else if (l2 > l1) {
      // Market 2 pays more and costs more.
      k.base_return += l1;
      k.base_cost += c1;
      k.profits.push_back(l2 - l1);
      k.weights.push_back(c2 - c1);
      k.item_window.push_back(t);
      k.orientation.push_back(Orientation::kDirect);
    } else {
      // Mirror image: market 1 is the expensive, better-paying option.
      k.base_return += l2;
      k.base_cost += c2;
      k.profits.push_back(l1 - l2);
      k.weights.push_back(c1 - c2);
      k.item_window.push_back(t);
      k.orientation.push_back(Orientation::kFlipped);
    }
  }
  k.capacity = inst.c_max - k.base_cost;
  return k;
}

std::vector<bool> selection_of(const KnapsackInstance& k, Bits z) {
  std::vector<bool> sel(k.size());
  for (std::size_t i = 0; i < k.size(); ++i) {
    const bool market2 = (z >> k.item_window[i]) & 1U;
    sel[i] = k.orientation[i] == Orientation::kDirect ? market2 : !market2;
  }
  return sel;
}

Bits reconstruct_schedule(const KnapsackInstance& k, const std::vector<bool>& selection) {
  if (selection.size() != k.size()) {
    throw ValidationError("selection length does not match the item count");
  }
  Bits z = 0;
  for (const auto& [window, bit] : k.forced) {
    if (bit) z |= Bits{1} << window;
  }
  for (std::size_t i = 0; i < k.size(); ++i) {
    const bool market2 = k.orientation[i] == Orientation::kDirect ? selection[i]
                                                                   : !selection[i];
    if (market2) z |= Bits{1} << k.item_window[i];
  }
  return z;
}

KnapsackSolution solve_dp(const KnapsackInstance& k) {
  KnapsackSolution sol;
  sol.selection.assign(k.size(), false);
  if (k.capacity < 0) return sol;
  const auto cap = static_cast<std::size_t>(k.capacity);
  const std::size_t items = k.size();
  // best[i][c]: optimum over the first i items with capacity c.
  std::vector<std::vector<std::int64_t>> best(items + 1,
                                              std::vector<std::int64_t>(cap + 1, 0));
  for (std::size_t i = 1; i <= items; ++i) {
    const auto w = static_cast<std::size_t>(k.weights[i - 1]);
    const std::int64_t p = k.profits[i - 1];
    for (std::size_t c = 0; c <= cap; ++c) {
      best[i][c] = best[i - 1][c];
      if (w <= c) best[i][c] = std::max(best[i][c], best[i - 1][c - w] + p);
    }
  }
  sol.value = best[items][cap];
  std::size_t c = cap;
  for (std::size_t i = items; i > 0; --i) {
    if (best[i][c] != best[i - 1][c]) {
      sol.selection[i - 1] = true;
      c -= static_cast<std::size_t>(k.weights[i - 1]);
    }
  }
  return sol;
}

ObjectiveSpec ObjectiveSpec::return_only(BatteryInstance inst) {
  inst.validate();
  return {ObjectiveKind::kReturnOnly, std::move(inst), 1.0, 0};
}

ObjectiveSpec ObjectiveSpec::relaxed(BatteryInstance inst, double alpha) {
  inst.validate();
  if (!(alpha > 0.0)) throw ValidationError("relaxed penalty slope must be positive");
  return {ObjectiveKind::kRelaxed, std::move(inst), alpha, 0};
}

ObjectiveSpec ObjectiveSpec::constrained(BatteryInstance inst) {
  std::int64_t a = 0;
  for (std::size_t t = 0; t < inst.n(); ++t) a += inst.lambda1[t] + inst.lambda2[t];
  return constrained(std::move(inst), a);
}

ObjectiveSpec ObjectiveSpec::constrained(BatteryInstance inst, std::int64_t penalty_weight) {
  inst.validate();
  if (inst.c_max < 1) throw ValidationError("constrained encoding needs c_max >= 1");
  if (penalty_weight < 0) throw ValidationError("penalty weight must be non-negative");
  return {ObjectiveKind::kConstrained, std::move(inst), 1.0, penalty_weight};
}

std::size_t ObjectiveSpec::slack_bits() const {
  return kind == ObjectiveKind::kConstrained ? slack_coefficients(instance.c_max).size() : 0;
}

std::vector<std::int64_t> slack_coefficients(std::int64_t c_max) {
  if (c_max < 1) throw ValidationError("slack expansion needs c_max >= 1");
  const int m = std::bit_width(static_cast<std::uint64_t>(c_max)) - 1;
  std::vector<std::int64_t> coeffs;
  for (int j = 0; j < m; ++j) coeffs.push_back(std::int64_t{1} << j);
  coeffs.push_back(c_max + 1 - (std::int64_t{1} << m));
  return coeffs;
}

std::int64_t slack_value(std::span<const std::int64_t> coeffs, Bits b) {
  std::int64_t s = 0;
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    if ((b >> j) & 1U) s += coeffs[j];
  }
  return s;
}

namespace {

double evaluate(const ObjectiveSpec& spec, std::span<const std::int64_t> slack, Bits reg) {
  const BatteryInstance& inst = spec.instance;
  const std::size_t n = inst.n();
  const Bits z = n < 64 ? reg & ((Bits{1} << n) - 1) : reg;
  const auto ret = static_cast<double>(schedule_return(inst, z));
  const std::int64_t cost = schedule_cost(inst, z);
  switch (spec.kind) {
    case ObjectiveKind::kReturnOnly:
      return ret;
    case ObjectiveKind::kRelaxed:
      if (cost < inst.c_max) return ret;
      return ret - spec.alpha * static_cast<double>(cost - inst.c_max);
    case ObjectiveKind::kConstrained: {
      const auto gap = static_cast<double>(cost - slack_value(slack, reg >> n));
      return -static_cast<double>(spec.penalty_weight) * gap * gap + ret;
    }
  }
  return ret;
}

std::vector<std::int64_t> slack_for(const ObjectiveSpec& spec) {
  if (spec.kind != ObjectiveKind::kConstrained) return {};
  return slack_coefficients(spec.instance.c_max);
}

}  // namespace

double objective_packed(const ObjectiveSpec& spec, Bits reg) {
  return evaluate(spec, slack_for(spec), reg);
}

double objective(const ObjectiveSpec& spec, const std::vector<bool>& z,
                 const std::vector<bool>& slack) {
  if (z.size() != spec.instance.n()) {
    throw ValidationError("schedule has " + std::to_string(z.size()) + " bits, expected " +
                          std::to_string(spec.instance.n()));
  }
  if (slack.size() != spec.slack_bits()) {
    throw ValidationError("objective expects " + std::to_string(spec.slack_bits()) +
                          " slack bits, got " + std::to_string(slack.size()));
  }
  Bits reg = 0;
  for (std::size_t t = 0; t < z.size(); ++t) {
    if (z[t]) reg |= Bits{1} << t;
  }
  for (std::size_t j = 0; j < slack.size(); ++j) {
    if (slack[j]) reg |= Bits{1} << (z.size() + j);
  }
  return objective_packed(spec, reg);
}

std::vector<double> objective_table(const ObjectiveSpec& spec) {
  const std::size_t bits = spec.arity();
  if (bits > kBruteForceMaxBits) {
    throw CapacityError("objective table over " + std::to_string(bits) +
                        " bits exceeds the cap of " + std::to_string(kBruteForceMaxBits));
  }
  const auto slack = slack_for(spec);
  std::vector<double> table(std::size_t{1} << bits);
  for (std::size_t r = 0; r < table.size(); ++r) table[r] = evaluate(spec, slack, r);
  return table;
}

Statevector oracle_phase(const ObjectiveSpec& spec, double gamma, Statevector state,
                         std::span<const Qubit> subset) {
  if (subset.size() != spec.arity()) {
    throw ValidationError("oracle subset has " + std::to_string(subset.size()) +
                          " qubits, objective arity is " + std::to_string(spec.arity()));
  }
  for (Qubit q : subset) {
    if (q >= state.num_qubits()) throw IndexError("oracle qubit outside state");
  }
  const std::vector<double> table = objective_table(spec);
  std::vector<Amplitude> phases(table.size());
  for (std::size_t r = 0; r < table.size(); ++r) phases[r] = std::polar(1.0, -gamma * table[r]);
  auto amps = state.amplitudes();
  for (std::size_t i = 0; i < amps.size(); ++i) {
    Bits reg = 0;
    for (std::size_t j = 0; j < subset.size(); ++j) {
      reg |= static_cast<Bits>((i >> subset[j]) & 1U) << j;
    }
    amps[i] *= phases[reg];
  }
  return state;
}

BruteForceResult brute_force_max(const ObjectiveSpec& spec) {
  const std::size_t bits = spec.arity();
  if (bits > kBruteForceMaxBits) {
    throw CapacityError("brute force over " + std::to_string(bits) +
                        " bits exceeds the cap of " + std::to_string(kBruteForceMaxBits));
  }
  const auto slack = slack_for(spec);
  BruteForceResult best{-std::numeric_limits<double>::infinity(), 0};
  const Bits count = Bits{1} << bits;
  for (Bits r = 0; r < count; ++r) {
    const double v = evaluate(spec, slack, r);
    if (v > best.value) best = {v, r};
  }
  return best;
}

}  // namespace bqaoa
