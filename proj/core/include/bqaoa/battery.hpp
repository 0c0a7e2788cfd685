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
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "bqaoa/statevector.hpp"

namespace bqaoa {

// Two-market battery schedule problem. Window t offers return lambda1[t]
// at cycle cost cost1[t] on market 1, or lambda2[t] at cost2[t] on market 2.
// A schedule is a Bits value whose bit t is 1 when window t picks market 2.
struct BatteryInstance {
  std::vector<std::int64_t> lambda1;
  std::vector<std::int64_t> lambda2;
  std::vector<std::int64_t> cost1;
  std::vector<std::int64_t> cost2;
  std::int64_t c_max = 0;
  std::optional<std::uint64_t> seed;

  std::size_t n() const { return lambda1.size(); }
  // d: the largest single-window cycle cost.
  std::int64_t max_cost() const;
  // Throws ValidationError on ragged or negative data.
  void validate() const;

  bool operator==(const BatteryInstance&) const = default;
};

std::int64_t schedule_return(const BatteryInstance& inst, Bits z);
std::int64_t schedule_cost(const BatteryInstance& inst, Bits z);

enum class Orientation { kDirect, kFlipped };

// Knapsack view of the non-trivial windows. Item i stands for window
// item_window[i]; selecting a direct item means market 2, selecting a
// flipped item means market 1. Every other window is forced.
struct KnapsackInstance {
  std::size_t num_windows = 0;
  std::vector<std::int64_t> profits;
  std::vector<std::int64_t> weights;
  std::int64_t capacity = 0;
  std::int64_t base_return = 0;
  std::int64_t base_cost = 0;
  std::map<std::size_t, int> forced;  // window -> market bit (0 or 1)
  std::vector<std::size_t> item_window;
  std::vector<Orientation> orientation;

  std::size_t size() const { return profits.size(); }
};

KnapsackInstance reduce_to_knapsack(const BatteryInstance& inst);

// Item selection of a schedule. Forced windows are ignored.
std::vector<bool> selection_of(const KnapsackInstance& k, Bits z);
// Schedule with forced windows at their forced market and item windows
// following `selection`.
Bits reconstruct_schedule(const KnapsackInstance& k, const std::vector<bool>& selection);

struct KnapsackSolution {
  std::int64_t value = 0;
  std::vector<bool> selection;
};

// Exact 0/1 knapsack by dynamic programming over capacity, O(items * capacity).
// A negative capacity yields the empty selection.
KnapsackSolution solve_dp(const KnapsackInstance& k);

enum class ObjectiveKind { kReturnOnly, kRelaxed, kConstrained };

// Objective over a measured register. For kConstrained the register is the
// n schedule bits followed by the slack bits (see slack_coefficients).
struct ObjectiveSpec {
  ObjectiveKind kind = ObjectiveKind::kReturnOnly;
  BatteryInstance instance;
  double alpha = 1.0;               // relaxed penalty slope
  std::int64_t penalty_weight = 0;  // constrained quadratic weight A

  static ObjectiveSpec return_only(BatteryInstance inst);
  static ObjectiveSpec relaxed(BatteryInstance inst, double alpha = 1.0);
  // A defaults to sum_t (lambda1[t] + lambda2[t]).
  static ObjectiveSpec constrained(BatteryInstance inst);
  static ObjectiveSpec constrained(BatteryInstance inst, std::int64_t penalty_weight);

  std::size_t slack_bits() const;
  // Width of the register the objective is evaluated on.
  std::size_t arity() const { return instance.n() + slack_bits(); }
};

// Binary slack expansion covering exactly [0, c_max]:
// 1, 2, ..., 2^{m-1}, c_max + 1 - 2^m with m = floor(log2 c_max).
// Requires c_max >= 1.
std::vector<std::int64_t> slack_coefficients(std::int64_t c_max);

std::int64_t slack_value(std::span<const std::int64_t> coeffs, Bits b);

// Objective value with explicit bit vectors. Slack bits are required for
// the constrained kind (exactly slack_bits() of them) and forbidden
// otherwise; violations throw ValidationError.
double objective(const ObjectiveSpec& spec, const std::vector<bool>& z,
                 const std::vector<bool>& slack = {});

// Same objective on a packed register of arity() bits.
double objective_packed(const ObjectiveSpec& spec, Bits reg);

// f(reg) for every reg in [0, 2^arity).
std::vector<double> objective_table(const ObjectiveSpec& spec);

// Multiplies each amplitude by e^{-i gamma f(z)}, z read from `subset`
// (length arity()). Qubits outside the subset are ignored.
Statevector oracle_phase(const ObjectiveSpec& spec, double gamma, Statevector state,
                         std::span<const Qubit> subset);

inline constexpr std::size_t kBruteForceMaxBits = 24;

struct BruteForceResult {
  double value = 0.0;
  Bits argmax = 0;
};

// Exhaustive maximum over all registers (schedule and slack jointly).
// Throws CapacityError when arity() exceeds kBruteForceMaxBits.
BruteForceResult brute_force_max(const ObjectiveSpec& spec);

}  // namespace bqaoa
