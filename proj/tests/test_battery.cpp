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

#include <numbers>

#include <gtest/gtest.h>

#include "bqaoa/battery.hpp"
#include "bqaoa/error.hpp"
#include "test_util.hpp"

namespace bqaoa {
namespace {

using testing::ref_cost;
using testing::ref_relaxed;
using testing::ref_return;

std::vector<bool> bits_of(std::uint64_t v, std::size_t n) {
  std::vector<bool> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = (v >> i) & 1;
  return out;
}

// Best subset value by enumeration.
std::int64_t knapsack_by_enumeration(const KnapsackInstance& k) {
  if (k.capacity < 0) return 0;
  std::int64_t best = 0;
  for (std::uint64_t s = 0; s < (1ULL << k.size()); ++s) {
    std::int64_t p = 0, w = 0;
    for (std::size_t i = 0; i < k.size(); ++i) {
      if (s >> i & 1) {
        p += k.profits[i];
        w += k.weights[i];
      }
    }
    if (w <= k.capacity) best = std::max(best, p);
  }
  return best;
}

KnapsackInstance items(std::vector<std::int64_t> p, std::vector<std::int64_t> w,
                       std::int64_t capacity) {
  KnapsackInstance k;
  k.profits = std::move(p);
  k.weights = std::move(w);
  k.capacity = capacity;
  return k;
}

TEST(BatteryInstance, Validation) {
  BatteryInstance ok{{1}, {2}, {0}, {1}, 1, {}};
  EXPECT_NO_THROW(ok.validate());
  EXPECT_EQ(ok.max_cost(), 1);
  BatteryInstance ragged{{1, 2}, {2}, {0}, {1}, 1, {}};
  EXPECT_THROW(ragged.validate(), ValidationError);
  BatteryInstance negative{{1}, {-2}, {0}, {1}, 1, {}};
  EXPECT_THROW(negative.validate(), ValidationError);
}

TEST(Reduce, DominatedWindowForcedToMarketOne) {
  BatteryInstance inst{{5}, {3}, {0}, {1}, 1, {}};
  KnapsackInstance k = reduce_to_knapsack(inst);
  EXPECT_EQ(k.size(), 0u);
  EXPECT_EQ(k.forced.at(0), 0);
  EXPECT_EQ(k.base_return, 5);
}

TEST(Reduce, DominatingWindowForcedToMarketTwo) {
  BatteryInstance inst{{1}, {4}, {2}, {1}, 3, {}};
  KnapsackInstance k = reduce_to_knapsack(inst);
  EXPECT_EQ(k.size(), 0u);
  EXPECT_EQ(k.forced.at(0), 1);
  EXPECT_EQ(k.base_return, 4);
  EXPECT_EQ(k.base_cost, 1);
}

TEST(Reduce, DirectItem) {
  BatteryInstance inst{{1}, {3}, {0}, {2}, 4, {}};
  KnapsackInstance k = reduce_to_knapsack(inst);
  ASSERT_EQ(k.size(), 1u);
  EXPECT_EQ(k.profits[0], 2);
  EXPECT_EQ(k.weights[0], 2);
  EXPECT_EQ(k.capacity, 4);
  EXPECT_EQ(k.orientation[0], Orientation::kDirect);
}

TEST(Reduce, FlippedItem) {
  // Market 1 pays more and costs more: the symmetric case.
  BatteryInstance inst{{4}, {1}, {3}, {0}, 2, {}};
  KnapsackInstance k = reduce_to_knapsack(inst);
  ASSERT_EQ(k.size(), 1u);
  EXPECT_EQ(k.profits[0], 3);
  EXPECT_EQ(k.weights[0], 3);
  EXPECT_EQ(k.orientation[0], Orientation::kFlipped);
  EXPECT_EQ(k.base_return, 1);
  EXPECT_EQ(k.capacity, 2);
}

TEST(Reduce, FullTieForcedToMarketOne) {
  BatteryInstance inst{{2}, {2}, {1}, {1}, 1, {}};
  EXPECT_EQ(reduce_to_knapsack(inst).forced.at(0), 0);
}

TEST(ReduceProperty, RoundTripPreservesReturnAndCost) {
  Rng rng(101);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 1 + rng.uniform_int(0, 9);
    BatteryInstance inst = testing::random_instance(rng, n, static_cast<std::int64_t>(n));
    KnapsackInstance k = reduce_to_knapsack(inst);
    for (std::size_t i = 0; i < k.size(); ++i) {
      ASSERT_GT(k.profits[i], 0);
      ASSERT_GT(k.weights[i], 0);
    }
    for (std::uint64_t sel = 0; sel < (1ULL << k.size()); ++sel) {
      const std::vector<bool> chosen = bits_of(sel, k.size());
      const Bits z = reconstruct_schedule(k, chosen);
      std::int64_t p = 0, w = 0;
      for (std::size_t i = 0; i < k.size(); ++i) {
        if (chosen[i]) {
          p += k.profits[i];
          w += k.weights[i];
        }
      }
      ASSERT_EQ(ref_return(inst, z), k.base_return + p);
      ASSERT_EQ(ref_cost(inst, z), k.base_cost + w);
      ASSERT_EQ(selection_of(k, z), chosen);
    }
  }
}

TEST(SolveDp, SmallExample) {
  EXPECT_EQ(solve_dp(items({2, 3}, {2, 1}, 2)).value, 3);
}

TEST(SolveDp, ZeroCapacity) {
  EXPECT_EQ(solve_dp(items({2, 3}, {2, 1}, 0)).value, 0);
}

TEST(SolveDp, NegativeCapacityIsEmpty) {
  KnapsackSolution s = solve_dp(items({2, 3}, {2, 1}, -1));
  EXPECT_EQ(s.value, 0);
  EXPECT_TRUE(std::none_of(s.selection.begin(), s.selection.end(), [](bool b) { return b; }));
}

TEST(SolveDpProperty, MatchesEnumeration) {
  Rng rng(202);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + rng.uniform_int(0, 11);
    KnapsackInstance k;
    for (std::size_t i = 0; i < n; ++i) {
      k.profits.push_back(rng.uniform_int(1, 9));
      k.weights.push_back(rng.uniform_int(1, 6));
    }
    k.capacity = rng.uniform_int(-2, 20);
    KnapsackSolution s = solve_dp(k);
    ASSERT_EQ(s.value, knapsack_by_enumeration(k)) << "trial " << trial;
    std::int64_t p = 0, w = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (i < s.selection.size() && s.selection[i]) {
        p += k.profits[i];
        w += k.weights[i];
      }
    }
    EXPECT_EQ(p, s.value);
    if (k.capacity >= 0) {
      EXPECT_LE(w, k.capacity);
    }
  }
}

TEST(Objective, RelaxedExample) {
  BatteryInstance inst{{1, 1}, {3, 3}, {0, 0}, {1, 1}, 1, {}};
  ObjectiveSpec spec = ObjectiveSpec::relaxed(inst, 1.0);
  EXPECT_EQ(schedule_return(inst, 3), 6);
  EXPECT_EQ(schedule_cost(inst, 3), 2);
  EXPECT_DOUBLE_EQ(objective(spec, {true, true}), 5.0);
}

TEST(Objective, RelaxedBoundaryHasNoPenalty) {
  BatteryInstance inst{{1, 1}, {3, 3}, {0, 0}, {1, 1}, 1, {}};
  ObjectiveSpec spec = ObjectiveSpec::relaxed(inst, 2.5);
  EXPECT_DOUBLE_EQ(objective(spec, {true, false}), 4.0);  // cost 1 = c_max
}

TEST(Objective, ConstrainedVanishesOnMatchingSlack) {
  Rng rng(303);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 1 + rng.uniform_int(0, 3);
    BatteryInstance inst = testing::random_instance(rng, n, rng.uniform_int(1, 6));
    ObjectiveSpec spec = ObjectiveSpec::constrained(inst);
    const std::vector<std::int64_t> coeffs = slack_coefficients(inst.c_max);
    for (std::uint64_t z = 0; z < (1ULL << n); ++z) {
      for (std::uint64_t b = 0; b < (1ULL << coeffs.size()); ++b) {
        if (slack_value(coeffs, b) != ref_cost(inst, z)) continue;
        EXPECT_DOUBLE_EQ(objective(spec, bits_of(z, n), bits_of(b, coeffs.size())),
                         static_cast<double>(ref_return(inst, z)));
      }
    }
  }
}

TEST(Objective, ConstrainedMatchesQuadraticForm) {
  BatteryInstance inst{{2, 0, 1}, {1, 3, 4}, {0, 1, 2}, {2, 0, 1}, 3, {}};
  ObjectiveSpec spec = ObjectiveSpec::constrained(inst);
  const std::int64_t a = 2 + 0 + 1 + 1 + 3 + 4;
  EXPECT_EQ(spec.penalty_weight, a);
  const std::vector<std::int64_t> coeffs = slack_coefficients(3);
  for (std::uint64_t z = 0; z < 8; ++z) {
    for (std::uint64_t b = 0; b < (1ULL << coeffs.size()); ++b) {
      std::int64_t slack = 0;
      for (std::size_t j = 0; j < coeffs.size(); ++j) slack += (b >> j & 1) * coeffs[j];
      const std::int64_t gap = ref_cost(inst, z) - slack;
      const double expected = static_cast<double>(-a * gap * gap + ref_return(inst, z));
      EXPECT_DOUBLE_EQ(objective_packed(spec, z | b << 3), expected);
    }
  }
}

TEST(Objective, SlackArity) {
  BatteryInstance inst{{1}, {2}, {0}, {1}, 2, {}};
  EXPECT_THROW(objective(ObjectiveSpec::constrained(inst), {true}), ValidationError);
  EXPECT_THROW(objective(ObjectiveSpec::relaxed(inst), {true}, {false}), ValidationError);
  EXPECT_THROW(objective(ObjectiveSpec::return_only(inst), {true, false}), ValidationError);
}

TEST(ObjectiveSpec, Validation) {
  BatteryInstance inst{{1}, {2}, {0}, {1}, 0, {}};
  EXPECT_THROW(ObjectiveSpec::relaxed(inst, 0.0), ValidationError);
  EXPECT_THROW(ObjectiveSpec::constrained(inst), ValidationError);  // c_max = 0
}

TEST(SlackProperty, CoversExactlyZeroToCapacity) {
  for (std::int64_t c_max = 1; c_max <= 64; ++c_max) {
    const std::vector<std::int64_t> coeffs = slack_coefficients(c_max);
    std::vector<bool> seen(static_cast<std::size_t>(c_max) + 1, false);
    for (std::uint64_t b = 0; b < (1ULL << coeffs.size()); ++b) {
      const std::int64_t v = slack_value(coeffs, b);
      ASSERT_GE(v, 0);
      ASSERT_LE(v, c_max);
      seen[static_cast<std::size_t>(v)] = true;
    }
    for (std::int64_t v = 0; v <= c_max; ++v) EXPECT_TRUE(seen[v]) << c_max << " misses " << v;
  }
}

TEST(RelaxedProperty, NonIncreasingInCostPastCapacity) {
  Rng rng(404);
  for (int trial = 0; trial < 20; ++trial) {
    BatteryInstance inst = testing::random_instance(rng, 4, 2);
    const double alpha = 0.5 + rng.uniform01() * 3;
    ObjectiveSpec spec = ObjectiveSpec::relaxed(inst, alpha);
    for (std::uint64_t z = 0; z < 16; ++z) {
      const double f = objective_packed(spec, z);
      EXPECT_NEAR(f, ref_relaxed(inst, alpha, z), 1e-12);
      // Same return, one more unit of cost: f drops by alpha past the capacity.
      BatteryInstance heavier = inst;
      heavier.cost1[0] += 1;
      heavier.cost2[0] += 1;
      const double g = objective_packed(ObjectiveSpec::relaxed(heavier, alpha), z);
      if (ref_cost(inst, z) >= inst.c_max) {
        EXPECT_NEAR(g, f - alpha, 1e-12);
      } else {
        EXPECT_LE(g, f);
      }
    }
  }
}

TEST(ConstrainedProperty, OptimumIsFeasibleReturnMax) {
  Rng rng(505);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 1 + rng.uniform_int(0, 5);
    BatteryInstance inst = testing::random_instance(rng, n, rng.uniform_int(1, 2 * n));
    ObjectiveSpec spec = ObjectiveSpec::constrained(inst);
    std::int64_t feasible = std::numeric_limits<std::int64_t>::min();
    for (std::uint64_t z = 0; z < (1ULL << n); ++z) {
      if (ref_cost(inst, z) <= inst.c_max) feasible = std::max(feasible, ref_return(inst, z));
    }
    BruteForceResult best = brute_force_max(spec);
    if (feasible == std::numeric_limits<std::int64_t>::min()) continue;
    EXPECT_DOUBLE_EQ(best.value, static_cast<double>(feasible)) << "trial " << trial;
    const Bits z = best.argmax & ((1ULL << n) - 1);
    EXPECT_LE(ref_cost(inst, z), inst.c_max);
  }
}

TEST(OraclePhase, ZeroGammaIsIdentity) {
  Rng rng(1);
  BatteryInstance inst = testing::random_instance(rng, 3, 3);
  Statevector s = testing::random_state(rng, 3);
  const Qubit q[] = {0, 1, 2};
  Statevector out = oracle_phase(ObjectiveSpec::relaxed(inst), 0.0, s, q);
  for (std::size_t i = 0; i < 8; ++i) EXPECT_EQ(out[i], s[i]);
}

TEST(OraclePhase, BasisStatePicksUpPhase) {
  BatteryInstance inst{{1, 1}, {3, 3}, {0, 0}, {1, 1}, 1, {}};
  ObjectiveSpec spec = ObjectiveSpec::relaxed(inst);
  const double gamma = 0.37;
  // Register on qubits 1 and 2, qubit 0 is an ignored ancilla in |1>.
  const Qubit q[] = {1, 2};
  Statevector out = oracle_phase(spec, gamma, testing::basis_state(3, 0b111), q);
  EXPECT_NEAR(std::abs(out[7] - std::polar(1.0, -gamma * 5.0)), 0.0, 1e-15);
}

TEST(BruteForce, ReturnOnlyIsSeparable) {
  Rng rng(606);
  for (int trial = 0; trial < 10; ++trial) {
    BatteryInstance inst = testing::random_instance(rng, 6, 6);
    std::int64_t expected = 0;
    for (std::size_t t = 0; t < 6; ++t) expected += std::max(inst.lambda1[t], inst.lambda2[t]);
    EXPECT_DOUBLE_EQ(brute_force_max(ObjectiveSpec::return_only(inst)).value,
                     static_cast<double>(expected));
  }
}

TEST(BruteForce, HugePenaltyMatchesDp) {
  Rng rng(707);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 1 + rng.uniform_int(0, 9);
    BatteryInstance inst = testing::random_instance(rng, n, 1);
    // Keep a feasible schedule around: capacity at least the cheapest cost.
    std::int64_t cheapest = 0;
    for (std::size_t t = 0; t < n; ++t) cheapest += std::min(inst.cost1[t], inst.cost2[t]);
    inst.c_max = std::max<std::int64_t>(1, cheapest + rng.uniform_int(0, 4));
    KnapsackInstance k = reduce_to_knapsack(inst);
    EXPECT_DOUBLE_EQ(brute_force_max(ObjectiveSpec::relaxed(inst, 1e6)).value,
                     static_cast<double>(k.base_return + solve_dp(k).value))
        << "trial " << trial;
  }
}

TEST(BruteForce, SingleWindow) {
  BatteryInstance inst{{2}, {5}, {0}, {3}, 1, {}};
  ObjectiveSpec spec = ObjectiveSpec::relaxed(inst, 1.0);
  EXPECT_DOUBLE_EQ(brute_force_max(spec).value,
                   std::max(objective(spec, {false}), objective(spec, {true})));
}

TEST(BruteForce, OverCap) {
  BatteryInstance inst;
  for (int t = 0; t < 25; ++t) {
    inst.lambda1.push_back(1);
    inst.lambda2.push_back(1);
    inst.cost1.push_back(0);
    inst.cost2.push_back(0);
  }
  inst.c_max = 1;
  EXPECT_THROW(brute_force_max(ObjectiveSpec::return_only(inst)), CapacityError);
}

}  // namespace
}  // namespace bqaoa
