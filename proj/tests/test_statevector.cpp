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

#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "bqaoa/error.hpp"
#include "bqaoa/statevector.hpp"
#include "test_util.hpp"

namespace bqaoa {
namespace {

using testing::basis_state;

TEST(NewUniform, SingleQubitIsPlus) {
  Statevector s = new_uniform(1, 0);
  ASSERT_EQ(s.dimension(), 2u);
  EXPECT_NEAR(s[0].real(), 1 / std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(s[1].real(), 1 / std::sqrt(2.0), 1e-15);
}

TEST(NewUniform, AncillaStaysZero) {
  Statevector s = new_uniform(2, 1);
  for (std::size_t i = 0; i < 8; ++i) {
    EXPECT_NEAR(std::abs(s[i]), i < 4 ? 0.5 : 0.0, 1e-15) << i;
  }
}

TEST(NewUniform, ThreeQubits) {
  Statevector s = new_uniform(3, 0);
  for (std::size_t i = 0; i < 8; ++i) EXPECT_NEAR(s[i].real(), std::pow(2.0, -1.5), 1e-15);
}

TEST(NewUniform, RejectsOversizedRegister) {
  EXPECT_THROW(new_uniform(kMaxSimulatedQubits, 1), CapacityError);
}

TEST(Apply, XFlipsZero) {
  Circuit c(1);
  c.x(0);
  Statevector s = apply(Statevector(1), c);
  EXPECT_EQ(testing::basis_index(s), 1u);
}

TEST(Apply, HadamardIsInvolution) {
  Circuit c(1);
  c.h(0).h(0);
  Statevector s = apply(Statevector(1), c);
  EXPECT_NEAR(std::abs(s[0] - 1.0), 0.0, 1e-12);
  EXPECT_NEAR(std::abs(s[1]), 0.0, 1e-12);
}

TEST(Apply, PhasePiOnPlus) {
  Circuit c(1);
  c.phase(std::numbers::pi, 0);
  Statevector s = apply(new_uniform(1, 0), c);
  EXPECT_NEAR(std::abs(s[0] - 1 / std::sqrt(2.0)), 0.0, 1e-12);
  EXPECT_NEAR(std::abs(s[1] + 1 / std::sqrt(2.0)), 0.0, 1e-12);
}

TEST(Apply, RxMatchesMatrix) {
  const double theta = 0.73;
  Circuit c(1);
  c.rx(theta, 0);
  Statevector s = apply(Statevector(1), c);
  EXPECT_NEAR(std::abs(s[0] - std::cos(theta / 2)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(s[1] - Amplitude(0, -std::sin(theta / 2))), 0.0, 1e-15);
}

TEST(Apply, ControlledGateActsOnlyWhenControlsSet) {
  // Controls on qubits 0 and 2, target 1, in a 3-qubit register.
  Circuit c(3);
  c.ccx(0, 2, 1);
  for (std::uint64_t i = 0; i < 8; ++i) {
    const bool fire = (i & 1) && (i & 4);
    EXPECT_EQ(testing::basis_index(apply(basis_state(3, i), c)), fire ? (i ^ 2) : i) << i;
  }
}

TEST(Apply, PreservesNorm) {
  Rng rng(11);
  Statevector s = testing::random_state(rng, 4);
  Circuit c(4);
  c.h(0).rx(0.3, 1).cphase(1.1, 1, 3).ccx(0, 1, 2).rx(-2.0, 3);
  EXPECT_NEAR(apply(s, c).norm_squared(), 1.0, 1e-12);
}

TEST(Apply, OutOfRangeQubitThrows) {
  Statevector s(2);
  Circuit c(3);
  c.x(2);
  EXPECT_THROW(s.apply(c), IndexError);
}

TEST(ApplyProperty, RandomCircuitsAreUnitary) {
  Rng rng(77);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 1 + rng.uniform_int(0, 5);
    Circuit c = testing::random_circuit(rng, n, 50);
    Statevector s = apply(testing::random_state(rng, n), c);
    EXPECT_NEAR(s.norm_squared(), 1.0, 1e-9) << "trial " << trial;
  }
}

TEST(ApplyProperty, InverseUndoesCircuit) {
  Rng rng(78);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 1 + rng.uniform_int(0, 5);
    Circuit c = testing::random_circuit(rng, n, 50);
    Statevector s0 = testing::random_state(rng, n);
    Statevector s1 = apply(apply(s0, c), inverse(c));
    for (std::size_t i = 0; i < s0.dimension(); ++i) {
      ASSERT_LT(std::abs(s0[i] - s1[i]), 1e-9) << "trial " << trial << " index " << i;
    }
  }
}

TEST(Probabilities, PlusIsFair) {
  const Qubit q[] = {0};
  Distribution d = probabilities(new_uniform(1, 0), q);
  ASSERT_EQ(d.size(), 2u);
  EXPECT_NEAR(d[0], 0.5, 1e-15);
  EXPECT_NEAR(d[1], 0.5, 1e-15);
}

TEST(Probabilities, MarginalOfBasisState) {
  // |10> means qubit 1 is set.
  const Qubit q[] = {1};
  Distribution d = probabilities(basis_state(2, 2), q);
  EXPECT_NEAR(d[1], 1.0, 1e-15);
  EXPECT_NEAR(d[0], 0.0, 1e-15);
}

TEST(Probabilities, UntouchedAncilla) {
  const Qubit q[] = {2};
  Distribution d = probabilities(new_uniform(2, 1), q);
  EXPECT_NEAR(d[0], 1.0, 1e-15);
}

TEST(Probabilities, SubsetOrderDefinesBitOrder) {
  // Qubit 0 set, qubit 2 clear. Read as (2, 0): bit 1 of the result is set.
  const Qubit q[] = {2, 0};
  Distribution d = probabilities(basis_state(3, 1), q);
  EXPECT_NEAR(d[2], 1.0, 1e-15);
}

TEST(Probabilities, RejectsBadSubsets) {
  Statevector s(2);
  const Qubit dup[] = {0, 0};
  const Qubit out[] = {5};
  EXPECT_THROW(probabilities(s, dup), ValidationError);
  EXPECT_THROW(probabilities(s, out), IndexError);
}

TEST(Probabilities, SumsToOne) {
  Rng rng(5);
  Statevector s = testing::random_state(rng, 5);
  const Qubit q[] = {4, 1, 3};
  double total = 0.0;
  for (double p : probabilities(s, q)) total += p;
  EXPECT_NEAR(total, 1.0, 1e-12);
}

TEST(ProbabilitiesProperty, MarginalMatchesFullSum) {
  Rng rng(31);
  for (std::size_t n = 1; n <= 5; ++n) {
    Statevector s = testing::random_state(rng, n);
    // Every ordered subset would be a lot; use all masks in ascending order
    // plus the reversed full register.
    for (std::uint64_t mask = 1; mask < (1ULL << n); ++mask) {
      std::vector<Qubit> subset;
      for (Qubit q = 0; q < n; ++q)
        if (mask >> q & 1) subset.push_back(q);
      Distribution d = probabilities(s, subset);
      std::vector<double> ref(d.size(), 0.0);
      for (std::uint64_t i = 0; i < s.dimension(); ++i)
        ref[testing::read_bits(i, subset)] += std::norm(s[i]);
      for (std::size_t k = 0; k < d.size(); ++k) ASSERT_NEAR(d[k], ref[k], 1e-12);
    }
    std::vector<Qubit> rev;
    for (Qubit q = n; q-- > 0;) rev.push_back(q);
    Distribution d = probabilities(s, rev);
    for (std::uint64_t i = 0; i < s.dimension(); ++i)
      EXPECT_NEAR(d[testing::read_bits(i, rev)], std::norm(s[i]), 1e-12);
  }
}

TEST(Sample, DeterministicState) {
  const Qubit q[] = {0};
  MeasurementResult m = sample(basis_state(1, 1), q, 100, 123);
  ASSERT_EQ(m.counts.size(), 1u);
  EXPECT_EQ(m.counts.at(1), 100u);
  EXPECT_EQ(m.shots, 100u);
}

TEST(Sample, FairCoinWithinFiveSigma) {
  const Qubit q[] = {0};
  MeasurementResult m = sample(new_uniform(1, 0), q, 10000, 7);
  EXPECT_GE(m.counts[0], 4700u);
  EXPECT_LE(m.counts[0], 5300u);
  EXPECT_EQ(m.counts[0] + m.counts[1], 10000u);
}

TEST(Sample, SameSeedSameCounts) {
  Rng rng(3);
  Statevector s = testing::random_state(rng, 3);
  const Qubit q[] = {0, 1, 2};
  EXPECT_EQ(sample(s, q, 500, 9).counts, sample(s, q, 500, 9).counts);
}

TEST(Sample, ZeroShotsRejected) {
  const Qubit q[] = {0};
  EXPECT_THROW(sample(Statevector(1), q, 0, 1), ValidationError);
}

TEST(Expectation, PlusWithLinearF) {
  const Qubit q[] = {0};
  EXPECT_NEAR(expectation_diagonal(new_uniform(1, 0), q, [](Bits b) { return 2.0 * b; }), 1.0,
              1e-15);
}

TEST(Expectation, ZeroStateGivesFZero) {
  const Qubit q[] = {0, 1};
  EXPECT_DOUBLE_EQ(expectation_diagonal(Statevector(2), q, [](Bits b) { return 7.0 + b; }), 7.0);
}

TEST(Expectation, AveragePopcount) {
  const Qubit q[] = {0, 1};
  EXPECT_NEAR(expectation_diagonal(new_uniform(2, 0), q,
                                   [](Bits b) { return static_cast<double>(std::popcount(b)); }),
              1.0, 1e-15);
}

TEST(ExpectationProperty, MatchesDistributionSum) {
  Rng rng(41);
  Statevector s = testing::random_state(rng, 5);
  const std::vector<Qubit> subset = {3, 0, 4};
  auto f = [](Bits b) { return std::sin(1.0 + static_cast<double>(b)); };
  Distribution d = probabilities(s, subset);
  double ref = 0.0;
  for (std::size_t k = 0; k < d.size(); ++k) ref += d[k] * f(k);
  EXPECT_NEAR(expectation_diagonal(s, subset, f), ref, 1e-12);
}

TEST(Deviation, IgnoresGlobalPhase) {
  Rng rng(21);
  Statevector a = testing::random_state(rng, 3);
  Statevector b = a;
  for (auto& v : b.amplitudes()) v *= std::polar(1.0, 0.77);
  EXPECT_LT(max_deviation_up_to_phase(a, b), 1e-14);
  b[3] *= -1.0;
  EXPECT_GT(max_deviation_up_to_phase(a, b), 1e-3);
}

TEST(MassOnNonzero, CountsOnlyFlaggedStates) {
  const Qubit anc[] = {2};
  EXPECT_DOUBLE_EQ(mass_on_nonzero(new_uniform(2, 1), anc), 0.0);
  EXPECT_NEAR(mass_on_nonzero(new_uniform(3, 0), anc), 0.5, 1e-15);
}

}  // namespace
}  // namespace bqaoa
