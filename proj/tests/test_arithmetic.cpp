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

#include <gtest/gtest.h>

#include "bqaoa/arithmetic.hpp"
#include "bqaoa/error.hpp"
#include "bqaoa/statevector.hpp"
#include "test_util.hpp"

namespace bqaoa {
namespace {

using testing::basis_index;
using testing::basis_state;
using testing::read_bits;
using testing::write_bits;

// Target register on qubits [0, width), control qubit next, then carries.
struct Bench {
  std::size_t width;
  QuantumRegister reg;
  Qubit control;
  QuantumRegister carries;
  std::size_t num_qubits;

  explicit Bench(std::size_t w)
      : width(w),
        reg(make_register("A", 0, w)),
        control(static_cast<Qubit>(w)),
        carries(make_register("carry", static_cast<Qubit>(w + 1), w)),
        num_qubits(2 * w + 1) {}

  // Runs `c` on |z>|ctrl>|0...> and returns the register value, failing
  // the test when the output is not a basis state or carries are dirty.
  std::uint64_t run(const Circuit& c, std::uint64_t z, bool ctrl) const {
    std::uint64_t in = write_bits(0, reg.qubits, z);
    if (ctrl) in |= 1ULL << control;
    const std::uint64_t out = basis_index(apply(basis_state(num_qubits, in), c));
    EXPECT_LT(out, 1ULL << num_qubits) << "not a basis state";
    EXPECT_EQ(read_bits(out, carries.qubits), 0u) << "carries dirty";
    EXPECT_EQ((out >> control) & 1, ctrl ? 1u : 0u) << "control changed";
    return read_bits(out, reg.qubits);
  }
};

TEST(AddPow2, ThreePlusOne) {
  Bench b(3);
  EXPECT_EQ(b.run(build_add_pow2(b.num_qubits, b.reg, 0, b.control, b.carries), 3, true), 4u);
}

TEST(AddPow2, ControlOff) {
  Bench b(3);
  EXPECT_EQ(b.run(build_add_pow2(b.num_qubits, b.reg, 1, b.control, b.carries), 5, false), 5u);
}

TEST(AddPow2, ExhaustiveUpToWidthFour) {
  for (std::size_t w = 1; w <= 4; ++w) {
    Bench b(w);
    const std::uint64_t mod = 1ULL << w;
    for (std::size_t k = 0; k < w; ++k) {
      Circuit controlled = build_add_pow2(b.num_qubits, b.reg, k, b.control, b.carries);
      Circuit plain = build_add_pow2(b.num_qubits, b.reg, k, std::nullopt, b.carries);
      for (std::uint64_t z = 0; z < mod; ++z) {
        const std::uint64_t sum = (z + (1ULL << k)) % mod;
        EXPECT_EQ(b.run(controlled, z, true), sum) << "w=" << w << " k=" << k << " z=" << z;
        EXPECT_EQ(b.run(controlled, z, false), z);
        EXPECT_EQ(b.run(plain, z, false), sum);
      }
    }
  }
}

TEST(AddPow2, Errors) {
  Bench b(3);
  EXPECT_THROW(build_add_pow2(b.num_qubits, b.reg, 3, b.control, b.carries), ValidationError);
  QuantumRegister short_carries = make_register("c", 4, 1);
  EXPECT_THROW(build_add_pow2(b.num_qubits, b.reg, 0, b.control, short_carries), CapacityError);
}

TEST(AddPow2, CarriesNeeded) {
  // Enough carries per the declared count, one fewer is a capacity error.
  for (std::size_t w = 1; w <= 5; ++w) {
    for (std::size_t k = 0; k < w; ++k) {
      for (bool ctrl : {false, true}) {
        const std::size_t need = carries_needed(w, k, ctrl);
        const std::size_t nq = w + 1 + need;
        QuantumRegister reg = make_register("A", 0, w);
        std::optional<Qubit> c = ctrl ? std::optional<Qubit>(static_cast<Qubit>(w)) : std::nullopt;
        EXPECT_NO_THROW(build_add_pow2(nq, reg, k, c, make_register("c", w + 1, need)));
        if (need > 0) {
          EXPECT_THROW(build_add_pow2(nq, reg, k, c, make_register("c", w + 1, need - 1)),
                       CapacityError);
        }
      }
    }
  }
}

TEST(AddConst, ZeroIsEmpty) {
  Bench b(3);
  EXPECT_TRUE(build_add_const(b.num_qubits, b.reg, 0, b.control, b.carries).empty());
}

TEST(AddConst, SixPlusFive) {
  Bench b(4);
  EXPECT_EQ(b.run(build_add_const(b.num_qubits, b.reg, 5, std::nullopt, b.carries), 6, false),
            11u);
}

TEST(AddConst, ExhaustiveUpToWidthFour) {
  for (std::size_t w = 1; w <= 4; ++w) {
    Bench b(w);
    const std::uint64_t mod = 1ULL << w;
    for (std::uint64_t x = 0; x < mod; ++x) {
      Circuit c = build_add_const(b.num_qubits, b.reg, x, b.control, b.carries);
      for (std::uint64_t z = 0; z < mod; ++z) {
        EXPECT_EQ(b.run(c, z, true), (z + x) % mod) << "w=" << w << " x=" << x << " z=" << z;
        EXPECT_EQ(b.run(c, z, false), z);
      }
    }
  }
}

TEST(AddConst, InverseSubtracts) {
  for (std::size_t w = 1; w <= 4; ++w) {
    Bench b(w);
    const std::uint64_t mod = 1ULL << w;
    for (std::uint64_t x = 0; x < mod; ++x) {
      Circuit c = inverse(build_add_const(b.num_qubits, b.reg, x, std::nullopt, b.carries));
      for (std::uint64_t z = 0; z < mod; ++z) EXPECT_EQ(b.run(c, z, false), (z + mod - x) % mod);
    }
  }
}

TEST(AddConst, TooLarge) {
  Bench b(3);
  EXPECT_THROW(build_add_const(b.num_qubits, b.reg, 8, std::nullopt, b.carries), ValidationError);
}

// A on [0, wa), B on [wa, wa + wb), carries after.
struct RegisterBench {
  QuantumRegister a, b, carries;
  std::size_t num_qubits;

  RegisterBench(std::size_t wa, std::size_t wb)
      : a(make_register("A", 0, wa)),
        b(make_register("B", static_cast<Qubit>(wa), wb)),
        carries(make_register("carry", static_cast<Qubit>(wa + wb), wa)),
        num_qubits(2 * wa + wb) {}

  std::pair<std::uint64_t, std::uint64_t> run(const Circuit& c, std::uint64_t av,
                                              std::uint64_t bv) const {
    const std::uint64_t in = write_bits(write_bits(0, a.qubits, av), b.qubits, bv);
    const std::uint64_t out = basis_index(apply(basis_state(num_qubits, in), c));
    EXPECT_LT(out, 1ULL << num_qubits);
    EXPECT_EQ(read_bits(out, carries.qubits), 0u);
    return {read_bits(out, a.qubits), read_bits(out, b.qubits)};
  }
};

TEST(AddRegister, TwoPlusThree) {
  RegisterBench r(3, 2);
  auto [a, b] = r.run(build_add_register(r.num_qubits, r.a, r.b, r.carries), 2, 3);
  EXPECT_EQ(a, 5u);
  EXPECT_EQ(b, 3u);
}

TEST(AddRegister, ZeroAddendKeepsA) {
  RegisterBench r(3, 2);
  Circuit c = build_add_register(r.num_qubits, r.a, r.b, r.carries);
  for (std::uint64_t a = 0; a < 8; ++a) EXPECT_EQ(r.run(c, a, 0).first, a);
}

TEST(AddRegister, ExhaustiveUpToWidthFour) {
  for (std::size_t wa = 1; wa <= 4; ++wa) {
    for (std::size_t wb = 1; wb <= 4; ++wb) {
      RegisterBench r(wa, wb);
      Circuit c = build_add_register(r.num_qubits, r.a, r.b, r.carries);
      for (std::uint64_t a = 0; a < (1ULL << wa); ++a) {
        for (std::uint64_t b = 0; b < (1ULL << wb); ++b) {
          auto [ao, bo] = r.run(c, a, b);
          EXPECT_EQ(ao, (a + b) % (1ULL << wa)) << wa << "," << wb << ": " << a << "+" << b;
          EXPECT_EQ(bo, b);
        }
      }
    }
  }
}

TEST(AddRegister, Overlap) {
  QuantumRegister a = make_register("A", 0, 3);
  QuantumRegister b = make_register("B", 2, 2);
  EXPECT_THROW(build_add_register(8, a, b, make_register("c", 4, 3)), ValidationError);
}

TEST(AdderProperty, SuperpositionIsPermuted) {
  // A uniform superposition over the register goes to a uniform superposition:
  // magnitudes are permuted, none created or lost.
  for (std::size_t w = 1; w <= 4; ++w) {
    Bench b(w);
    for (std::uint64_t x = 0; x < (1ULL << w); ++x) {
      Circuit prep(b.num_qubits);
      for (Qubit q : b.reg.qubits) prep.h(q);
      Statevector s = apply(apply(Statevector(b.num_qubits), prep),
                            build_add_const(b.num_qubits, b.reg, x, std::nullopt, b.carries));
      const double amp = std::pow(2.0, -0.5 * static_cast<double>(w));
      for (std::uint64_t i = 0; i < s.dimension(); ++i) {
        const bool in_reg = i < (1ULL << w);
        ASSERT_NEAR(std::abs(s[i]), in_reg ? amp : 0.0, 1e-12) << i;
      }
    }
  }
}

TEST(AdderProperty, RegisterAddCostIsBilinear) {
  // Bits of B above A's width drop out, so only an upper bound is meaningful.
  double hi = 0.0;
  for (std::size_t wa = 2; wa <= 6; ++wa) {
    for (std::size_t wb = 2; wb <= 6; ++wb) {
      RegisterBench r(wa, wb);
      const double per =
          static_cast<double>(resources(build_add_register(r.num_qubits, r.a, r.b, r.carries))
                                  .gate_count) /
          static_cast<double>(wa * wb);
      hi = std::max(hi, per);
    }
  }
  EXPECT_LE(hi, 3.0);
}

}  // namespace
}  // namespace bqaoa
