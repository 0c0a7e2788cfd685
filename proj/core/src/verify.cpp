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

#include "bqaoa/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "bqaoa/arithmetic.hpp"
#include "bqaoa/battery.hpp"
#include "bqaoa/constrained.hpp"
#include "bqaoa/error.hpp"
#include "bqaoa/experiment.hpp"
#include "bqaoa/relaxed.hpp"
#include "bqaoa/rng.hpp"
#include "bqaoa/statevector.hpp"

namespace bqaoa {
namespace {

constexpr double kPhaseTol = 1e-9;
constexpr double kAncillaTol = 1e-12;

// Runs `c` on basis state `input` and returns the output basis index, or
// -1 when the result is not a single basis state.
std::int64_t run_basis(const Circuit& c, std::uint64_t input) {
  Statevector s(c.num_qubits());
  s[0] = 0.0;
  s[input] = 1.0;
  s.apply(c);
  for (std::size_t i = 0; i < s.dimension(); ++i) {
    if (std::abs(std::abs(s[i]) - 1.0) < 1e-9) return static_cast<std::int64_t>(i);
  }
  return -1;
}

std::uint64_t read(std::uint64_t index, const QuantumRegister& r) {
  std::uint64_t v = 0;
  for (std::size_t j = 0; j < r.width(); ++j) v |= ((index >> r[j]) & 1U) << j;
  return v;
}

std::uint64_t write(std::uint64_t value, const QuantumRegister& r) {
  std::uint64_t idx = 0;
  for (std::size_t j = 0; j < r.width(); ++j) idx |= ((value >> j) & 1U) << r[j];
  return idx;
}

// Random normalized amplitudes on the first `width` qubits, rest |0>.
Statevector random_register_state(std::size_t width, std::size_t total, Rng& rng) {
  Statevector s(total);
  double norm = 0.0;
  const std::size_t count = std::size_t{1} << width;
  for (std::size_t i = 0; i < count; ++i) {
    s[i] = {rng.uniform01() - 0.5, rng.uniform01() - 0.5};
    norm += std::norm(s[i]);
  }
  for (std::size_t i = 0; i < count; ++i) s[i] /= std::sqrt(norm);
  return s;
}

CheckResult check_adders() {
  std::size_t failures = 0, cases = 0;
  for (std::size_t w = 1; w <= 4; ++w) {
    const QuantumRegister reg = make_register("z", 0, w);
    const Qubit ctrl = static_cast<Qubit>(w);
    const QuantumRegister carries = make_register("carry", static_cast<Qubit>(w + 1), w);
    const std::size_t nq = 2 * w + 1;
    const std::uint64_t mod = std::uint64_t{1} << w;
    for (std::uint64_t x = 0; x < mod; ++x) {
      for (int mode = 0; mode < 3; ++mode) {  // uncontrolled, control 0, control 1
        const std::optional<Qubit> control =
            mode == 0 ? std::nullopt : std::optional<Qubit>(ctrl);
        const Circuit c = build_add_const(nq, reg, x, control, carries);
        for (std::uint64_t z = 0; z < mod; ++z) {
          ++cases;
          const std::uint64_t in = write(z, reg) | (mode == 2 ? std::uint64_t{1} << ctrl : 0);
          const std::int64_t out = run_basis(c, in);
          const std::uint64_t want = mode == 1 ? z : (z + x) % mod;
          if (out < 0 || read(static_cast<std::uint64_t>(out), reg) != want ||
              read(static_cast<std::uint64_t>(out), carries) != 0) {
            ++failures;
          }
        }
      }
    }
  }
  for (std::size_t wa = 1; wa <= 4; ++wa) {
    for (std::size_t wb = 1; wb <= 4; ++wb) {
      const QuantumRegister a = make_register("a", 0, wa);
      const QuantumRegister b = make_register("b", static_cast<Qubit>(wa), wb);
      const QuantumRegister carries = make_register("carry", static_cast<Qubit>(wa + wb), wa);
      const std::size_t nq = 2 * wa + wb;
      const Circuit c = build_add_register(nq, a, b, carries);
      for (std::uint64_t av = 0; av < (std::uint64_t{1} << wa); ++av) {
        for (std::uint64_t bv = 0; bv < (std::uint64_t{1} << wb); ++bv) {
          ++cases;
          const std::int64_t out = run_basis(c, write(av, a) | write(bv, b));
          const auto o = static_cast<std::uint64_t>(out);
          if (out < 0 || read(o, a) != (av + bv) % (std::uint64_t{1} << wa) ||
              read(o, b) != bv || read(o, carries) != 0) {
            ++failures;
          }
        }
      }
    }
  }
  std::ostringstream detail;
  detail << cases << " cases, " << failures << " failures";
  return {"arith: adder truth tables (widths <= 4)", failures == 0, detail.str()};
}

BatteryInstance random_instance(std::size_t n, Rng& rng, std::int64_t c_max_hi) {
  BatteryInstance inst = gen_instance(n, InstanceRanges{}, rng.next());
  const std::int64_t hi = std::max<std::int64_t>(1, c_max_hi);
  inst.c_max = rng.uniform_int(1, hi);
  return inst;
}

CheckResult check_relaxed(CostVariant variant, const VerifyOptions& opt) {
  Rng rng(hash_combine(opt.seed, static_cast<std::uint64_t>(variant)));
  const std::size_t max_n = variant == CostVariant::kSequential ? 5 : 4;
  double worst_phase = 0.0, worst_mass = 0.0;
  for (std::size_t i = 0; i < opt.instances; ++i) {
    const auto n = static_cast<std::size_t>(rng.uniform_int(1, static_cast<std::int64_t>(max_n)));
    BatteryInstance inst = random_instance(n, rng, 2 * static_cast<std::int64_t>(n) + 1);
    const double alpha = 0.5 + 1.5 * rng.uniform01();
    const RelaxedLayout layout = make_layout(inst, variant, alpha);
    const ObjectiveSpec spec = ObjectiveSpec::relaxed(inst, alpha);
    const std::vector<Qubit> ancillas = layout.ancillas();
    for (std::size_t g = 0; g < opt.gammas; ++g) {
      const double gamma = (2.0 * rng.uniform01() - 1.0) * std::numbers::pi;
      const Statevector start = random_register_state(n, layout.num_qubits, rng);
      const Statevector got =
          apply(start, build_phase_separator_relaxed(inst, layout, gamma));
      const Statevector want = oracle_phase(spec, gamma, start, layout.choices.qubits);
      worst_phase = std::max(worst_phase, max_deviation_up_to_phase(want, got));
      worst_mass = std::max(worst_mass, mass_on_nonzero(got, ancillas));
    }
  }
  std::ostringstream detail;
  detail << "max deviation " << worst_phase << ", ancilla mass " << worst_mass;
  return {std::string("relaxed: variant ") + (variant == CostVariant::kSequential ? "1" : "2") +
              " separator matches oracle",
          worst_phase < kPhaseTol && worst_mass < kAncillaTol, detail.str()};
}

CheckResult check_constrained(const VerifyOptions& opt) {
  Rng rng(hash_combine(opt.seed, 77));
  double worst_phase = 0.0, worst_mass = 0.0;
  for (std::size_t i = 0; i < opt.instances; ++i) {
    const auto n = static_cast<std::size_t>(rng.uniform_int(1, 4));
    // Keep the register (schedule + slack) within 8 qubits.
    const std::int64_t c_max_hi = (std::int64_t{1} << (8 - n)) - 1;
    BatteryInstance inst =
        random_instance(n, rng, std::min<std::int64_t>(c_max_hi, 2 * static_cast<std::int64_t>(n) + 1));
    const ObjectiveSpec spec = ObjectiveSpec::constrained(inst);
    const ConstrainedEncoding enc = expand_ising(spec);
    const ConstrainedLayout layout = make_constrained_layout(enc);
    const Qubit ancilla[] = {layout.ancilla};
    for (std::size_t g = 0; g < opt.gammas; ++g) {
      const double gamma = (2.0 * rng.uniform01() - 1.0) * std::numbers::pi;
      const Statevector start =
          random_register_state(layout.reg.width(), layout.num_qubits, rng);
      const Statevector got =
          apply(start, build_phase_separator_constrained(enc, layout, gamma));
      const Statevector want = oracle_phase(spec, gamma, start, layout.reg.qubits);
      worst_phase = std::max(worst_phase, max_deviation_up_to_phase(want, got));
      worst_mass = std::max(worst_mass, mass_on_nonzero(got, ancilla));
    }
  }
  std::ostringstream detail;
  detail << "max deviation " << worst_phase << ", ancilla mass " << worst_mass;
  return {"constrained: separator matches oracle",
          worst_phase < kPhaseTol && worst_mass < kAncillaTol, detail.str()};
}

}  // namespace

VerifySuite parse_suite(std::string_view text) {
  if (text == "all") return VerifySuite::kAll;
  if (text == "arith") return VerifySuite::kArith;
  if (text == "relaxed") return VerifySuite::kRelaxed;
  if (text == "constrained") return VerifySuite::kConstrained;
  throw ValidationError("unknown verify module \"" + std::string(text) + "\"");
}

std::vector<CheckResult> run_verification(VerifySuite suite, const VerifyOptions& options) {
  std::vector<CheckResult> out;
  if (suite == VerifySuite::kAll || suite == VerifySuite::kArith) {
    out.push_back(check_adders());
  }
  if (suite == VerifySuite::kAll || suite == VerifySuite::kRelaxed) {
    out.push_back(check_relaxed(CostVariant::kSequential, options));
    out.push_back(check_relaxed(CostVariant::kTree, options));
  }
  if (suite == VerifySuite::kAll || suite == VerifySuite::kConstrained) {
    out.push_back(check_constrained(options));
  }
  return out;
}

}  // namespace bqaoa
