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

// bqaoa command-line harness: instance generation, single runs, parameter
// sweeps and the self-verification suites.
//
// Exit codes: 0 success, 1 validation, 2 capacity, 3 I/O.

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "bqaoa/battery.hpp"
#include "bqaoa/driver.hpp"
#include "bqaoa/error.hpp"
#include "bqaoa/experiment.hpp"
#include "bqaoa/instance_io.hpp"
#include "bqaoa/verify.hpp"

namespace {

using namespace bqaoa;

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitCapacity = 2;
constexpr int kExitIo = 3;

struct GenArgs {
  std::size_t n = 0;
  std::uint64_t seed = 0;
  std::string out;
};

struct RunArgs {
  std::string instance;
  std::string approach;
  std::string variant = "1";
  std::size_t p = 1;
  std::uint64_t shots = 1024;
  std::uint64_t seed = 0;
  double alpha = 1.0;
};

struct SweepArgs {
  std::string approach;
  std::string variant = "oracle";
  std::string n = "1..4";
  std::string p = "1..4";
  std::size_t trials = 1000;
  std::uint64_t seed = 0;
  double alpha = 1.0;
  std::string out;
  std::string plot;
  std::string x = "p";
  std::size_t threads = 0;
  bool no_timing = false;
};

struct VerifyArgs {
  std::string module = "all";
  std::uint64_t seed = 2024;
  std::size_t instances = 10;
  std::size_t gammas = 5;
};

ObjectiveSpec spec_for(SweepApproach approach, BatteryInstance inst, double alpha) {
  switch (approach) {
    case SweepApproach::kConstrained:
      return ObjectiveSpec::constrained(std::move(inst));
    case SweepApproach::kRelaxedNoPenalty:
      return ObjectiveSpec::return_only(std::move(inst));
    case SweepApproach::kRelaxedPenalty:
      return ObjectiveSpec::relaxed(std::move(inst), alpha);
  }
  throw ValidationError("unknown approach");
}

nlohmann::json real_or_null(double v) {
  return std::isfinite(v) ? nlohmann::json(v) : nlohmann::json(nullptr);
}

int cmd_gen(const GenArgs& a) {
  const BatteryInstance inst = gen_instance(a.n, InstanceRanges{}, a.seed);
  if (a.out.empty()) {
    std::cout << format_instance(inst);
  } else {
    write_instance(a.out, inst);
  }
  return kExitOk;
}

int cmd_run(const RunArgs& a) {
  const BatteryInstance inst = read_instance(a.instance);
  const SweepApproach approach = parse_approach(a.approach);
  const SweepVariant variant = parse_variant(a.variant);
  const ObjectiveSpec spec = spec_for(approach, inst, a.alpha);

  QaoaRunResult r;
  if (variant == SweepVariant::kOracle) {
    r = run_qaoa_oracle(spec, a.p, a.shots, a.seed);
  } else {
    r = run_qaoa(spec,
                 approach == SweepApproach::kConstrained ? Approach::kConstrained
                                                         : Approach::kRelaxed,
                 variant == SweepVariant::kTree ? CostVariant::kTree : CostVariant::kSequential,
                 a.p, a.shots, a.seed);
  }

  const std::size_t slack = spec.slack_bits();
  nlohmann::json doc;
  doc["approach"] = to_string(approach);
  doc["variant"] = to_string(variant);
  doc["n"] = inst.n();
  doc["p"] = a.p;
  doc["shots"] = r.shots;
  doc["seed"] = r.seed;
  doc["expectation"] = r.expectation;
  doc["optimum"] = r.optimum;
  doc["ratio"] = real_or_null(r.ratio);
  if (r.best_sampled) {
    doc["best_sampled"] = {{"register", format_register(r.best_sampled->first, inst.n(), slack)},
                           {"value", r.best_sampled->second}};
  } else {
    doc["best_sampled"] = nullptr;
  }
  doc["resources"] = {{"gate_count", r.resources.gate_count},
                      {"depth", r.resources.depth},
                      {"qubit_count", r.resources.qubit_count}};
  std::cout << doc.dump(2) << '\n';
  return kExitOk;
}

int cmd_sweep(const SweepArgs& a) {
  SweepConfig cfg;
  cfg.approach = parse_approach(a.approach);
  cfg.variant = parse_variant(a.variant);
  cfg.n_range = parse_range(a.n);
  cfg.p_range = parse_range(a.p);
  cfg.trials = a.trials;
  cfg.alpha = a.alpha;
  cfg.base_seed = a.seed;
  cfg.threads = a.threads;
  cfg.record_timing = !a.no_timing;
  // Parse the axis before the (possibly long) sweep runs.
  const std::optional<PlotAxis> x =
      a.plot.empty() ? std::nullopt : std::optional<PlotAxis>(parse_axis(a.x));

  const std::vector<SweepRecord> records = run_sweep(cfg);
  emit_csv(records, a.out);
  if (x) {
    emit_plot(records, a.plot, *x, *x == PlotAxis::kP ? PlotAxis::kN : PlotAxis::kP);
  }
  for (const SweepRecord& r : records) {
    if (!r.mean_ratio) std::cerr << "n=" << r.n << " p=" << r.p << ": NO-DATA\n";
  }
  return kExitOk;
}

int cmd_verify(const VerifyArgs& a) {
  VerifyOptions opts;
  opts.seed = a.seed;
  opts.instances = a.instances;
  opts.gammas = a.gammas;
  bool ok = true;
  for (const CheckResult& c : run_verification(parse_suite(a.module), opts)) {
    std::cout << (c.passed ? "PASS " : "FAIL ") << c.name;
    if (!c.detail.empty()) std::cout << "  " << c.detail;
    std::cout << '\n';
    ok = ok && c.passed;
  }
  return ok ? kExitOk : kExitValidation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"QAOA battery-scheduling experiments"};
  app.require_subcommand(1);

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Write a random instance");
  gen_cmd->add_option("--n", gen.n, "Number of time windows")->required();
  gen_cmd->add_option("--seed", gen.seed, "Generator seed")->required();
  gen_cmd->add_option("--out", gen.out, "Output file (stdout if omitted)");

  RunArgs run;
  auto* run_cmd = app.add_subcommand("run", "Run QAOA on one instance");
  run_cmd->add_option("--instance", run.instance, "Instance file")->required();
  run_cmd->add_option("--approach", run.approach,
                      "constrained | relaxed_nopenalty | relaxed_penalty")
      ->required();
  run_cmd->add_option("--variant", run.variant, "1 | 2 | oracle")->capture_default_str();
  run_cmd->add_option("--p", run.p, "Depth")->required();
  run_cmd->add_option("--shots", run.shots, "Samples drawn")->capture_default_str();
  run_cmd->add_option("--seed", run.seed, "Sampling seed")->capture_default_str();
  run_cmd->add_option("--alpha", run.alpha, "Relaxed penalty slope")->capture_default_str();

  SweepArgs sweep;
  auto* sweep_cmd = app.add_subcommand("sweep", "Mean ratio over random instances per (n, p)");
  sweep_cmd->add_option("--approach", sweep.approach,
                        "constrained | relaxed_nopenalty | relaxed_penalty")
      ->required();
  sweep_cmd->add_option("--variant", sweep.variant, "1 | 2 | oracle")->capture_default_str();
  sweep_cmd->add_option("--n", sweep.n, "Window range a..b")->capture_default_str();
  sweep_cmd->add_option("--p", sweep.p, "Depth range a..b")->capture_default_str();
  sweep_cmd->add_option("--trials", sweep.trials, "Instances per cell")->capture_default_str();
  sweep_cmd->add_option("--seed", sweep.seed, "Base seed")->capture_default_str();
  sweep_cmd->add_option("--alpha", sweep.alpha, "Relaxed penalty slope")->capture_default_str();
  sweep_cmd->add_option("--out", sweep.out, "CSV output")->required();
  sweep_cmd->add_option("--plot", sweep.plot, "SVG output");
  sweep_cmd->add_option("--x", sweep.x, "Plot x axis: p | n")->capture_default_str();
  sweep_cmd->add_option("--threads", sweep.threads, "Worker threads (0 = all cores)");
  sweep_cmd->add_flag("--no-timing", sweep.no_timing, "Write runtime as 0 for byte-stable CSV");

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Oracle-equivalence and arithmetic checks");
  verify_cmd->add_option("--module", verify.module, "all | arith | relaxed | constrained")
      ->capture_default_str();
  verify_cmd->add_option("--seed", verify.seed)->capture_default_str();
  verify_cmd->add_option("--instances", verify.instances)->capture_default_str();
  verify_cmd->add_option("--gammas", verify.gammas)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitValidation;
  }

  try {
    if (*gen_cmd) return cmd_gen(gen);
    if (*run_cmd) return cmd_run(run);
    if (*sweep_cmd) return cmd_sweep(sweep);
    if (*verify_cmd) return cmd_verify(verify);
  } catch (const CapacityError& e) {
    std::cerr << "capacity: " << e.what() << '\n';
    return kExitCapacity;
  } catch (const IoError& e) {
    std::cerr << "io: " << e.what() << '\n';
    return kExitIo;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitValidation;
  }
  return kExitValidation;
}
