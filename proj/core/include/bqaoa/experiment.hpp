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
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bqaoa/battery.hpp"

namespace bqaoa {

struct IntRange {
  std::int64_t lo = 0;
  std::int64_t hi = 0;

  bool operator==(const IntRange&) const = default;
};

// Parses "a..b" or a single integer "a".
IntRange parse_range(std::string_view text);

// Inclusive draw ranges for random instances, and c_max = per_window * n.
struct InstanceRanges {
  IntRange lambda1{0, 5};
  IntRange lambda2{0, 3};
  IntRange cost1{0, 2};
  IntRange cost2{0, 1};
  std::int64_t c_max_per_window = 1;
};

// Every entry uniform on its range from a generator seeded with `seed`;
// the seed is stored on the instance. Throws ValidationError on an empty or
// negative range.
BatteryInstance gen_instance(std::size_t n, const InstanceRanges& ranges, std::uint64_t seed);

enum class SweepApproach { kConstrained, kRelaxedNoPenalty, kRelaxedPenalty };
enum class SweepVariant { kSequential, kTree, kOracle };

const char* to_string(SweepApproach a);
const char* to_string(SweepVariant v);
SweepApproach parse_approach(std::string_view text);
SweepVariant parse_variant(std::string_view text);

inline constexpr std::size_t kConstrainedMaxDepth = 50;
inline constexpr std::size_t kConstrainedMaxWindows = 8;

struct SweepConfig {
  SweepApproach approach = SweepApproach::kRelaxedNoPenalty;
  SweepVariant variant = SweepVariant::kOracle;
  IntRange n_range{1, 1};
  IntRange p_range{1, 1};
  std::size_t trials = 1000;
  double alpha = 1.0;
  std::uint64_t base_seed = 0;
  InstanceRanges ranges;
  std::uint64_t shots = 0;
  // Off gives byte-reproducible output (mean_runtime_ms written as 0).
  bool record_timing = true;
  // Worker threads; 0 picks the hardware concurrency.
  std::size_t threads = 0;
};

// One (n, p) cell. mean/std are empty for a NO-DATA cell (capacity
// exceeded) or when no trial had a positive optimum. Trials whose optimum
// is not positive have no ratio and are left out of mean and std.
struct SweepRecord {
  std::size_t n = 0;
  std::size_t p = 0;
  SweepApproach approach = SweepApproach::kRelaxedNoPenalty;
  SweepVariant variant = SweepVariant::kOracle;
  std::size_t trials = 0;
  std::optional<double> mean_ratio;
  std::optional<double> std_ratio;
  double mean_runtime_ms = 0.0;
  std::uint64_t seed = 0;

  bool operator==(const SweepRecord&) const = default;
};

// Seed of trial `trial` in cell (n, p).
std::uint64_t trial_seed(std::uint64_t base_seed, std::size_t n, std::size_t p,
                         std::size_t trial);

// Ratio of one trial (NaN when undefined).
double run_trial(const SweepConfig& cfg, std::size_t n, std::size_t p, std::size_t trial);

// Cells in (n, p) order. Throws ValidationError on a malformed config.
std::vector<SweepRecord> run_sweep(const SweepConfig& cfg);

inline constexpr std::string_view kCsvHeader =
    "n,p,approach,variant,trials,mean_ratio,std_ratio,mean_runtime_ms,seed";

// Reals use 6 significant digits, "C"-style, independent of locale.
std::string format_csv(const std::vector<SweepRecord>& records);
std::vector<SweepRecord> parse_csv(std::string_view text);
void emit_csv(const std::vector<SweepRecord>& records, const std::filesystem::path& path);

enum class PlotAxis { kN, kP };
PlotAxis parse_axis(std::string_view text);

// Standalone SVG line chart of mean ratio against `x`, one coloured series
// per distinct `series` value. NO-DATA cells are skipped. Throws
// ValidationError when nothing is left to draw.
std::string render_plot(const std::vector<SweepRecord>& records, PlotAxis x, PlotAxis series);
void emit_plot(const std::vector<SweepRecord>& records, const std::filesystem::path& path,
               PlotAxis x, PlotAxis series);

}  // namespace bqaoa
