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

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace bqaoa {

// Self-checks behind the CLI `verify` command: exhaustive adder truth
// tables and gate-level phase separators against the diagonal oracle.
enum class VerifySuite { kAll, kArith, kRelaxed, kConstrained };

VerifySuite parse_suite(std::string_view text);

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerifyOptions {
  std::uint64_t seed = 2024;
  std::size_t instances = 10;
  std::size_t gammas = 5;
};

std::vector<CheckResult> run_verification(VerifySuite suite, const VerifyOptions& options = {});

}  // namespace bqaoa
