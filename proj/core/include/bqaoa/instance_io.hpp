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

#include <filesystem>
#include <string>
#include <string_view>

#include "bqaoa/battery.hpp"

namespace bqaoa {

// Instance document, JSON:
//   {"version": "1", "n": 3, "lambda1": [...], "lambda2": [...],
//    "cost1": [...], "cost2": [...], "c_max": 3, "seed": 42}
// "seed" is optional. Every number must be an integer; anything else is a
// ValidationError.
BatteryInstance parse_instance(std::string_view text);
std::string format_instance(const BatteryInstance& inst);

// File wrappers; failures to open or write throw IoError.
BatteryInstance read_instance(const std::filesystem::path& path);
void write_instance(const std::filesystem::path& path, const BatteryInstance& inst);

}  // namespace bqaoa
