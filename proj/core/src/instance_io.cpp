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

#include "bqaoa/instance_io.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "bqaoa/error.hpp"

namespace bqaoa {
namespace {

using nlohmann::json;

std::int64_t read_int(const json& doc, const char* key) {
  if (!doc.contains(key)) throw ValidationError(std::string("instance missing \"") + key + "\"");
  const json& v = doc.at(key);
  if (!v.is_number_integer()) {
    throw ValidationError(std::string("instance field \"") + key + "\" must be an integer");
  }
  return v.get<std::int64_t>();
}

std::vector<std::int64_t> read_array(const json& doc, const char* key) {
  if (!doc.contains(key) || !doc.at(key).is_array()) {
    throw ValidationError(std::string("instance field \"") + key + "\" must be an array");
  }
  std::vector<std::int64_t> out;
  for (const json& v : doc.at(key)) {
    if (!v.is_number_integer()) {
      throw ValidationError(std::string("instance field \"") + key +
                            "\" must hold integers only");
    }
    out.push_back(v.get<std::int64_t>());
  }
  return out;
}

}  // namespace

BatteryInstance parse_instance(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("malformed instance document: ") + e.what());
  }
  if (!doc.is_object()) throw ValidationError("instance document must be an object");
  if (!doc.contains("version") || doc.at("version") != "1") {
    throw ValidationError("unsupported instance version (expected \"1\")");
  }
  BatteryInstance inst;
  inst.lambda1 = read_array(doc, "lambda1");
  inst.lambda2 = read_array(doc, "lambda2");
  inst.cost1 = read_array(doc, "cost1");
  inst.cost2 = read_array(doc, "cost2");
  inst.c_max = read_int(doc, "c_max");
  const std::int64_t n = read_int(doc, "n");
  if (n < 0 || static_cast<std::size_t>(n) != inst.lambda1.size()) {
    throw ValidationError("instance \"n\" disagrees with the array lengths");
  }
  if (doc.contains("seed")) {
    const json& s = doc.at("seed");
    if (!s.is_number_unsigned()) {
      throw ValidationError("instance \"seed\" must be a non-negative integer");
    }
    inst.seed = s.get<std::uint64_t>();
  }
  inst.validate();
  return inst;
}

std::string format_instance(const BatteryInstance& inst) {
  json doc = json::object();
  doc["version"] = "1";
  doc["n"] = inst.n();
  doc["lambda1"] = inst.lambda1;
  doc["lambda2"] = inst.lambda2;
  doc["cost1"] = inst.cost1;
  doc["cost2"] = inst.cost2;
  doc["c_max"] = inst.c_max;
  if (inst.seed) doc["seed"] = *inst.seed;
  return doc.dump(2) + "\n";
}

BatteryInstance read_instance(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read instance file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_instance(buf.str());
}

void write_instance(const std::filesystem::path& path, const BatteryInstance& inst) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write instance file " + path.string());
  out << format_instance(inst);
  if (!out) throw IoError("failed writing instance file " + path.string());
}

}  // namespace bqaoa
