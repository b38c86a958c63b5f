// Copyright 2026 The SAT Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "config.hpp"

#include <cmath>
#include <fstream>

namespace sat::cli {

Config::Config(nlohmann::json data) : data_(std::move(data)) {
  if (!data_.is_object()) throw ConfigError("<root>", "configuration must be a JSON object");
  for (const auto& [key, value] : data_.items()) {
    if (value.is_object()) throw ConfigError(key, "nested objects are not supported");
  }
}

Config Config::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("--config", "cannot open '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError("--config", std::string("invalid JSON: ") + e.what());
  }
  return Config(std::move(j));
}

bool Config::has(const std::string& key) const {
  used_.insert(key);
  return data_.contains(key) && !data_.at(key).is_null();
}

void Config::set(const std::string& key, nlohmann::json value) { data_[key] = std::move(value); }

const nlohmann::json& Config::at(const std::string& key) const {
  used_.insert(key);
  if (!data_.contains(key) || data_.at(key).is_null()) throw ConfigError(key, "missing");
  return data_.at(key);
}

double Config::number(const std::string& key) const {
  const auto& v = at(key);
  if (!v.is_number()) throw ConfigError(key, "expected a number");
  const double x = v.get<double>();
  if (!std::isfinite(x)) throw ConfigError(key, "must be finite");
  return x;
}

double Config::number_or(const std::string& key, double fallback) const {
  return has(key) ? number(key) : fallback;
}

std::int64_t Config::integer(const std::string& key) const {
  const auto& v = at(key);
  if (v.is_number_integer()) return v.get<std::int64_t>();
  if (v.is_number_float()) {
    const double x = v.get<double>();
    if (std::isfinite(x) && x == std::floor(x) && std::abs(x) < 9e15) return static_cast<std::int64_t>(x);
  }
  throw ConfigError(key, "expected an integer");
}

std::int64_t Config::integer_or(const std::string& key, std::int64_t fallback) const {
  return has(key) ? integer(key) : fallback;
}

std::string Config::text_or(const std::string& key, const std::string& fallback) const {
  if (!has(key)) return fallback;
  const auto& v = at(key);
  if (!v.is_string()) throw ConfigError(key, "expected a string");
  return v.get<std::string>();
}

bool Config::flag_or(const std::string& key, bool fallback) const {
  if (!has(key)) return fallback;
  const auto& v = at(key);
  if (!v.is_boolean()) throw ConfigError(key, "expected true or false");
  return v.get<bool>();
}

Vec3 Config::vec3(const std::string& key) const {
  const auto& v = at(key);
  if (!v.is_array() || v.size() != 3) throw ConfigError(key, "expected an array of 3 numbers");
  Vec3 out;
  for (int i = 0; i < 3; ++i) {
    if (!v[i].is_number()) throw ConfigError(key, "expected an array of 3 numbers");
    out(i) = v[i].get<double>();
    if (!std::isfinite(out(i))) throw ConfigError(key, "components must be finite");
  }
  return out;
}

Vec3 Config::unit_vector(const std::string& key) const {
  const Vec3 v = vec3(key);
  if (std::abs(v.norm() - 1.0) > 1e-9) throw ConfigError(key, "must be a unit vector");
  return v.normalized();
}

std::vector<double> Config::numbers(const std::string& key) const {
  const auto& v = at(key);
  if (v.is_number()) return {number(key)};
  if (!v.is_array() || v.empty()) throw ConfigError(key, "expected a number or a non-empty array");
  std::vector<double> out;
  for (const auto& x : v) {
    if (!x.is_number()) throw ConfigError(key, "array entries must be numbers");
    out.push_back(x.get<double>());
  }
  return out;
}

void Config::reject_unused() const {
  for (const auto& [key, value] : data_.items()) {
    if (!used_.count(key)) throw ConfigError(key, "unknown key for this command");
  }
}

}  // namespace sat::cli
