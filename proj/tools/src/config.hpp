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

#ifndef SAT_CLI_CONFIG_HPP
#define SAT_CLI_CONFIG_HPP

// Flat key-value JSON run configuration. Physical quantities carry their
// unit in the key name (t_us, g_rad_per_s, sigma_us2, ...).

#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "sat/qmath.hpp"

namespace sat::cli {

class ConfigError : public std::runtime_error {
 public:
  ConfigError(const std::string& key, const std::string& what)
      : std::runtime_error("config key '" + key + "': " + what), key_(key) {}
  const std::string& key() const noexcept { return key_; }

 private:
  std::string key_;
};

class Config {
 public:
  Config() : data_(nlohmann::json::object()) {}
  explicit Config(nlohmann::json data);

  static Config from_file(const std::string& path);

  bool has(const std::string& key) const;
  void set(const std::string& key, nlohmann::json value);

  double number(const std::string& key) const;
  double number_or(const std::string& key, double fallback) const;
  std::int64_t integer(const std::string& key) const;
  std::int64_t integer_or(const std::string& key, std::int64_t fallback) const;
  std::string text_or(const std::string& key, const std::string& fallback) const;
  bool flag_or(const std::string& key, bool fallback) const;
  Vec3 vec3(const std::string& key) const;
  /// Unit 3-vector; accepts |v| = 1 within 1e-9 and renormalizes.
  Vec3 unit_vector(const std::string& key) const;
  /// A single number or an array of numbers.
  std::vector<double> numbers(const std::string& key) const;

  /// Throws ConfigError for the first key no command asked for.
  void reject_unused() const;

 private:
  const nlohmann::json& at(const std::string& key) const;

  nlohmann::json data_;
  mutable std::set<std::string> used_;
};

}  // namespace sat::cli

#endif  // SAT_CLI_CONFIG_HPP
