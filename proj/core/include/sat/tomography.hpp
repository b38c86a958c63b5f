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

#ifndef SAT_TOMOGRAPHY_HPP
#define SAT_TOMOGRAPHY_HPP

// Scheme-agnostic experiment engine: exact joint outcome distributions,
// finite-shot sampling, round-trip reconstruction and parameter sweeps.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "sat/jcm_assistant.hpp"
#include "sat/linear_system.hpp"
#include "sat/spin_assistant.hpp"

namespace sat::tomo {

struct SpinScheme {
  CMatrix unitary;
  spin::AssistantPurity purity{0.0};
  /// When present the closed-form system is used and unitary must equal
  /// build_unitary(*params).
  std::optional<spin::SpinSchemeParams> params;

  static SpinScheme from_params(const spin::SpinSchemeParams& p, double lambda);
  static SpinScheme from_unitary(const CMatrix& u, double lambda);
};

struct JcmScheme {
  jcm::JcmConfig config;
  double t = 0.0;      // s
  double sigma = 0.0;  // s^2, only used by averaged sweeps
};

using Scheme = std::variant<SpinScheme, JcmScheme>;

/// Joint readout cell. system is the sigma_z eigenvalue (+1/-1);
/// assistant is the s_z eigenvalue for the spin scheme and the photon
/// count for the field scheme.
struct Outcome {
  int system = 0;
  int assistant = 0;
  auto operator<=>(const Outcome&) const = default;
};

using Distribution = std::map<Outcome, double>;

Distribution joint_distribution(const Scheme& s, const BlochState& r);

/// Averages (sigma_z, assistant, product) of a distribution.
MeasurementTriple moments(const Distribution& p);

struct ShotRecord {
  std::int64_t n_shots = 0;
  std::map<Outcome, std::int64_t> joint_counts;
  std::uint64_t seed = 0;

  MeasurementTriple averages() const;
};

/// Multinomial draw by sequential binomials over the cells in map order.
ShotRecord sample(const Scheme& s, const BlochState& r, std::int64_t n_shots, std::uint64_t seed);

struct RoundTripReport {
  BlochState planted;
  Vec3 recovered = Vec3::Zero();
  Vec3 abs_error = Vec3::Zero();
  double determinant = 0.0;
  double condition_number = 0.0;
  std::optional<std::int64_t> n_shots;  // empty for exact mode
  std::optional<Vec3> std_error;        // shot mode only
  bool inconsistent = false;
};

/// Exact mode when shots is empty. Propagates SingularSchemeError.
RoundTripReport roundtrip(const Scheme& s, const BlochState& r,
                          std::optional<std::int64_t> shots = std::nullopt,
                          std::uint64_t seed = 0);

/// Independent shot-mode round trips with seeds seed0 + i, run in
/// parallel and returned in seed order.
std::vector<RoundTripReport> roundtrip_batch(const Scheme& s, const BlochState& r,
                                             std::int64_t shots, std::uint64_t seed0,
                                             int repetitions);

struct SweepRow {
  double value = 0.0;
  double determinant = 0.0;
  double condition_number = 0.0;
};

/// Valid axes: t, delta, alpha, lambda, theta, phi, psi, t0, sigma.
/// Spin determinants follow the closed-form normalization; t0 and sigma
/// sweep the Gaussian-averaged field determinant.
std::vector<SweepRow> sweep(const Scheme& s, const std::string& axis,
                            const std::vector<double>& grid);

const std::vector<std::string>& sweep_axes();

}  // namespace sat::tomo

#endif  // SAT_TOMOGRAPHY_HPP
