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

#ifndef SAT_LINEAR_SYSTEM_HPP
#define SAT_LINEAR_SYSTEM_HPP

#include "sat/qmath.hpp"

namespace sat {

/// The three averages read off from one apparatus: the system observable,
/// the assistant observable and their coincidence correlator.
///
/// Both schemes stack them differently when forming the linear system:
/// the spin scheme uses (assistant, system, correlator), the field scheme
/// uses (system, assistant, correlator).
struct MeasurementTriple {
  double sys_avg = 0.0;
  double assist_avg = 0.0;
  double correlator = 0.0;

  Vec3 spin_order() const { return {assist_avg, sys_avg, correlator}; }
  Vec3 jcm_order() const { return {sys_avg, assist_avg, correlator}; }
  static MeasurementTriple from_spin_order(const Vec3& v) { return {v(1), v(0), v(2)}; }
  static MeasurementTriple from_jcm_order(const Vec3& v) { return {v(0), v(1), v(2)}; }
};

/// measured = coeffs * r + offset.
struct LinearSystem {
  Mat3 coeffs = Mat3::Zero();
  Vec3 offset = Vec3::Zero();
  double det = 0.0;
  double condition_number = INFINITY;

  static LinearSystem make(const Mat3& coeffs, const Vec3& offset);

  Vec3 apply(const Vec3& r) const { return coeffs * r + offset; }
  /// coeffs^-1 (measured - offset). No singularity check; callers decide.
  Vec3 invert(const Vec3& measured) const;
};

/// A reconstructed polarization. Shot noise can push |r| past 1, so the
/// raw vector is kept and the excess flagged rather than rejected.
struct Reconstruction {
  Vec3 r = Vec3::Zero();
  bool inconsistent = false;
  double determinant = 0.0;
};

}  // namespace sat

#endif  // SAT_LINEAR_SYSTEM_HPP
