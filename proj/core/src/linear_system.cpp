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

#include "sat/linear_system.hpp"

#include <Eigen/SVD>

namespace sat {

LinearSystem LinearSystem::make(const Mat3& coeffs, const Vec3& offset) {
  LinearSystem s;
  s.coeffs = coeffs;
  s.offset = offset;
  s.det = coeffs.determinant();
  const Eigen::JacobiSVD<Mat3> svd(coeffs);
  const Vec3 sv = svd.singularValues();
  s.condition_number = sv(2) > 0.0 ? sv(0) / sv(2) : INFINITY;
  return s;
}

Vec3 LinearSystem::invert(const Vec3& measured) const {
  return coeffs.fullPivLu().solve(measured - offset);
}

}  // namespace sat
