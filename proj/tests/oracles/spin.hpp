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

#ifndef SAT_TESTS_ORACLES_SPIN_HPP
#define SAT_TESTS_ORACLES_SPIN_HPP

// Brute-force two-spin evolution written from scratch: own Pauli
// matrices, own construction of V and W (Euler angles rather than the
// library's axis-angle rotation), own traces.

#include <array>
#include <cmath>
#include <complex>

#include <Eigen/Dense>

namespace oracle {

using C = std::complex<double>;
using M2 = Eigen::Matrix2cd;
using M4 = Eigen::Matrix4cd;

inline M2 px() { M2 m; m << 0, 1, 1, 0; return m; }
inline M2 py() { M2 m; m << 0, C(0, -1), C(0, 1), 0; return m; }
inline M2 pz() { M2 m; m << 1, 0, 0, -1; return m; }
inline M2 dot(const Eigen::Vector3d& n) { return n.x() * px() + n.y() * py() + n.z() * pz(); }

/// Assistant index is the block index.
inline M4 tensor(const M2& assistant, const M2& system) {
  M4 m;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) m.block<2, 2>(2 * a, 2 * b) = assistant(a, b) * system;
  return m;
}

/// Some V with V^dag sigma_z V = n.sigma.
inline M2 v_for(const Eigen::Vector3d& n) {
  const double pol = std::acos(std::max(-1.0, std::min(1.0, n.z())));
  const double az = std::atan2(n.y(), n.x());
  auto rot = [](const M2& gen, double angle) {
    return M2(std::cos(angle / 2) * M2::Identity() - C(0, std::sin(angle / 2)) * gen);
  };
  const M2 vdag = rot(pz(), az) * rot(py(), pol);
  return vdag.adjoint();
}

struct SpinParams {
  double theta, phi, psi;
  Eigen::Vector3d xi, chi, eta, zeta;
};

inline M4 unitary(const SpinParams& p) {
  const M2 id = M2::Identity();
  const M2 k = std::cos(p.theta) * std::cos(p.phi) * id + std::sin(p.theta) * std::sin(p.phi) * dot(p.chi);
  const M2 kp = std::sin(p.theta) * std::cos(p.phi) * id - std::cos(p.theta) * std::sin(p.phi) * dot(p.chi);
  const M2 x = std::cos(p.psi) * id + C(0, std::sin(p.psi)) * dot(p.xi);
  M4 left = M4::Zero(), mid, right = M4::Zero();
  left.block<2, 2>(0, 0) = v_for(p.eta);
  left.block<2, 2>(2, 2) = v_for(p.zeta);
  mid << k, kp, kp, -k;
  right.block<2, 2>(0, 0) = x;
  right.block<2, 2>(2, 2) = x.adjoint();
  return left * mid * right;
}

/// (<s_z>, <sigma_z>, <s_z sigma_z>) after evolving with u.
inline Eigen::Vector3d averages(const M4& u, const Eigen::Vector3d& r, double lambda) {
  const M2 rho = 0.5 * (M2::Identity() + dot(r));
  const M2 big_r = 0.5 * (M2::Identity() + lambda * pz());
  const M4 omega = u * tensor(big_r, rho) * u.adjoint();
  return {(omega * tensor(pz(), M2::Identity())).trace().real(),
          (omega * tensor(M2::Identity(), pz())).trace().real(),
          (omega * tensor(pz(), pz())).trace().real()};
}

struct AffineMap {
  Eigen::Matrix3d coeffs;
  Eigen::Vector3d offset;
};

/// Linear map probed with the origin and the three basis vectors.
inline AffineMap probe(const M4& u, double lambda) {
  AffineMap m;
  m.offset = averages(u, Eigen::Vector3d::Zero(), lambda);
  for (int i = 0; i < 3; ++i) m.coeffs.col(i) = averages(u, Eigen::Vector3d::Unit(i), lambda) - m.offset;
  return m;
}

}  // namespace oracle

#endif  // SAT_TESTS_ORACLES_SPIN_HPP
