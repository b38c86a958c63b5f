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

#ifndef SAT_TESTS_ORACLES_JCM_HPP
#define SAT_TESTS_ORACLES_JCM_HPP

// Atom-field evolution by exponentiating the full truncated Hamiltonian
//   H = (omega/2) sigma_z + nu a^dag a + g (sigma_+ a + sigma_- a^dag)
// with Taylor scaling-and-squaring. Basis index is 2 n + s, s = 0 for
// the upper atomic level.

#include <cmath>
#include <complex>

#include <Eigen/Dense>

#include "expm.hpp"

namespace oracle {

struct FieldRun {
  double detuning;
  double coupling;
  std::complex<double> alpha;
  int levels;
  double nu = 0.0;
};

struct FieldAverages {
  double sigma_z;
  double photons;
  double correlator;
  double edge_population;  // weight left in the top two levels
};

inline FieldAverages field_evolve(const FieldRun& run, const Eigen::Vector3d& r, double t) {
  using C = std::complex<double>;
  const int n_levels = run.levels;
  const int dim = 2 * n_levels;
  const double omega = run.nu + run.detuning;

  Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(dim, dim);
  for (int n = 0; n < n_levels; ++n) {
    h(2 * n, 2 * n) = omega / 2 + run.nu * n;
    h(2 * n + 1, 2 * n + 1) = -omega / 2 + run.nu * n;
    if (n + 1 < n_levels) {
      // sigma_+ a : |n+1, -> -> |n, +>
      const double amp = run.coupling * std::sqrt(n + 1.0);
      h(2 * n, 2 * (n + 1) + 1) = amp;
      h(2 * (n + 1) + 1, 2 * n) = amp;
    }
  }

  Eigen::VectorXcd field(n_levels);
  const double nbar = std::norm(run.alpha);
  for (int n = 0; n < n_levels; ++n) {
    double mag = std::exp(-nbar / 2);
    for (int k = 1; k <= n; ++k) mag *= std::abs(run.alpha) / std::sqrt(static_cast<double>(k));
    field(n) = std::polar(mag, n * std::arg(run.alpha));
  }
  field.normalize();

  Eigen::Matrix2cd rho;
  rho << 0.5 * (1 + r.z()), 0.5 * C(r.x(), -r.y()), 0.5 * C(r.x(), r.y()), 0.5 * (1 - r.z());

  Eigen::MatrixXcd d0(dim, dim);
  for (int n = 0; n < n_levels; ++n)
    for (int m = 0; m < n_levels; ++m)
      d0.block<2, 2>(2 * n, 2 * m) = field(n) * std::conj(field(m)) * rho;

  const Eigen::MatrixXcd u = propagator(h, t);
  const Eigen::MatrixXcd d = u * d0 * u.adjoint();

  FieldAverages out{0, 0, 0, 0};
  for (int n = 0; n < n_levels; ++n) {
    const double up = d(2 * n, 2 * n).real();
    const double down = d(2 * n + 1, 2 * n + 1).real();
    out.sigma_z += up - down;
    out.photons += n * (up + down);
    out.correlator += n * (up - down);
    if (n >= n_levels - 2) out.edge_population += up + down;
  }
  return out;
}

/// Affine map (rows sigma_z, photons, correlator) by probing.
inline Eigen::Matrix3d field_map(const FieldRun& run, double t) {
  auto vec = [&](const Eigen::Vector3d& r) {
    const FieldAverages a = field_evolve(run, r, t);
    return Eigen::Vector3d(a.sigma_z, a.photons, a.correlator);
  };
  const Eigen::Vector3d base = vec(Eigen::Vector3d::Zero());
  Eigen::Matrix3d m;
  for (int i = 0; i < 3; ++i) m.col(i) = vec(Eigen::Vector3d::Unit(i)) - base;
  return m;
}

}  // namespace oracle

#endif  // SAT_TESTS_ORACLES_JCM_HPP
