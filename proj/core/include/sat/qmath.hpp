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

#ifndef SAT_QMATH_HPP
#define SAT_QMATH_HPP

// Small dense complex linear algebra shared by both assistant schemes.
//
// Tensor ordering convention: every composite space is written
// assistant (x) system, so the system index runs fastest. For the spin
// scheme this makes the joint state block-diagonal in the assistant's
// s_z eigenbasis; for the field scheme the basis index is 2 n + s with
// s = 0 for the system's upper level |+>.

#include <complex>
#include <utility>

#include <Eigen/Dense>

namespace sat {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;

namespace pauli {
CMatrix identity();
CMatrix x();
CMatrix y();
CMatrix z();
/// Raising operator |+><-| in the sigma_z eigenbasis (|+> first).
CMatrix raising();
CMatrix lowering();
/// n . sigma for a real 3-vector n.
CMatrix dot(const Vec3& n);
}  // namespace pauli

/// Polarization vector of a two-level system.
class BlochState {
 public:
  BlochState() = default;

  /// Throws InvalidArgument("unphysical polarization") if |r| exceeds 1
  /// by more than the rejection tolerance.
  explicit BlochState(const Vec3& r);
  BlochState(double x, double y, double z) : BlochState(Vec3(x, y, z)) {}

  const Vec3& vector() const noexcept { return r_; }
  double x() const noexcept { return r_.x(); }
  double y() const noexcept { return r_.y(); }
  double z() const noexcept { return r_.z(); }
  double norm() const noexcept { return r_.norm(); }
  bool is_pure(double tol = 1e-12) const noexcept;

 private:
  Vec3 r_ = Vec3::Zero();
};

/// Truncated single-mode Fock space, levels 0..dim-1.
struct FockSpace {
  int dim = 0;
  CMatrix annihilator;
  CMatrix creator;
  CMatrix number_op;

  static FockSpace make(int dim);
};

struct EigenSystem {
  Eigen::VectorXd values;  // ascending
  CMatrix vectors;         // columns, orthonormal
};

struct ReducedStates {
  CMatrix system;
  CMatrix assistant;
};

double hermiticity_defect(const CMatrix& m);
double unitarity_defect(const CMatrix& u);
bool is_hermitian(const CMatrix& m, double tol);
bool is_unitary(const CMatrix& u, double tol);

CMatrix kron(const CMatrix& a, const CMatrix& b);

/// Throws InvalidArgument("not Hermitian") when max|h - h^dag| > 1e-10.
EigenSystem herm_eig(const CMatrix& h);

/// exp(-i h t) through the spectral decomposition of h.
CMatrix unitary_exp(const CMatrix& h, double t);

CMatrix density_from_bloch(const BlochState& r);

/// r_a = tr[rho sigma_a]. Requires a Hermitian, unit-trace, positive
/// semidefinite 2x2 matrix.
BlochState bloch_from_density(const CMatrix& rho);

/// Partial traces of a joint state on assistant (x) system with a
/// two-level system. Returns (rho_system, rho_assistant).
ReducedStates partial_traces(const CMatrix& omega);

/// Real part of tr[a b] without forming the product.
double trace_product(const CMatrix& a, const CMatrix& b);

}  // namespace sat

#endif  // SAT_QMATH_HPP
