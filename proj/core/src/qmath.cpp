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

#include "sat/qmath.hpp"

#include <cmath>
#include <sstream>

#include <Eigen/Eigenvalues>

#include "sat/errors.hpp"
#include "sat/tolerances.hpp"

namespace sat {

namespace pauli {

CMatrix identity() { return CMatrix::Identity(2, 2); }

CMatrix x() {
  CMatrix m(2, 2);
  m << 0.0, 1.0, 1.0, 0.0;
  return m;
}

CMatrix y() {
  CMatrix m(2, 2);
  m << 0.0, Complex(0.0, -1.0), Complex(0.0, 1.0), 0.0;
  return m;
}

CMatrix z() {
  CMatrix m(2, 2);
  m << 1.0, 0.0, 0.0, -1.0;
  return m;
}

CMatrix raising() {
  CMatrix m = CMatrix::Zero(2, 2);
  m(0, 1) = 1.0;
  return m;
}

CMatrix lowering() { return raising().adjoint(); }

CMatrix dot(const Vec3& n) { return n.x() * x() + n.y() * y() + n.z() * z(); }

}  // namespace pauli

BlochState::BlochState(const Vec3& r) : r_(r) {
  if (!r.allFinite() || r.norm() > 1.0 + tol::kPurityReject) {
    std::ostringstream os;
    os << "unphysical polarization: |r| = " << r.norm();
    throw InvalidArgument(os.str());
  }
}

bool BlochState::is_pure(double tol) const noexcept {
  return std::abs(r_.norm() - 1.0) <= tol;
}

FockSpace FockSpace::make(int dim) {
  if (dim < 1) throw InvalidArgument("Fock dimension must be positive");
  FockSpace f;
  f.dim = dim;
  f.annihilator = CMatrix::Zero(dim, dim);
  for (int n = 1; n < dim; ++n) f.annihilator(n - 1, n) = std::sqrt(static_cast<double>(n));
  f.creator = f.annihilator.adjoint();
  f.number_op = f.creator * f.annihilator;
  return f;
}

double hermiticity_defect(const CMatrix& m) {
  if (m.rows() != m.cols()) return INFINITY;
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

double unitarity_defect(const CMatrix& u) {
  if (u.rows() != u.cols()) return INFINITY;
  return (u.adjoint() * u - CMatrix::Identity(u.rows(), u.cols())).cwiseAbs().maxCoeff();
}

bool is_hermitian(const CMatrix& m, double tol) { return hermiticity_defect(m) <= tol; }

bool is_unitary(const CMatrix& u, double tol) { return unitarity_defect(u) <= tol; }

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

EigenSystem herm_eig(const CMatrix& h) {
  if (!is_hermitian(h, tol::kHermitian)) throw InvalidArgument("not Hermitian");
  // Symmetrize so rounding in the strictly lower triangle cannot leak in.
  const CMatrix sym = 0.5 * (h + h.adjoint());
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(sym);
  if (solver.info() != Eigen::Success) throw NumericalError("Hermitian eigensolver failed");
  return {solver.eigenvalues(), solver.eigenvectors()};
}

CMatrix unitary_exp(const CMatrix& h, double t) {
  const EigenSystem es = herm_eig(h);
  CVector phases(es.values.size());
  for (Eigen::Index k = 0; k < es.values.size(); ++k) {
    phases(k) = std::polar(1.0, -es.values(k) * t);
  }
  return es.vectors * phases.asDiagonal() * es.vectors.adjoint();
}

CMatrix density_from_bloch(const BlochState& r) {
  return 0.5 * (pauli::identity() + pauli::dot(r.vector()));
}

BlochState bloch_from_density(const CMatrix& rho) {
  if (rho.rows() != 2 || rho.cols() != 2) throw InvalidArgument("density matrix must be 2x2");
  if (!is_hermitian(rho, tol::kHermitian)) throw InvalidArgument("not Hermitian");
  if (std::abs(rho.trace() - 1.0) > tol::kTrace) throw InvalidArgument("density matrix trace is not 1");
  const EigenSystem es = herm_eig(rho);
  if (es.values.minCoeff() < tol::kEigenvalueFloor) {
    throw InvalidArgument("density matrix is not positive semidefinite");
  }
  const Vec3 r(trace_product(rho, pauli::x()), trace_product(rho, pauli::y()),
               trace_product(rho, pauli::z()));
  return BlochState(r);
}

ReducedStates partial_traces(const CMatrix& omega) {
  const Eigen::Index dim = omega.rows();
  if (omega.cols() != dim) throw InvalidArgument("joint state must be square");
  if (dim == 0 || dim % 2 != 0) {
    throw InvalidArgument("joint state dimension is not a multiple of 2");
  }
  if (!is_hermitian(omega, tol::kHermitian)) throw InvalidArgument("not Hermitian");
  if (std::abs(omega.trace() - 1.0) > tol::kTrace) throw InvalidArgument("joint state trace is not 1");

  const Eigen::Index na = dim / 2;
  ReducedStates out{CMatrix::Zero(2, 2), CMatrix::Zero(na, na)};
  for (Eigen::Index a = 0; a < na; ++a) {
    out.system += omega.block(2 * a, 2 * a, 2, 2);
    for (Eigen::Index b = 0; b < na; ++b) {
      out.assistant(a, b) = omega(2 * a, 2 * b) + omega(2 * a + 1, 2 * b + 1);
    }
  }
  return out;
}

double trace_product(const CMatrix& a, const CMatrix& b) {
  return (a.array() * b.transpose().array()).sum().real();
}

}  // namespace sat
