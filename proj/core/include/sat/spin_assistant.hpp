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

#ifndef SAT_SPIN_ASSISTANT_HPP
#define SAT_SPIN_ASSISTANT_HPP

// Two-level assistant scheme.
//
// The system S starts in rho = (1 + r.sigma)/2, the assistant A in
// R = (1 + lambda s_z)/2. A 4x4 unitary acts on the pair (assistant (x)
// system ordering), after which s_z, sigma_z and the coincidence
// correlator s_z sigma_z are read out. The three averages are affine in
// r:
//
//     (<s_z>, <sigma_z>, <s_z sigma_z>)^T = C r + F.
//
// Unitaries are handled in the canonical form
//
//     U = diag(V, W) [[K, K'], [K', -K]] diag(X, X^dag),
//     K  = cos th cos ph + sin th sin ph (chi.sigma),
//     K' = sin th cos ph - cos th sin ph (chi.sigma),
//     X  = cos psi + i sin psi (xi.sigma),
//     V^dag sigma_z V = eta.sigma,  W^dag sigma_z W = zeta.sigma,
//
// with 0 < ph <= th <= pi/2 - ph and 0 <= psi <= pi.
//
// Determinant normalization: the closed-form scheme determinant D used
// throughout this module (the quantity whose optimum is 1/32 for a fully
// mixed assistant) equals -det(C)/4. For the Heisenberg family it equals
// +det(P)/4 with P the map generated by exp(-iH).

#include <cstdint>
#include <optional>

#include "sat/linear_system.hpp"
#include "sat/qmath.hpp"

namespace sat::spin {

inline constexpr double kDeterminantScale = -0.25;
inline constexpr double kHamiltonianDeterminantScale = 0.25;

struct SpinSchemeParams {
  double theta = 0.0;
  double phi = 0.0;
  double psi = 0.0;
  Vec3 xi = Vec3::UnitX();
  Vec3 chi = Vec3::UnitY();
  Vec3 eta = Vec3::UnitZ();
  Vec3 zeta = Vec3::UnitZ();

  /// Throws InvalidArgument naming the first violated constraint.
  void validate() const;
  /// Components (xi.v, chi.v, (xi x chi).v).
  Vec3 frame_components(const Vec3& v) const;
};

class AssistantPurity {
 public:
  /// Throws InvalidArgument unless 0 <= lambda <= 1.
  explicit AssistantPurity(double lambda);
  double value() const noexcept { return lambda_; }

 private:
  double lambda_;
};

/// Output of decompose_unitary. assemble() reproduces the input.
struct CanonicalForm {
  CMatrix V, W, K, K_prime, X;
  double theta = 0.0;
  double phi = 0.0;
  Vec3 eta = Vec3::Zero();
  Vec3 zeta = Vec3::Zero();

  CMatrix assemble() const;
};

struct HeisenbergParams {
  double jx = 0.0, jy = 0.0, jz = 0.0;
  double hx = 0.0, hy = 0.0, hz = 0.0;
};

struct HeisenbergSpectrum {
  CMatrix hamiltonian;
  Eigen::VectorXd values;  // ascending
  CMatrix vectors;
  bool closed_form = false;
};

struct OptimizerOptions {
  int budget = 20000;
  std::uint64_t seed = 0;
  int restarts = 16;
  /// Pin psi instead of searching over it.
  std::optional<double> fixed_psi;
};

struct OptimizationResult {
  SpinSchemeParams params;
  double determinant = 0.0;  // closed-form D, signed
  int evaluations = 0;
};

/// Assistant-space and system-space Pauli operators on the 4-dim space.
CMatrix assistant_op(const CMatrix& m);
CMatrix system_op(const CMatrix& m);

/// A 2x2 unitary V with V^dag sigma_z V = n.sigma: the rotation about
/// z x n by arccos(n_z); for n = -z a pi rotation about x.
CMatrix rotation_onto(const Vec3& n);

CMatrix build_unitary(const SpinSchemeParams& p);

/// Throws InvalidArgument("degenerate polar block") when either left
/// block has a singular value below 1e-6.
CanonicalForm decompose_unitary(const CMatrix& u);

MeasurementTriple simulate_expectations(const CMatrix& u, const BlochState& r,
                                        AssistantPurity lambda);

/// C and F by probing direct evolution with r = 0 and the unit vectors.
LinearSystem linear_map_from_unitary(const CMatrix& u, AssistantPurity lambda);

/// Closed-form C and F.
LinearSystem coefficient_system(const SpinSchemeParams& p, AssistantPurity lambda);

double determinant_closed_form(const SpinSchemeParams& p, AssistantPurity lambda);

/// r = C^-1 (m - F). Throws SingularSchemeError when |det C| <= 1e-9.
Reconstruction reconstruct(const MeasurementTriple& m, const SpinSchemeParams& p,
                           AssistantPurity lambda);
/// Same inversion for a scheme given by an arbitrary unitary.
Reconstruction reconstruct(const MeasurementTriple& m, const CMatrix& u, AssistantPurity lambda);

OptimizationResult optimize_determinant(AssistantPurity lambda, const OptimizerOptions& opts = {});

/// h_x (sigma_x + s_x) + J_x (sigma_x s_x + sigma_z s_z) + J_y sigma_y s_y.
/// Closed-form spectrum when h_x != 0, numeric otherwise.
HeisenbergSpectrum heisenberg_hamiltonian(const HeisenbergParams& h);

/// sum_i h_i (sigma_i + s_i) + J_i sigma_i s_i with all six parameters.
CMatrix heisenberg_general(const HeisenbergParams& h);

/// (J_x - J_y)^2 h_x^2 sin(4 J_x) sin^4(beta) / (2 beta^4); 0 when beta = 0.
double hamiltonian_determinant(const HeisenbergParams& h);

/// (1/sqrt2) sigma_x s_x + (s_y sin a + s_z)/2, sin a = sqrt((1 - 1/sqrt3)/2).
CMatrix pure_hamiltonian();

/// J sigma_x s_x + field.s
CMatrix ising_field_hamiltonian(double coupling, const Vec3& field);

namespace presets {
/// theta = phi = pi/8, psi = pi/4, eta = zeta = (1,0,1)/sqrt2. D = 1/32 at lambda = 0.
SpinSchemeParams disordered_optimum();
/// theta = pi/4, sin^2(2 phi) = 1/3, psi = pi/4, eta = (1,0,1)/sqrt2,
/// zeta = (-1,0,1)/sqrt2. |D| = 1/(12 sqrt3) at lambda = 1.
SpinSchemeParams pure_optimum();
/// J_x = pi/8, J_y = pi(1 - sqrt8)/8, h_x = pi/(2 sqrt8).
HeisenbergParams heisenberg_optimum();
}  // namespace presets

}  // namespace sat::spin

#endif  // SAT_SPIN_ASSISTANT_HPP
