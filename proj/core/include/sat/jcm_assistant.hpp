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

#ifndef SAT_JCM_ASSISTANT_HPP
#define SAT_JCM_ASSISTANT_HPP

// Single-mode field assistant (Jaynes-Cummings coupling).
//
// The two-level system starts in rho = (1 + r.sigma)/2 and the field in
// the coherent state |alpha>. Under
//
//     H = (omega/2) sigma_z + nu a^dag a + g (sigma_+ a + sigma_- a^dag),
//
// with detuning Delta = omega - nu, the averages <sigma_z>, <a^dag a> and
// <sigma_z a^dag a> are affine in r:
//
//     (<sigma_z>, <a^dag a>, <sigma_z a^dag a>)^T = M(t) r + B(t).
//
// All three observables commute with the excitation number, so nothing
// depends on nu once Delta is fixed. Series are written in terms of the
// Poisson weights c_n and the Rabi frequencies
// Omega_n = sqrt(4 (n+1) g^2 + Delta^2).
//
// Units: times in seconds, frequencies in rad/s, the averaging width
// sigma is a variance in s^2.

#include <vector>

#include "sat/linear_system.hpp"
#include "sat/qmath.hpp"

namespace sat::jcm {

struct JcmConfig {
  double detuning = 0.0;  // Delta, rad/s
  double coupling = 0.0;  // g, rad/s
  Complex alpha = 0.0;
  /// Fock truncation; 0 selects default_fock_dim(|alpha|^2).
  int fock_dim = 0;

  double mean_photons() const { return std::norm(alpha); }
  int levels() const { return fock_dim > 0 ? fock_dim : default_fock_dim(mean_photons()); }

  /// ceil(nbar + 10 sqrt(nbar + 1)) + 20.
  static int default_fock_dim(double nbar);
  /// Smallest truncation accepted by validate().
  static int minimum_fock_dim(double nbar);

  /// Throws InvalidArgument for g <= 0, non-finite inputs, or a
  /// truncation that drops more than 1e-12 of the Poisson mass.
  void validate() const;
};

struct JcmDerived {
  std::vector<double> c;       // Poisson weights c_n, n = 0..N
  std::vector<double> omega;   // Omega_n
  std::vector<double> phi_op;  // g^2 n + Delta^2/4, spectrum of the level operator

  static JcmDerived make(const JcmConfig& cfg);
};

/// Truncated coherent state, renormalized on n = 0..dim-1.
CVector coherent_state(Complex alpha, int dim);

/// Closed-form propagator on the truncated space (basis index 2 n + s).
/// The top level couples out of the space, so unitarity holds only away
/// from the truncation edge.
CMatrix jc_propagator(const JcmConfig& cfg, double t, double nu = 0.0);

MeasurementTriple expectation_series(const JcmConfig& cfg, const BlochState& r, double t);

/// Rows ordered (sigma_z, photon number, correlator).
LinearSystem measurement_matrix(const JcmConfig& cfg, double t);

double determinant_series(const JcmConfig& cfg, double t);

/// Determinant averaged over a normalized Gaussian of variance sigma
/// centred at t0.
double averaged_determinant(const JcmConfig& cfg, double t0, double sigma);

/// Throws SingularSchemeError when |det M| is below 1e-12 times the
/// product of row norms.
Reconstruction reconstruct(const MeasurementTriple& m, const JcmConfig& cfg, double t);

/// Brute-force evolution by exponentiating H on fock_dim + 2 levels.
/// Throws NumericalError("increase fock_dim") when the guard levels pick
/// up more than 1e-8 of the population.
MeasurementTriple oracle_evolve(const JcmConfig& cfg, const BlochState& r, double t,
                                double nu = 0.0);

}  // namespace sat::jcm

#endif  // SAT_JCM_ASSISTANT_HPP
