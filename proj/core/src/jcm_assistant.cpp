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

#include "sat/jcm_assistant.hpp"

#include <cmath>
#include <sstream>

#include "sat/errors.hpp"
#include "sat/tolerances.hpp"

namespace sat::jcm {

namespace {

// Compensated accumulator for the long alternating series.
struct KahanSum {
  double sum = 0.0;
  double carry = 0.0;

  void add(double v) {
    const double y = v - carry;
    const double t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  }
};

double poisson_weight(double mean, int n) {
  if (mean == 0.0) return n == 0 ? 1.0 : 0.0;
  return std::exp(-mean + n * std::log(mean) - std::lgamma(n + 1.0));
}

double poisson_mass_below(double mean, int dim) {
  KahanSum s;
  for (int n = 0; n < dim; ++n) s.add(poisson_weight(mean, n));
  return s.sum;
}

// sin(x t) / x with the x -> 0 limit.
double sinc_t(double x, double t) { return x == 0.0 ? t : std::sin(x * t) / x; }

// Last index worth summing: the weights have peaked and dropped below the
// cutoff, or the truncation ends.
bool past_tail(const JcmDerived& d, double mean, int n) {
  return n > mean && d.c[n] < tol::kSeriesCutoff;
}

}  // namespace

int JcmConfig::minimum_fock_dim(double nbar) {
  return static_cast<int>(std::ceil(nbar + 10.0 * std::sqrt(nbar + 1.0)));
}

int JcmConfig::default_fock_dim(double nbar) { return minimum_fock_dim(nbar) + 20; }

void JcmConfig::validate() const {
  if (!std::isfinite(detuning)) throw InvalidArgument("detuning must be finite");
  if (!(std::isfinite(coupling) && coupling > 0.0)) throw InvalidArgument("coupling g must be > 0");
  if (!std::isfinite(alpha.real()) || !std::isfinite(alpha.imag())) {
    throw InvalidArgument("alpha must be finite");
  }
  const double nbar = mean_photons();
  const int need = minimum_fock_dim(nbar);
  const int n = levels();
  if (n < need || 1.0 - poisson_mass_below(nbar, n) >= tol::kPoissonTail) {
    std::ostringstream os;
    os << "fock_dim " << n << " too small for |alpha|^2 = " << nbar << "; need at least "
       << std::max(need, n + 1);
    throw InvalidArgument(os.str());
  }
}

JcmDerived JcmDerived::make(const JcmConfig& cfg) {
  const int n_levels = cfg.levels();
  const double nbar = cfg.mean_photons();
  const double g2 = cfg.coupling * cfg.coupling;
  const double d2 = cfg.detuning * cfg.detuning;
  JcmDerived d;
  d.c.resize(n_levels + 1);
  d.omega.resize(n_levels + 1);
  d.phi_op.resize(n_levels + 1);
  for (int n = 0; n <= n_levels; ++n) {
    d.c[n] = poisson_weight(nbar, n);
    d.omega[n] = std::sqrt(4.0 * (n + 1) * g2 + d2);
    d.phi_op[n] = g2 * n + d2 / 4.0;
  }
  return d;
}

CVector coherent_state(Complex alpha, int dim) {
  if (dim < 1) throw InvalidArgument("coherent state needs at least one level");
  const double nbar = std::norm(alpha);
  CVector psi(dim);
  const double arg = std::arg(alpha);
  for (int n = 0; n < dim; ++n) {
    psi(n) = std::polar(std::sqrt(poisson_weight(nbar, n)), n * arg);
  }
  const double norm2 = psi.squaredNorm();
  if (1.0 - norm2 >= tol::kPoissonTail) {
    std::ostringstream os;
    os << "truncation " << dim << " too small for |alpha|^2 = " << nbar << "; need at least "
       << JcmConfig::minimum_fock_dim(nbar);
    throw InvalidArgument(os.str());
  }
  return psi / std::sqrt(norm2);
}

CMatrix jc_propagator(const JcmConfig& cfg, double t, double nu) {
  cfg.validate();
  const JcmDerived d = JcmDerived::make(cfg);
  const int n_levels = cfg.levels();
  const double delta = cfg.detuning;
  const double g = cfg.coupling;
  const Complex i(0.0, 1.0);

  CMatrix u = CMatrix::Zero(2 * n_levels, 2 * n_levels);
  for (int n = 0; n < n_levels; ++n) {
    const int up = 2 * n;
    const int down = 2 * n + 1;
    const double half = d.omega[n] * t / 2;
    const Complex phase_up = std::exp(-i * nu * t * (n + 0.5));
    const Complex phase_down = std::exp(-i * nu * t * (n - 0.5));

    if (n + 1 == n_levels) {
      // Its partner |N, -> is outside the basis: an isolated level.
      u(up, up) = phase_up * std::exp(-i * delta * t / 2.0);
    } else {
      u(up, up) = phase_up * (std::cos(half) - i * delta * std::sin(half) / d.omega[n]);
      const Complex flip = phase_up * (-i * 2.0 * g * std::sqrt(n + 1.0) * std::sin(half) / d.omega[n]);
      u(up, 2 * (n + 1) + 1) = flip;
      u(2 * (n + 1) + 1, up) = flip;
    }
    const double root = std::sqrt(d.phi_op[n]);
    u(down, down) = phase_down * (std::cos(root * t) + i * (delta / 2) * sinc_t(root, t));
  }
  return u;
}

LinearSystem measurement_matrix(const JcmConfig& cfg, double t) {
  cfg.validate();
  const JcmDerived d = JcmDerived::make(cfg);
  const double nbar = cfg.mean_photons();
  const double g = cfg.coupling;
  const double g2 = g * g;
  const double delta = cfg.detuning;

  KahanSum p_minus, p_plus, q_minus, q_plus, x, y, xw, yw;
  for (int n = 0; n < cfg.levels(); ++n) {
    if (past_tail(d, nbar, n)) break;
    const double om = d.omega[n];
    const double s = std::sin(om * t / 2);
    const double s2 = s * s / (om * om / 4);
    const Complex chi = cfg.alpha * Complex(std::cos(om * t / 2), delta * s / om);
    const double diff = (n + 1) * (d.c[n + 1] - d.c[n]) * s2;
    const double sum = (n + 1) * (d.c[n + 1] + d.c[n]) * s2;
    const double w = 2.0 * n + 1.0;
    p_minus.add(diff);
    p_plus.add(sum);
    q_minus.add(w * diff);
    q_plus.add(w * sum);
    const double k = d.c[n] * s / om;
    x.add(k * chi.imag());
    y.add(k * chi.real());
    xw.add(w * k * chi.imag());
    yw.add(w * k * chi.real());
  }

  Mat3 m;
  m << 4 * g * x.sum, 4 * g * y.sum, 1.0 - g2 * p_plus.sum,
      -2 * g * x.sum, -2 * g * y.sum, 0.5 * g2 * p_plus.sum,
      2 * g * xw.sum, 2 * g * yw.sum, nbar - 0.5 * g2 * q_plus.sum;
  const Vec3 b(g2 * p_minus.sum, nbar - 0.5 * g2 * p_minus.sum, 0.5 * g2 * q_minus.sum);
  return LinearSystem::make(m, b);
}

MeasurementTriple expectation_series(const JcmConfig& cfg, const BlochState& r, double t) {
  return MeasurementTriple::from_jcm_order(measurement_matrix(cfg, t).apply(r.vector()));
}

namespace {

// Sum over n < m of c_n c_m (m - n) [f(n, m) - f(m, n)]; the n = m
// terms vanish and the summand is symmetric, so the full double sum is
// twice this.
template <typename Kernel>
double pair_sum(const JcmConfig& cfg, const JcmDerived& d, Kernel f) {
  const double nbar = cfg.mean_photons();
  KahanSum s;
  for (int n = 0; n < cfg.levels(); ++n) {
    if (past_tail(d, nbar, n)) break;
    for (int m = n + 1; m < cfg.levels(); ++m) {
      if (past_tail(d, nbar, m)) break;
      s.add(d.c[n] * d.c[m] * (n - m) * (f(n, m) - f(m, n)));
    }
  }
  return 2.0 * s.sum;
}

}  // namespace

double determinant_series(const JcmConfig& cfg, double t) {
  cfg.validate();
  const JcmDerived d = JcmDerived::make(cfg);
  const double g2 = cfg.coupling * cfg.coupling;
  auto f = [&](int n, int m) {
    const double on = d.omega[n], om = d.omega[m];
    const double s = std::sin(on * t / 2);
    return s * s * std::sin(om * t) / (on * on * om);
  };
  return 2.0 * cfg.detuning * g2 * cfg.mean_photons() * pair_sum(cfg, d, f);
}

double averaged_determinant(const JcmConfig& cfg, double t0, double sigma) {
  cfg.validate();
  if (!(sigma >= 0.0) || !std::isfinite(sigma)) throw InvalidArgument("sigma must be >= 0");
  const JcmDerived d = JcmDerived::make(cfg);
  const double g2 = cfg.coupling * cfg.coupling;
  auto damp = [&](double w) { return std::exp(-sigma * w * w / 2); };
  auto f = [&](int n, int m) {
    const double on = d.omega[n], om = d.omega[m];
    return (2 * damp(om) * std::sin(t0 * om) - damp(om + on) * std::sin(t0 * (om + on)) -
            damp(om - on) * std::sin(t0 * (om - on))) /
           (4 * on * on * om);
  };
  return 2.0 * cfg.detuning * g2 * cfg.mean_photons() * pair_sum(cfg, d, f);
}

Reconstruction reconstruct(const MeasurementTriple& m, const JcmConfig& cfg, double t) {
  const LinearSystem sys = measurement_matrix(cfg, t);
  double scale = 1.0;
  for (int i = 0; i < 3; ++i) scale *= sys.coeffs.row(i).norm();
  if (!(std::abs(sys.det) > tol::kJcmRelativeSingular * scale)) {
    std::ostringstream os;
    os << "singular scheme at this (Delta, t): D = " << sys.det;
    throw SingularSchemeError(os.str(), sys.det);
  }
  Reconstruction out;
  out.r = sys.invert(m.jcm_order());
  out.inconsistent = out.r.norm() > 1.0 + tol::kJcmInconsistent;
  out.determinant = sys.det;
  return out;
}

MeasurementTriple oracle_evolve(const JcmConfig& cfg, const BlochState& r, double t, double nu) {
  cfg.validate();
  const int dim = cfg.levels() + tol::kGuardLevels;
  const FockSpace fock = FockSpace::make(dim);
  const CMatrix id_field = CMatrix::Identity(dim, dim);
  const double omega = nu + cfg.detuning;

  const CMatrix h = kron(id_field, (omega / 2) * pauli::z()) + kron(nu * fock.number_op, pauli::identity()) +
                    cfg.coupling * (kron(fock.annihilator, pauli::raising()) +
                                    kron(fock.creator, pauli::lowering()));
  const CMatrix u = unitary_exp(h, t);

  const CVector field = coherent_state(cfg.alpha, dim);
  const CMatrix rho0 = kron(field * field.adjoint(), density_from_bloch(r));
  const CMatrix rho = u * rho0 * u.adjoint();

  double leak = 0.0;
  for (int n = dim - tol::kGuardLevels; n < dim; ++n) {
    leak += rho(2 * n, 2 * n).real() + rho(2 * n + 1, 2 * n + 1).real();
  }
  if (leak > tol::kLeakage) {
    std::ostringstream os;
    os << "truncation leakage " << leak << "; increase fock_dim";
    throw NumericalError(os.str());
  }

  MeasurementTriple out;
  KahanSum sz, photons, corr;
  for (int n = 0; n < dim; ++n) {
    const double up = rho(2 * n, 2 * n).real();
    const double down = rho(2 * n + 1, 2 * n + 1).real();
    sz.add(up - down);
    photons.add(n * (up + down));
    corr.add(n * (up - down));
  }
  out.sys_avg = sz.sum;
  out.assist_avg = photons.sum;
  out.correlator = corr.sum;
  return out;
}

}  // namespace sat::jcm
