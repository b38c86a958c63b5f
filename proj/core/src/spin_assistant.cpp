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

#include "sat/spin_assistant.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <numbers>
#include <random>
#include <sstream>
#include <vector>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "sat/errors.hpp"
#include "sat/nelder_mead.hpp"
#include "sat/tolerances.hpp"

namespace sat::spin {

namespace {

using std::numbers::pi;

constexpr double kAngleSlack = 1e-12;

// Block helpers for the assistant (x) system layout: the assistant index
// selects the 2x2 block row/column.
CMatrix block_diag(const CMatrix& top, const CMatrix& bottom) {
  CMatrix m = CMatrix::Zero(4, 4);
  m.topLeftCorner(2, 2) = top;
  m.bottomRightCorner(2, 2) = bottom;
  return m;
}

// Polar factors m = v k through the SVD, which keeps the accuracy of the
// smallest singular value.
std::pair<CMatrix, CMatrix> polar(const CMatrix& m) {
  const Eigen::JacobiSVD<CMatrix> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const CMatrix& right = svd.matrixV();
  return {svd.matrixU() * right.adjoint(),
          right * svd.singularValues().cast<Complex>().asDiagonal() * right.adjoint()};
}


// Principal square root of a unitary matrix (eigenphases halved within
// (-pi/2, pi/2]).
CMatrix unitary_sqrt(const CMatrix& u) {
  Eigen::ComplexSchur<CMatrix> schur(u);
  const CMatrix& t = schur.matrixT();
  CMatrix d = CMatrix::Zero(u.rows(), u.cols());
  for (Eigen::Index i = 0; i < u.rows(); ++i) d(i, i) = std::sqrt(t(i, i));
  return schur.matrixU() * d * schur.matrixU().adjoint();
}

Vec3 bloch_of_operator(const CMatrix& op) {
  return {0.5 * trace_product(op, pauli::x()), 0.5 * trace_product(op, pauli::y()),
          0.5 * trace_product(op, pauli::z())};
}

Vec3 sphere_point(double polar, double azimuth) {
  return {std::sin(polar) * std::cos(azimuth), std::sin(polar) * std::sin(azimuth),
          std::cos(polar)};
}

void require(bool ok, const char* what) {
  if (!ok) throw InvalidArgument(std::string("invalid spin scheme parameters: ") + what);
}

}  // namespace

void SpinSchemeParams::validate() const {
  require(std::isfinite(theta) && std::isfinite(phi) && std::isfinite(psi), "angles must be finite");
  require(std::abs(xi.norm() - 1.0) <= 1e-12, "xi must be a unit vector");
  require(std::abs(chi.norm() - 1.0) <= 1e-12, "chi must be a unit vector");
  require(std::abs(eta.norm() - 1.0) <= 1e-12, "eta must be a unit vector");
  require(std::abs(zeta.norm() - 1.0) <= 1e-12, "zeta must be a unit vector");
  require(std::abs(xi.dot(chi)) <= 1e-12, "xi must be perpendicular to chi");
  require(phi > 0.0, "0 < phi");
  require(phi <= theta + kAngleSlack, "phi <= theta");
  require(theta <= pi / 2 - phi + kAngleSlack, "theta <= pi/2 - phi");
  require(psi >= -kAngleSlack && psi <= pi + kAngleSlack, "0 <= psi <= pi");
}

Vec3 SpinSchemeParams::frame_components(const Vec3& v) const {
  return {xi.dot(v), chi.dot(v), xi.cross(chi).dot(v)};
}

AssistantPurity::AssistantPurity(double lambda) : lambda_(lambda) {
  if (!(lambda >= 0.0 && lambda <= 1.0)) {
    std::ostringstream os;
    os << "assistant purity lambda must lie in [0, 1], got " << lambda;
    throw InvalidArgument(os.str());
  }
}

CMatrix CanonicalForm::assemble() const {
  CMatrix middle(4, 4);
  middle << K, K_prime, K_prime, -K;
  return block_diag(V, W) * middle * block_diag(X, X.adjoint());
}

CMatrix assistant_op(const CMatrix& m) { return kron(m, pauli::identity()); }
CMatrix system_op(const CMatrix& m) { return kron(pauli::identity(), m); }

CMatrix rotation_onto(const Vec3& n) {
  const Vec3 axis = Vec3::UnitZ().cross(n);
  const double s = axis.norm();
  if (s < 1e-15) {
    if (n.z() > 0.0) return pauli::identity();
    return pauli::x();
  }
  const double angle = std::acos(std::clamp(n.z(), -1.0, 1.0));
  const Vec3 u = axis / s;
  return std::cos(angle / 2) * pauli::identity() +
         Complex(0.0, std::sin(angle / 2)) * pauli::dot(u);
}

CMatrix build_unitary(const SpinSchemeParams& p) {
  p.validate();
  const CMatrix id = pauli::identity();
  const CMatrix chi = pauli::dot(p.chi);
  const CMatrix k = std::cos(p.theta) * std::cos(p.phi) * id +
                    std::sin(p.theta) * std::sin(p.phi) * chi;
  const CMatrix kp = std::sin(p.theta) * std::cos(p.phi) * id -
                     std::cos(p.theta) * std::sin(p.phi) * chi;
  const CMatrix x = std::cos(p.psi) * id + Complex(0.0, std::sin(p.psi)) * pauli::dot(p.xi);

  CanonicalForm form{rotation_onto(p.eta), rotation_onto(p.zeta), k, kp, x};
  return form.assemble();
}

CanonicalForm decompose_unitary(const CMatrix& u) {
  if (u.rows() != 4 || u.cols() != 4) throw InvalidArgument("expected a 4x4 unitary");
  if (!is_unitary(u, tol::kUnitaryInput)) throw InvalidArgument("matrix is not unitary");

  const CMatrix a = u.topLeftCorner(2, 2);
  const CMatrix b = u.bottomLeftCorner(2, 2);
  const CMatrix c = u.topRightCorner(2, 2);
  const double sa = Eigen::JacobiSVD<CMatrix>(a).singularValues().minCoeff();
  const double sb = Eigen::JacobiSVD<CMatrix>(b).singularValues().minCoeff();
  if (sa <= tol::kPolarBlock || sb <= tol::kPolarBlock) {
    throw InvalidArgument("degenerate polar block");
  }

  // A = v k, B = w k', C = v k' x, D = -w k x. Since k^2 + k'^2 = 1,
  // x = k' v^dag C - k w^dag D with no inverse taken.
  const auto [v, k] = polar(a);
  const auto [w, kp] = polar(b);
  const CMatrix x = kp * v.adjoint() * c - k * w.adjoint() * u.bottomRightCorner(2, 2);

  // X^dag is the principal root of x, so X + X^dag >= 0.
  CanonicalForm f;
  f.X = unitary_sqrt(x).adjoint();
  f.V = v * f.X.adjoint();
  f.W = w * f.X.adjoint();
  f.K = f.X * k * f.X.adjoint();
  f.K_prime = f.X * kp * f.X.adjoint();

  // On the sigma_chi eigenvectors K and K' take the values cos and sin of
  // theta - phi and theta + phi.
  const EigenSystem ks = herm_eig(f.K);
  double angle[2];
  for (int i = 0; i < 2; ++i) {
    const CVector e = ks.vectors.col(i);
    angle[i] = std::atan2((e.adjoint() * f.K_prime * e)(0).real(), (e.adjoint() * f.K * e)(0).real());
  }
  const double lo = std::min(angle[0], angle[1]), hi = std::max(angle[0], angle[1]);
  f.theta = 0.5 * (lo + hi);
  f.phi = 0.5 * (hi - lo);
  f.eta = bloch_of_operator(f.V.adjoint() * pauli::z() * f.V);
  f.zeta = bloch_of_operator(f.W.adjoint() * pauli::z() * f.W);
  return f;
}

MeasurementTriple simulate_expectations(const CMatrix& u, const BlochState& r,
                                        AssistantPurity lambda) {
  if (u.rows() != 4 || u.cols() != 4) throw InvalidArgument("expected a 4x4 unitary");
  if (!is_unitary(u, tol::kUnitaryInput)) throw InvalidArgument("matrix is not unitary");
  const CMatrix assistant = 0.5 * (pauli::identity() + lambda.value() * pauli::z());
  const CMatrix omega0 = kron(assistant, density_from_bloch(r));
  const CMatrix omega = u * omega0 * u.adjoint();
  MeasurementTriple m;
  m.assist_avg = trace_product(omega, assistant_op(pauli::z()));
  m.sys_avg = trace_product(omega, system_op(pauli::z()));
  m.correlator = trace_product(omega, kron(pauli::z(), pauli::z()));
  return m;
}

LinearSystem linear_map_from_unitary(const CMatrix& u, AssistantPurity lambda) {
  const Vec3 offset = simulate_expectations(u, BlochState(), lambda).spin_order();
  Mat3 coeffs;
  for (int i = 0; i < 3; ++i) {
    const BlochState e(Vec3::Unit(i));
    coeffs.col(i) = simulate_expectations(u, e, lambda).spin_order() - offset;
  }
  return LinearSystem::make(coeffs, offset);
}

LinearSystem coefficient_system(const SpinSchemeParams& p, AssistantPurity lambda) {
  p.validate();
  const double l = lambda.value();
  const Vec3 e = p.frame_components(p.eta);
  const Vec3 z = p.frame_components(p.zeta);
  const double c2t = std::cos(2 * p.theta), s2t = std::sin(2 * p.theta);
  const double c2p = std::cos(2 * p.phi), s2p = std::sin(2 * p.phi);
  const double c2s = std::cos(2 * p.psi), s2s = std::sin(2 * p.psi);

  const double xs = e.x() + z.x(), xd = e.x() - z.x();
  const double ys = e.y() + z.y(), yd = e.y() - z.y();
  const double zs = e.z() + z.z(), zd = e.z() - z.z();

  // Rows 2 and 3 are <sigma_z> and <s_z sigma_z>; they come from halving
  // the sum and difference combinations.
  Mat3 c;
  c(0, 0) = 0.0;
  c(0, 1) = l * s2t * s2p * c2s;
  c(0, 2) = s2t * s2p * s2s;
  c(1, 0) = 0.5 * (xs * c2p + l * xd * c2t);
  c(1, 1) = 0.5 * (ys * c2s + l * yd * c2t * c2p * c2s - s2s * (l * zs * c2p + zd * c2t));
  c(1, 2) = 0.5 * (l * ys * s2s + yd * c2t * c2p * s2s + c2s * (zs * c2p + l * zd * c2t));
  c(2, 0) = 0.5 * (xd * c2p + l * xs * c2t);
  c(2, 1) = 0.5 * (yd * c2s + l * ys * c2t * c2p * c2s - s2s * (l * zd * c2p + zs * c2t));
  c(2, 2) = 0.5 * (l * yd * s2s + ys * c2t * c2p * s2s + c2s * (zd * c2p + l * zs * c2t));

  const Vec3 f = l * Vec3(c2t * c2p, 0.5 * yd * s2t * s2p, 0.5 * ys * s2t * s2p);

  // The closed form acts on frame components of r.
  Mat3 frame;
  frame.row(0) = p.xi.transpose();
  frame.row(1) = p.chi.transpose();
  frame.row(2) = p.xi.cross(p.chi).transpose();
  return LinearSystem::make(c * frame, f);
}

double determinant_closed_form(const SpinSchemeParams& p, AssistantPurity lambda) {
  p.validate();
  const double l = lambda.value();
  const Vec3 e = p.frame_components(p.eta);
  const Vec3 z = p.frame_components(p.zeta);
  const double c2t = std::cos(2 * p.theta), s2t = std::sin(2 * p.theta);
  const double c2p = std::cos(2 * p.phi), s2p = std::sin(2 * p.phi);
  const double c2s = std::cos(2 * p.psi), s2s = std::sin(2 * p.psi);
  const double q = l * l * c2s * c2s + s2s * s2s;

  const double bracket =
      0.5 * (1 - l * l) * std::sin(4 * p.psi) *
          ((c2p + l * c2t) * e.x() * z.y() - (c2p - l * c2t) * e.y() * z.x()) +
      e.z() * z.x() * (c2p - l * c2t) * (l * c2p + c2t * q) -
      e.x() * z.z() * (c2p + l * c2t) * (l * c2p - c2t * q);
  return bracket * s2t * s2p / 8.0;
}

namespace {

Reconstruction invert_checked(const MeasurementTriple& m, const LinearSystem& sys,
                              double determinant) {
  if (std::abs(sys.det) <= tol::kSpinSingular) {
    std::ostringstream os;
    os << "singular scheme: D = " << determinant;
    throw SingularSchemeError(os.str(), determinant);
  }
  Reconstruction out;
  out.r = sys.invert(m.spin_order());
  out.inconsistent = out.r.norm() > 1.0 + tol::kSpinInconsistent;
  out.determinant = determinant;
  return out;
}

}  // namespace

Reconstruction reconstruct(const MeasurementTriple& m, const SpinSchemeParams& p,
                           AssistantPurity lambda) {
  return invert_checked(m, coefficient_system(p, lambda), determinant_closed_form(p, lambda));
}

Reconstruction reconstruct(const MeasurementTriple& m, const CMatrix& u, AssistantPurity lambda) {
  const LinearSystem sys = linear_map_from_unitary(u, lambda);
  return invert_checked(m, sys, kDeterminantScale * sys.det);
}

namespace {

// Search coordinates: every real vector maps into the valid region.
//   phi   = (pi/4) sin^2 x0
//   theta = phi + sin^2(x1) (pi/2 - 2 phi)
//   psi   = pi sin^2 x2            (absent when psi is pinned)
//   eta   = sphere(x3, x4), zeta = sphere(x5, x6)
struct SearchSpace {
  std::optional<double> fixed_psi;

  int dim() const { return fixed_psi ? 6 : 7; }

  SpinSchemeParams decode(const Eigen::VectorXd& x) const {
    SpinSchemeParams p;
    const double s0 = std::sin(x(0)), s1 = std::sin(x(1));
    p.phi = std::max(pi / 4 * s0 * s0, 1e-12);
    p.theta = std::min(p.phi + s1 * s1 * (pi / 2 - 2 * p.phi), pi / 2 - p.phi);
    int k = 2;
    if (fixed_psi) {
      p.psi = *fixed_psi;
    } else {
      const double s2 = std::sin(x(k++));
      p.psi = pi * s2 * s2;
    }
    p.eta = sphere_point(x(k), x(k + 1));
    p.zeta = sphere_point(x(k + 2), x(k + 3));
    return p;
  }

  Eigen::VectorXd encode(double phi, double frac, double psi, double ea, double eb, double za,
                         double zb) const {
    Eigen::VectorXd x(dim());
    x(0) = std::asin(std::sqrt(std::clamp(phi / (pi / 4), 0.0, 1.0)));
    x(1) = std::asin(std::sqrt(std::clamp(frac, 0.0, 1.0)));
    int k = 2;
    if (!fixed_psi) x(k++) = std::asin(std::sqrt(std::clamp(psi / pi, 0.0, 1.0)));
    x(k) = ea;
    x(k + 1) = eb;
    x(k + 2) = za;
    x(k + 3) = zb;
    return x;
  }
};

}  // namespace

OptimizationResult optimize_determinant(AssistantPurity lambda, const OptimizerOptions& opts) {
  if (opts.budget < 1000) throw InvalidArgument("optimizer budget must be at least 1000 evaluations");
  if (opts.restarts < 1) throw InvalidArgument("optimizer needs at least one restart");
  if (opts.fixed_psi && !(*opts.fixed_psi >= 0.0 && *opts.fixed_psi <= pi)) {
    throw InvalidArgument("fixed psi must lie in [0, pi]");
  }

  const SearchSpace space{opts.fixed_psi};
  auto objective = [&](const Eigen::VectorXd& x) {
    return -std::abs(determinant_closed_form(space.decode(x), lambda));
  };

  // Coarse stage: half the budget on a seeded uniform sample.
  const int coarse = opts.budget / 2;
  std::mt19937_64 rng(opts.seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  struct Candidate {
    double value;
    int order;
    Eigen::VectorXd x;
  };
  std::vector<Candidate> pool;
  pool.reserve(static_cast<std::size_t>(coarse));
  for (int i = 0; i < coarse; ++i) {
    const double phi = pi / 4 * unit(rng);
    const double frac = unit(rng);
    const double psi = pi * unit(rng);
    const double ea = std::acos(1.0 - 2.0 * unit(rng)), eb = 2 * pi * unit(rng);
    const double za = std::acos(1.0 - 2.0 * unit(rng)), zb = 2 * pi * unit(rng);
    Eigen::VectorXd x = space.encode(phi, frac, psi, ea, eb, za, zb);
    pool.push_back({objective(x), i, std::move(x)});
  }
  const auto restarts = static_cast<std::size_t>(std::min<int>(opts.restarts, coarse));
  std::partial_sort(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(restarts), pool.end(),
                    [](const Candidate& a, const Candidate& b) {
                      return a.value < b.value || (a.value == b.value && a.order < b.order);
                    });

  const int per_restart = std::max(1, (opts.budget - coarse) / static_cast<int>(restarts));
  std::vector<std::future<NelderMeadResult>> jobs;
  jobs.reserve(restarts);
  for (std::size_t i = 0; i < restarts; ++i) {
    jobs.push_back(std::async(std::launch::async, [&, i] {
      std::mt19937_64 local(opts.seed + i);
      NelderMeadOptions nm;
      nm.max_evaluations = per_restart;
      nm.initial_step = 0.05 + 0.1 * std::uniform_real_distribution<double>(0.0, 1.0)(local);
      return nelder_mead(objective, pool[i].x, nm);
    }));
  }

  OptimizationResult best;
  double best_value = INFINITY;
  int evaluations = coarse;
  for (auto& job : jobs) {
    const NelderMeadResult r = job.get();
    evaluations += r.evaluations;
    if (r.value < best_value) {
      best_value = r.value;
      best.params = space.decode(r.x);
    }
  }
  best.determinant = determinant_closed_form(best.params, lambda);
  best.evaluations = evaluations;
  return best;
}

HeisenbergSpectrum heisenberg_hamiltonian(const HeisenbergParams& h) {
  HeisenbergSpectrum out;
  const CMatrix sx = pauli::x(), sy = pauli::y(), sz = pauli::z();
  out.hamiltonian = h.hx * (system_op(sx) + assistant_op(sx)) +
                    h.jx * (kron(sx, sx) + kron(sz, sz)) + h.jy * kron(sy, sy);

  if (h.hx == 0.0) {
    const EigenSystem es = herm_eig(out.hamiltonian);
    out.values = es.values;
    out.vectors = es.vectors;
    return out;
  }

  const double beta = std::hypot(h.jx - h.jy, 2 * h.hx);
  const std::array<double, 4> e = {-2 * h.jx - h.jy, h.jy, h.jx - beta, h.jx + beta};
  const double gamma = (h.jy - e[3]) / (2 * h.hx);
  const double mu = (h.jy - e[2]) / (2 * h.hx);
  std::array<Eigen::Vector4d, 4> v;
  v[0] << 0, -1, 1, 0;
  v[1] << -1, 0, 0, 1;
  v[2] << 1, gamma, gamma, 1;
  v[3] << 1, mu, mu, 1;

  std::array<int, 4> order = {0, 1, 2, 3};
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return e[a] < e[b]; });
  out.values.resize(4);
  out.vectors.resize(4, 4);
  for (int k = 0; k < 4; ++k) {
    out.values(k) = e[order[k]];
    out.vectors.col(k) = v[order[k]].normalized().cast<Complex>();
  }
  out.closed_form = true;
  return out;
}

CMatrix heisenberg_general(const HeisenbergParams& h) {
  const CMatrix sx = pauli::x(), sy = pauli::y(), sz = pauli::z();
  return h.hx * (system_op(sx) + assistant_op(sx)) + h.hy * (system_op(sy) + assistant_op(sy)) +
         h.hz * (system_op(sz) + assistant_op(sz)) + h.jx * kron(sx, sx) + h.jy * kron(sy, sy) +
         h.jz * kron(sz, sz);
}

double hamiltonian_determinant(const HeisenbergParams& h) {
  const double beta = std::hypot(h.jx - h.jy, 2 * h.hx);
  if (beta == 0.0) return 0.0;
  const double d = h.jx - h.jy;
  const double sb = std::sin(beta);
  return d * d * h.hx * h.hx * std::sin(4 * h.jx) * sb * sb * sb * sb /
         (2 * beta * beta * beta * beta);
}

CMatrix pure_hamiltonian() {
  const double sin_a = std::sqrt(0.5 * (1.0 - 1.0 / std::sqrt(3.0)));
  return kron(pauli::x(), pauli::x()) / std::sqrt(2.0) +
         0.5 * (sin_a * assistant_op(pauli::y()) + assistant_op(pauli::z()));
}

CMatrix ising_field_hamiltonian(double coupling, const Vec3& field) {
  return coupling * kron(pauli::x(), pauli::x()) + assistant_op(pauli::dot(field));
}

namespace presets {

SpinSchemeParams disordered_optimum() {
  SpinSchemeParams p;
  p.theta = pi / 8;
  p.phi = pi / 8;
  p.psi = pi / 4;
  p.eta = Vec3(1, 0, 1).normalized();
  p.zeta = p.eta;
  return p;
}

SpinSchemeParams pure_optimum() {
  SpinSchemeParams p;
  p.theta = pi / 4;
  p.phi = 0.5 * std::asin(1.0 / std::sqrt(3.0));
  p.psi = pi / 4;
  p.eta = Vec3(1, 0, 1).normalized();
  p.zeta = Vec3(-1, 0, 1).normalized();
  return p;
}

HeisenbergParams heisenberg_optimum() {
  HeisenbergParams h;
  h.jx = pi / 8;
  h.jy = pi * (1 - std::sqrt(8.0)) / 8;
  h.hx = pi / (2 * std::sqrt(8.0));
  return h;
}

}  // namespace presets

}  // namespace sat::spin
