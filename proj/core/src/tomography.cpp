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

#include "sat/tomography.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <random>
#include <sstream>
#include <thread>

#include "sat/errors.hpp"
#include "sat/tolerances.hpp"

namespace sat::tomo {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

Distribution clean(Distribution p) {
  double total = 0.0;
  for (auto& [cell, prob] : p) {
    if (prob < tol::kNegativeProbability) {
      std::ostringstream os;
      os << "negative outcome probability " << prob;
      throw NumericalError(os.str());
    }
    prob = std::max(prob, 0.0);
    total += prob;
  }
  for (auto& [cell, prob] : p) prob /= total;
  return p;
}

Distribution spin_distribution(const SpinScheme& s, const BlochState& r) {
  const CMatrix assistant = 0.5 * (pauli::identity() + s.purity.value() * pauli::z());
  const CMatrix omega = s.unitary * kron(assistant, density_from_bloch(r)) * s.unitary.adjoint();
  Distribution p;
  for (int a = 0; a < 2; ++a) {
    for (int q = 0; q < 2; ++q) {
      p[{q == 0 ? 1 : -1, a == 0 ? 1 : -1}] = omega(2 * a + q, 2 * a + q).real();
    }
  }
  return clean(std::move(p));
}

Distribution jcm_distribution(const JcmScheme& s, const BlochState& r) {
  const int dim = s.config.levels();
  const CMatrix u = jcm::jc_propagator(s.config, s.t);
  const CVector field = jcm::coherent_state(s.config.alpha, dim);
  const CMatrix rho = u * kron(field * field.adjoint(), density_from_bloch(r)) * u.adjoint();

  double leak = 0.0;
  for (int n = dim - tol::kGuardLevels; n < dim; ++n) {
    leak += rho(2 * n, 2 * n).real() + rho(2 * n + 1, 2 * n + 1).real();
  }
  if (leak > tol::kLeakage) {
    std::ostringstream os;
    os << "photon-count leakage " << leak << " at the truncation edge; increase fock_dim";
    throw NumericalError(os.str());
  }
  Distribution p;
  for (int n = 0; n < dim; ++n) {
    p[{1, n}] = rho(2 * n, 2 * n).real();
    p[{-1, n}] = rho(2 * n + 1, 2 * n + 1).real();
  }
  return clean(std::move(p));
}

// The affine map of a scheme in the readout order its module uses.
struct SchemeSystem {
  LinearSystem sys;
  double determinant = 0.0;
  bool spin = false;

  Vec3 order(const MeasurementTriple& m) const { return spin ? m.spin_order() : m.jcm_order(); }
};

SchemeSystem system_of(const Scheme& s) {
  return std::visit(
      overloaded{
          [](const SpinScheme& sp) {
            if (sp.params) {
              return SchemeSystem{spin::coefficient_system(*sp.params, sp.purity),
                                  spin::determinant_closed_form(*sp.params, sp.purity), true};
            }
            const LinearSystem sys = spin::linear_map_from_unitary(sp.unitary, sp.purity);
            return SchemeSystem{sys, spin::kDeterminantScale * sys.det, true};
          },
          [](const JcmScheme& j) {
            const LinearSystem sys = jcm::measurement_matrix(j.config, j.t);
            return SchemeSystem{sys, sys.det, false};
          }},
      s);
}

MeasurementTriple exact_triple(const Scheme& s, const BlochState& r) {
  return std::visit(overloaded{[&](const SpinScheme& sp) {
                                 return spin::simulate_expectations(sp.unitary, r, sp.purity);
                               },
                               [&](const JcmScheme& j) {
                                 return jcm::expectation_series(j.config, r, j.t);
                               }},
                    s);
}

Reconstruction invert(const Scheme& s, const MeasurementTriple& m) {
  return std::visit(overloaded{[&](const SpinScheme& sp) {
                                 return sp.params ? spin::reconstruct(m, *sp.params, sp.purity)
                                                  : spin::reconstruct(m, sp.unitary, sp.purity);
                               },
                               [&](const JcmScheme& j) { return jcm::reconstruct(m, j.config, j.t); }},
                    s);
}

// Per-shot covariance of (sigma_z, assistant, product), divided by the
// shot count.
Mat3 triple_covariance(const ShotRecord& rec, const SchemeSystem& ss) {
  Vec3 mean = Vec3::Zero();
  Mat3 second = Mat3::Zero();
  const double n = static_cast<double>(rec.n_shots);
  for (const auto& [cell, count] : rec.joint_counts) {
    const MeasurementTriple o{static_cast<double>(cell.system), static_cast<double>(cell.assistant),
                              static_cast<double>(cell.system) * cell.assistant};
    const Vec3 v = ss.order(o);
    const double w = static_cast<double>(count) / n;
    mean += w * v;
    second += w * v * v.transpose();
  }
  return (second - mean * mean.transpose()) / n;
}

}  // namespace

SpinScheme SpinScheme::from_params(const spin::SpinSchemeParams& p, double lambda) {
  return SpinScheme{spin::build_unitary(p), spin::AssistantPurity(lambda), p};
}

SpinScheme SpinScheme::from_unitary(const CMatrix& u, double lambda) {
  if (u.rows() != 4 || u.cols() != 4 || !is_unitary(u, tol::kUnitaryInput)) {
    throw InvalidArgument("spin scheme needs a 4x4 unitary");
  }
  return SpinScheme{u, spin::AssistantPurity(lambda), std::nullopt};
}

Distribution joint_distribution(const Scheme& s, const BlochState& r) {
  return std::visit(overloaded{[&](const SpinScheme& sp) { return spin_distribution(sp, r); },
                               [&](const JcmScheme& j) { return jcm_distribution(j, r); }},
                    s);
}

MeasurementTriple moments(const Distribution& p) {
  MeasurementTriple m;
  for (const auto& [cell, prob] : p) {
    m.sys_avg += prob * cell.system;
    m.assist_avg += prob * cell.assistant;
    m.correlator += prob * cell.system * cell.assistant;
  }
  return m;
}

MeasurementTriple ShotRecord::averages() const {
  MeasurementTriple m;
  const double n = static_cast<double>(n_shots);
  for (const auto& [cell, count] : joint_counts) {
    const double w = static_cast<double>(count) / n;
    m.sys_avg += w * cell.system;
    m.assist_avg += w * cell.assistant;
    m.correlator += w * cell.system * cell.assistant;
  }
  return m;
}

ShotRecord sample(const Scheme& s, const BlochState& r, std::int64_t n_shots, std::uint64_t seed) {
  if (n_shots < 1) throw InvalidArgument("n_shots must be >= 1");
  const Distribution p = joint_distribution(s, r);
  std::mt19937_64 rng(seed);

  ShotRecord rec;
  rec.n_shots = n_shots;
  rec.seed = seed;
  std::int64_t left = n_shots;
  double mass = 1.0;
  auto last = std::prev(p.end());
  for (auto it = p.begin(); it != p.end() && left > 0; ++it) {
    std::int64_t k = left;
    if (it != last) {
      const double q = mass > 0.0 ? std::clamp(it->second / mass, 0.0, 1.0) : 1.0;
      k = std::binomial_distribution<std::int64_t>(left, q)(rng);
    }
    mass -= it->second;
    left -= k;
    if (k > 0) rec.joint_counts[it->first] = k;
  }
  return rec;
}

RoundTripReport roundtrip(const Scheme& s, const BlochState& r, std::optional<std::int64_t> shots,
                          std::uint64_t seed) {
  const SchemeSystem ss = system_of(s);
  RoundTripReport rep;
  rep.planted = r;
  rep.determinant = ss.determinant;
  rep.condition_number = ss.sys.condition_number;
  rep.n_shots = shots;

  MeasurementTriple m;
  std::optional<ShotRecord> rec;
  if (shots) {
    rec = sample(s, r, *shots, seed);
    m = rec->averages();
  } else {
    m = exact_triple(s, r);
  }

  const Reconstruction out = invert(s, m);
  rep.recovered = out.r;
  rep.inconsistent = out.inconsistent;
  rep.abs_error = (r.vector() - out.r).cwiseAbs();
  if (rec) {
    const Mat3 inv = ss.sys.coeffs.inverse();
    const Mat3 cov = inv * triple_covariance(*rec, ss) * inv.transpose();
    rep.std_error = cov.diagonal().cwiseMax(0.0).cwiseSqrt();
  }
  return rep;
}

std::vector<RoundTripReport> roundtrip_batch(const Scheme& s, const BlochState& r,
                                             std::int64_t shots, std::uint64_t seed0,
                                             int repetitions) {
  if (repetitions < 1) throw InvalidArgument("repetitions must be >= 1");
  std::vector<std::future<RoundTripReport>> jobs;
  jobs.reserve(static_cast<std::size_t>(repetitions));
  for (int i = 0; i < repetitions; ++i) {
    jobs.push_back(std::async(std::launch::async, [&, i] {
      return roundtrip(s, r, shots, seed0 + static_cast<std::uint64_t>(i));
    }));
  }
  std::vector<RoundTripReport> out;
  out.reserve(jobs.size());
  for (auto& j : jobs) out.push_back(j.get());
  return out;
}

const std::vector<std::string>& sweep_axes() {
  static const std::vector<std::string> axes = {"t",     "delta", "alpha", "lambda", "theta",
                                                "phi",   "psi",   "t0",    "sigma"};
  return axes;
}

namespace {

std::string axis_list() {
  std::string out;
  for (const auto& a : sweep_axes()) out += (out.empty() ? "" : ", ") + a;
  return out;
}

[[noreturn]] void wrong_axis(const std::string& axis, const char* kind) {
  std::ostringstream os;
  os << "sweep axis '" << axis << "' does not apply to the " << kind
     << " scheme; valid axes: " << axis_list();
  throw InvalidArgument(os.str());
}

SweepRow spin_row(SpinScheme sp, const std::string& axis, double v) {
  if (axis == "lambda") {
    sp.purity = spin::AssistantPurity(v);
  } else if (axis == "theta" || axis == "phi" || axis == "psi") {
    if (!sp.params) throw InvalidArgument("sweep axis '" + axis + "' needs a parametrized spin scheme");
    if (axis == "theta") sp.params->theta = v;
    if (axis == "phi") sp.params->phi = v;
    if (axis == "psi") sp.params->psi = v;
  } else {
    wrong_axis(axis, "spin");
  }
  const SchemeSystem ss = system_of(Scheme{sp});
  return {v, ss.determinant, ss.sys.condition_number};
}

SweepRow jcm_row(JcmScheme j, const std::string& axis, double v) {
  bool averaged = false;
  if (axis == "t") {
    j.t = v;
  } else if (axis == "delta") {
    j.config.detuning = v;
  } else if (axis == "alpha") {
    j.config.alpha = v;
  } else if (axis == "t0") {
    j.t = v;
    averaged = true;
  } else if (axis == "sigma") {
    j.sigma = v;
    averaged = true;
  } else {
    wrong_axis(axis, "jcm");
  }
  const LinearSystem sys = jcm::measurement_matrix(j.config, j.t);
  const double d = averaged ? jcm::averaged_determinant(j.config, j.t, j.sigma)
                            : jcm::determinant_series(j.config, j.t);
  return {v, d, sys.condition_number};
}

}  // namespace

std::vector<SweepRow> sweep(const Scheme& s, const std::string& axis, const std::vector<double>& grid) {
  if (std::find(sweep_axes().begin(), sweep_axes().end(), axis) == sweep_axes().end()) {
    throw InvalidArgument("unknown sweep axis '" + axis + "'; valid axes: " + axis_list());
  }
  std::vector<SweepRow> rows(grid.size());
  const std::size_t workers =
      std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, std::max<std::size_t>(grid.size(), 1));
  std::vector<std::future<void>> jobs;
  for (std::size_t w = 0; w < workers; ++w) {
    jobs.push_back(std::async(std::launch::async, [&, w] {
      for (std::size_t i = w; i < grid.size(); i += workers) {
        rows[i] = std::visit(
            overloaded{[&](const SpinScheme& sp) { return spin_row(sp, axis, grid[i]); },
                       [&](const JcmScheme& j) { return jcm_row(j, axis, grid[i]); }},
            s);
      }
    }));
  }
  for (auto& j : jobs) j.get();
  return rows;
}

}  // namespace sat::tomo
