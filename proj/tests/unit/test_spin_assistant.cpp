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

#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "oracles/expm.hpp"
#include "oracles/spin.hpp"
#include "sat/errors.hpp"
#include "sat/spin_assistant.hpp"
#include "support/generators.hpp"

using namespace sat;
using namespace sat::spin;
using std::numbers::pi;

namespace {

double max_abs(const CMatrix& m) { return m.cwiseAbs().maxCoeff(); }

const AssistantPurity kMixed(0.0);
const AssistantPurity kPure(1.0);

}  // namespace

TEST(SpinParams, ValidationNamesConstraint) {
  SpinSchemeParams p = presets::disordered_optimum();
  EXPECT_NO_THROW(p.validate());
  p.phi = 0.0;
  try {
    p.validate();
    FAIL() << "phi = 0 accepted";
  } catch (const InvalidArgument& e) {
    EXPECT_NE(std::string(e.what()).find("0 < phi"), std::string::npos);
  }
  p = presets::disordered_optimum();
  p.chi = Vec3(1, 0, 0);
  EXPECT_THROW(p.validate(), InvalidArgument);
  p = presets::disordered_optimum();
  p.theta = pi / 2;
  EXPECT_THROW(p.validate(), InvalidArgument);
  p = presets::disordered_optimum();
  p.eta = Vec3(1, 1, 0);
  EXPECT_THROW(p.validate(), InvalidArgument);
  EXPECT_THROW(AssistantPurity(1.5), InvalidArgument);
}

TEST(BuildUnitary, UnitaryAndComplementaryBlocks) {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 50; ++i) {
    const SpinSchemeParams p = testgen::spin_params(rng);
    EXPECT_LT(unitarity_defect(build_unitary(p)), 1e-12);
    const CanonicalForm f = decompose_unitary(build_unitary(p));
    const CMatrix sum = f.K * f.K + f.K_prime * f.K_prime;
    EXPECT_LT(max_abs(sum - CMatrix::Identity(2, 2)), 1e-12);
  }
}

TEST(BuildUnitary, EqualAnglesAndTrivialPhase) {
  SpinSchemeParams p;
  p.theta = p.phi = 0.3;
  p.psi = 0.0;
  const CMatrix u = build_unitary(p);
  const CMatrix k = std::cos(0.3) * std::cos(0.3) * pauli::identity() +
                    std::sin(0.3) * std::sin(0.3) * pauli::y();
  // eta = zeta = z gives V = W = 1, and psi = 0 gives X = 1.
  EXPECT_LT(max_abs(u.topLeftCorner(2, 2) - k), 1e-15);
  EXPECT_LT(max_abs(u.bottomRightCorner(2, 2) + k), 1e-15);
}

TEST(RotationOnto, MapsSigmaZ) {
  std::mt19937_64 rng(2);
  for (int i = 0; i < 20; ++i) {
    const Vec3 n = testgen::unit(rng);
    const CMatrix v = rotation_onto(n);
    EXPECT_LT(max_abs(v.adjoint() * pauli::z() * v - pauli::dot(n)), 1e-14);
  }
  const CMatrix anti = rotation_onto(Vec3(0, 0, -1));
  EXPECT_LT(max_abs(anti.adjoint() * pauli::z() * anti + pauli::z()), 1e-15);
}

TEST(Decompose, RoundTripFromParams) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 50; ++i) {
    const SpinSchemeParams p = testgen::spin_params(rng);
    const CMatrix u = build_unitary(p);
    const CanonicalForm f = decompose_unitary(u);
    EXPECT_LT(max_abs(f.assemble() - u), 1e-9);
    EXPECT_NEAR(f.theta, p.theta, 1e-8);
    EXPECT_NEAR(f.phi, p.phi, 1e-8);
    EXPECT_LT((f.eta - p.eta).norm(), 1e-8);
    EXPECT_LT((f.zeta - p.zeta).norm(), 1e-8);
    const Eigen::VectorXd xs = herm_eig(f.X + f.X.adjoint()).values;
    EXPECT_GE(xs.minCoeff(), -1e-12);
  }
}

TEST(Decompose, RandomUnitaries) {
  std::mt19937_64 rng(4);
  std::normal_distribution<double> g;
  int decomposed = 0;
  for (int i = 0; i < 100; ++i) {
    CMatrix a(4, 4);
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 4; ++c) a(r, c) = Complex(g(rng), g(rng));
    const CMatrix u = unitary_exp(0.5 * (a + a.adjoint()), 1.0);
    try {
      const CanonicalForm f = decompose_unitary(u);
      EXPECT_LT(max_abs(f.assemble() - u), 1e-9);
      const Eigen::VectorXd kv = herm_eig(f.K).values;
      EXPECT_GT(kv.minCoeff(), 0.0);
      EXPECT_LT(kv.maxCoeff(), 1.0);
      ++decomposed;
    } catch (const InvalidArgument&) {
    }
  }
  EXPECT_GE(decomposed, 95);
}

TEST(Decompose, IdentityIsDegenerate) {
  try {
    decompose_unitary(CMatrix::Identity(4, 4));
    FAIL();
  } catch (const InvalidArgument& e) {
    EXPECT_NE(std::string(e.what()).find("degenerate polar block"), std::string::npos);
  }
}

TEST(Simulate, TrivialEvolution) {
  const MeasurementTriple m = simulate_expectations(CMatrix::Identity(4, 4), BlochState(0.1, 0.2, 0.3),
                                                    AssistantPurity(0.6));
  EXPECT_NEAR(m.assist_avg, 0.6, 1e-15);
  EXPECT_NEAR(m.sys_avg, 0.3, 1e-15);
  EXPECT_NEAR(m.correlator, 0.18, 1e-15);

  std::mt19937_64 rng(5);
  const CMatrix u = build_unitary(testgen::spin_params(rng));
  const MeasurementTriple zero = simulate_expectations(u, BlochState(), kMixed);
  EXPECT_LT(zero.spin_order().norm(), 1e-15);
}

TEST(Simulate, DisorderedPresetValues) {
  const CMatrix u = build_unitary(presets::disordered_optimum());
  const MeasurementTriple m = simulate_expectations(u, BlochState(0.2, 0.1, 0.5), kMixed);
  EXPECT_NEAR(m.assist_avg, 0.25, 1e-12);
  EXPECT_NEAR(m.sys_avg, 0.1, 1e-12);
  EXPECT_NEAR(m.correlator, -0.05, 1e-12);
}

TEST(CoefficientSystem, MatchesBruteForce) {
  std::mt19937_64 rng(6);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 200; ++i) {
    const SpinSchemeParams p = testgen::spin_params(rng);
    const AssistantPurity lambda(u(rng));
    const LinearSystem sys = coefficient_system(p, lambda);
    const BlochState r = testgen::bloch(rng);
    const Vec3 brute = oracle::averages(oracle::unitary(testgen::to_oracle(p)), r.vector(), lambda.value());
    EXPECT_LT((sys.apply(r.vector()) - brute).cwiseAbs().maxCoeff(), 1e-9);
  }
}

TEST(CoefficientSystem, StructuralZeros) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 20; ++i) {
    SpinSchemeParams p = testgen::spin_params(rng);
    p.xi = Vec3::UnitX();
    p.chi = Vec3::UnitY();
    const LinearSystem sys = coefficient_system(p, kMixed);
    EXPECT_EQ(sys.offset, Vec3::Zero());
    EXPECT_EQ(sys.coeffs(0, 0), 0.0);
  }
}

TEST(CoefficientSystem, DisorderedPresetInverse) {
  const LinearSystem sys = coefficient_system(presets::disordered_optimum(), kMixed);
  Mat3 inverse;
  // r_x = 2 <sigma_z>, r_y = -2 <s_z sigma_z>, r_z = 2 <s_z>
  inverse << 0, 2, 0, 0, 0, -2, 2, 0, 0;
  EXPECT_LT((sys.coeffs.inverse() - inverse).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(Determinant, ClosedFormNormalization) {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 200; ++i) {
    const SpinSchemeParams p = testgen::spin_params(rng);
    const AssistantPurity lambda(u(rng));
    const double det = coefficient_system(p, lambda).det;
    EXPECT_NEAR(determinant_closed_form(p, lambda), kDeterminantScale * det, 1e-10);
  }
}

TEST(Determinant, Presets) {
  EXPECT_NEAR(determinant_closed_form(presets::disordered_optimum(), kMixed), 1.0 / 32, 1e-15);
  EXPECT_NEAR(std::abs(determinant_closed_form(presets::pure_optimum(), kPure)), 1.0 / (12 * std::sqrt(3.0)),
              1e-15);
  SpinSchemeParams p = presets::disordered_optimum();
  p.psi = 0.0;
  EXPECT_EQ(determinant_closed_form(p, kMixed), 0.0);
}

TEST(Reconstruct, Presets) {
  const Reconstruction zero = reconstruct(MeasurementTriple{}, presets::disordered_optimum(), kMixed);
  EXPECT_LT(zero.r.norm(), 1e-15);

  const Reconstruction r0 = reconstruct(MeasurementTriple::from_spin_order({0.25, 0.1, -0.05}),
                                        presets::disordered_optimum(), kMixed);
  EXPECT_LT((r0.r - Vec3(0.2, 0.1, 0.5)).norm(), 1e-12);
  EXPECT_FALSE(r0.inconsistent);

  const double a = 0.1, b = -0.2, c = 0.3, s3 = std::sqrt(3.0);
  const Reconstruction r1 =
      reconstruct(MeasurementTriple::from_spin_order({a, b, c}), presets::pure_optimum(), kPure);
  EXPECT_LT((r1.r - Vec3(s3 * c, -s3 * b, s3 * a)).norm(), 1e-12);
}

TEST(Reconstruct, RoundTripRandom) {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  int checked = 0;
  while (checked < 100) {
    const SpinSchemeParams p = testgen::spin_params(rng);
    const AssistantPurity lambda(u(rng));
    if (std::abs(determinant_closed_form(p, lambda)) <= 1e-6) continue;
    const BlochState r = testgen::bloch(rng);
    const MeasurementTriple m = simulate_expectations(build_unitary(p), r, lambda);
    EXPECT_LT((reconstruct(m, p, lambda).r - r.vector()).cwiseAbs().maxCoeff(), 1e-8);
    ++checked;
  }
}

TEST(Reconstruct, SingularCarriesDeterminant) {
  SpinSchemeParams p = presets::disordered_optimum();
  p.psi = 0.0;
  try {
    reconstruct(MeasurementTriple{}, p, kMixed);
    FAIL();
  } catch (const SingularSchemeError& e) {
    EXPECT_EQ(e.determinant(), 0.0);
    EXPECT_NE(std::string(e.what()).find("singular scheme"), std::string::npos);
  }
}

TEST(Reconstruct, FlagsInconsistentData) {
  const Reconstruction r = reconstruct(MeasurementTriple::from_spin_order({0.5, 0.5, 0.5}),
                                       presets::disordered_optimum(), kMixed);
  EXPECT_TRUE(r.inconsistent);
}

TEST(Optimizer, RejectsSmallBudget) {
  OptimizerOptions o;
  o.budget = 999;
  EXPECT_THROW(optimize_determinant(kMixed, o), InvalidArgument);
}

TEST(Optimizer, PinnedTrivialPhaseGivesZero) {
  OptimizerOptions o;
  o.budget = 2000;
  o.fixed_psi = 0.0;
  EXPECT_LT(std::abs(optimize_determinant(kMixed, o).determinant), 1e-15);
}

TEST(Optimizer, DeterministicForSeed) {
  OptimizerOptions o;
  o.budget = 4000;
  o.seed = 42;
  const OptimizationResult a = optimize_determinant(kMixed, o);
  const OptimizationResult b = optimize_determinant(kMixed, o);
  EXPECT_EQ(a.determinant, b.determinant);
  EXPECT_EQ(a.params.theta, b.params.theta);
  EXPECT_EQ(a.evaluations, b.evaluations);
}

TEST(Heisenberg, ClosedFormSpectrum) {
  std::mt19937_64 rng(10);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int i = 0; i < 30; ++i) {
    HeisenbergParams h;
    h.jx = u(rng);
    h.jy = u(rng);
    h.hx = u(rng);
    const HeisenbergSpectrum s = heisenberg_hamiltonian(h);
    ASSERT_TRUE(s.closed_form);
    const EigenSystem numeric = herm_eig(s.hamiltonian);
    EXPECT_LT((s.values - numeric.values).cwiseAbs().maxCoeff(), 1e-10);
    EXPECT_LT(unitarity_defect(s.vectors), 1e-10);
    const CMatrix back = s.vectors * s.values.cast<Complex>().asDiagonal() * s.vectors.adjoint();
    EXPECT_LT(max_abs(back - s.hamiltonian), 1e-10);
  }
}

TEST(Heisenberg, EdgeCases) {
  HeisenbergParams h;
  h.jx = h.jy = 0.4;
  h.hx = -0.3;
  const Eigen::VectorXd v = heisenberg_hamiltonian(h).values;
  // beta = 2 |hx|: E3, E4 = J -/+ 0.6
  EXPECT_NEAR(v.maxCoeff(), 0.4 + 0.6, 1e-12);
  h.hx = 0.0;
  const HeisenbergSpectrum s = heisenberg_hamiltonian(h);
  EXPECT_FALSE(s.closed_form);
  int at_j = 0;
  for (int k = 0; k < 4; ++k) at_j += std::abs(s.values(k) - 0.4) < 1e-12;
  EXPECT_GE(at_j, 2);
}

TEST(Heisenberg, OptimumSpectrumMatchesNumeric) {
  const HeisenbergSpectrum s = heisenberg_hamiltonian(presets::heisenberg_optimum());
  EXPECT_LT((s.values - herm_eig(s.hamiltonian).values).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(HamiltonianDeterminant, ClosedFormAgainstPropagation) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-1.5, 1.5);
  for (int i = 0; i < 50; ++i) {
    HeisenbergParams h;
    h.jx = u(rng);
    h.jy = u(rng);
    h.hx = u(rng);
    const CMatrix prop = oracle::propagator(heisenberg_hamiltonian(h).hamiltonian, 1.0);
    const double numeric = oracle::probe(oracle::M4(prop), 0.0).coeffs.determinant();
    EXPECT_NEAR(hamiltonian_determinant(h), kHamiltonianDeterminantScale * numeric, 1e-9);
    HeisenbergParams flipped = h;
    flipped.hx = -h.hx;
    EXPECT_NEAR(hamiltonian_determinant(flipped), hamiltonian_determinant(h), 1e-15);
  }
}

TEST(HamiltonianDeterminant, Zeros) {
  HeisenbergParams h;
  h.jx = h.jy = 0.7;
  h.hx = 0.2;
  EXPECT_EQ(hamiltonian_determinant(h), 0.0);
  h.jy = 0.1;
  h.hx = 0.0;
  EXPECT_EQ(hamiltonian_determinant(h), 0.0);
  EXPECT_NEAR(hamiltonian_determinant(presets::heisenberg_optimum()), 1.0 / 32, 1e-15);
}

TEST(PureHamiltonian, Structure) {
  const CMatrix h = pure_hamiltonian();
  EXPECT_LT(hermiticity_defect(h), 1e-15);
  EXPECT_NEAR(std::abs(h.trace()), 0.0, 1e-15);
  // The system's sigma_x is conserved by this Hamiltonian.
  const CMatrix sx = system_op(pauli::x());
  EXPECT_LT(max_abs(h * sx - sx * h), 1e-15);
}

TEST(IsingField, FittedPointNearPureOptimum) {
  const CMatrix u = unitary_exp(ising_field_hamiltonian(1 / std::sqrt(2.0), Vec3(0.3977, 0.3868, 0.4425)), 1.0);
  const double d = kDeterminantScale * linear_map_from_unitary(u, kPure).det;
  EXPECT_NEAR(std::abs(d), 1.0 / (12 * std::sqrt(3.0)), 1e-3);
}
