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

#include <gtest/gtest.h>

#include "sat/nelder_mead.hpp"

using sat::nelder_mead;

TEST(NelderMead, Rosenbrock) {
  auto f = [](const Eigen::VectorXd& x) {
    return 100 * std::pow(x(1) - x(0) * x(0), 2) + std::pow(1 - x(0), 2);
  };
  sat::NelderMeadOptions o;
  o.max_evaluations = 5000;
  o.initial_step = 0.5;
  const auto r = nelder_mead(f, Eigen::Vector2d(-1.2, 1.0), o);
  EXPECT_NEAR(r.x(0), 1.0, 1e-5);
  EXPECT_NEAR(r.x(1), 1.0, 1e-5);
  EXPECT_LE(r.evaluations, 5000);
}

TEST(NelderMead, RespectsBudget) {
  int calls = 0;
  auto f = [&](const Eigen::VectorXd& x) {
    ++calls;
    return x.squaredNorm();
  };
  sat::NelderMeadOptions o;
  o.max_evaluations = 50;
  const auto r = nelder_mead(f, Eigen::VectorXd::Constant(6, 3.0), o);
  EXPECT_LE(calls, 50);
  EXPECT_EQ(r.evaluations, calls);
}

TEST(NelderMead, Quadratic) {
  auto f = [](const Eigen::VectorXd& x) { return (x - Eigen::Vector3d(1, -2, 0.5)).squaredNorm(); };
  const auto r = nelder_mead(f, Eigen::Vector3d::Zero());
  EXPECT_LT(r.value, 1e-12);
}
