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

#ifndef SAT_NELDER_MEAD_HPP
#define SAT_NELDER_MEAD_HPP

#include <functional>

#include <Eigen/Dense>

namespace sat {

struct NelderMeadOptions {
  int max_evaluations = 2000;
  double initial_step = 0.1;
  double f_tol = 1e-15;
  double x_tol = 1e-12;
};

struct NelderMeadResult {
  Eigen::VectorXd x;
  double value = 0.0;
  int evaluations = 0;
};

/// Minimizes f with the downhill simplex method (standard coefficients:
/// reflection 1, expansion 2, contraction 1/2, shrink 1/2). Stops when
/// both the spread of values and the simplex diameter fall under the
/// tolerances, or the evaluation budget is spent.
NelderMeadResult nelder_mead(const std::function<double(const Eigen::VectorXd&)>& f,
                             const Eigen::VectorXd& start, const NelderMeadOptions& opts = {});

}  // namespace sat

#endif  // SAT_NELDER_MEAD_HPP
