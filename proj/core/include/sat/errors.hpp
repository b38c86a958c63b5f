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

#ifndef SAT_ERRORS_HPP
#define SAT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace sat {

/// Input outside an operation's domain (bad dimensions, unphysical state,
/// violated parameter bounds).
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Numerical failure that is not the caller's fault but makes the result
/// meaningless (truncation leakage, negative probabilities).
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The measurement map cannot be inverted. Carries the determinant that
/// triggered the refusal.
class SingularSchemeError : public std::runtime_error {
 public:
  SingularSchemeError(const std::string& what, double determinant)
      : std::runtime_error(what), determinant_(determinant) {}

  double determinant() const noexcept { return determinant_; }

 private:
  double determinant_;
};

}  // namespace sat

#endif  // SAT_ERRORS_HPP
