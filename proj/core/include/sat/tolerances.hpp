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

#ifndef SAT_TOLERANCES_HPP
#define SAT_TOLERANCES_HPP

// Every numeric threshold used by the library lives here.

namespace sat::tol {

inline constexpr double kHermitian = 1e-10;
inline constexpr double kHermitianFlag = 1e-12;
inline constexpr double kUnitary = 1e-12;
inline constexpr double kUnitaryInput = 1e-10;
inline constexpr double kTrace = 1e-10;
inline constexpr double kEigenvalueFloor = -1e-10;

// Bloch vectors: BlochState tolerates 1e-12 of rounding, construction
// from user data refuses anything beyond 1e-9.
inline constexpr double kPurity = 1e-12;
inline constexpr double kPurityReject = 1e-9;

// Singular values of the polar blocks below this make the canonical
// decomposition non-unique.
inline constexpr double kPolarBlock = 1e-6;

inline constexpr double kSpinSingular = 1e-9;
inline constexpr double kJcmRelativeSingular = 1e-12;

// Reconstructed |r| above 1 + these is flagged as inconsistent data.
inline constexpr double kSpinInconsistent = 1e-6;
inline constexpr double kJcmInconsistent = 0.05;

inline constexpr double kPoissonTail = 1e-12;
inline constexpr double kSeriesCutoff = 1e-16;
inline constexpr double kLeakage = 1e-8;
inline constexpr int kGuardLevels = 2;

inline constexpr double kNegativeProbability = -1e-12;

}  // namespace sat::tol

#endif  // SAT_TOLERANCES_HPP
