// Copyright 2026 The multicorr Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// n-party covariance Cov(X_1, ..., X_n) = < (X_1 - <X_1>) ... (X_n - <X_n>) >
// for one local observable per qubit.

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "multicorr/qmat.hpp"

namespace multicorr {

inline constexpr double kExactVanishTol = 1e-10;
inline constexpr double kOptimizerVanishTol = 1e-7;

/// X = gain * (axis . sigma) + offset * I with a unit axis.
struct SiteObservable {
  Bloch axis = Bloch::UnitZ();
  double gain = 1.0;
  double offset = 0.0;

  static SiteObservable pauli(char label);
  Matrix2 matrix() const;
  /// 'x', 'y' or 'z' when this is exactly that Pauli.
  std::optional<char> pauli_label() const;
};

struct LocalObservable {
  std::vector<SiteObservable> sites;

  /// One Pauli per character, e.g. "zzzz".
  static LocalObservable from_paulis(std::string_view labels);
  static LocalObservable from_axes(std::span<const Bloch> axes);
  std::size_t size() const { return sites.size(); }
  /// "zzzz" for Pauli strings, otherwise a bracketed list of axes.
  std::string to_string() const;
};

struct CovarianceScanResult {
  double max_abs = 0.0;
  /// Signed covariance at the argmax.
  double value_at_argmax = 0.0;
  LocalObservable argmax;
  std::size_t evaluated_count = 0;
  double tol = kExactVanishTol;
  bool all_below_tol = true;
  /// Optimizer only: every restart converged.
  bool converged = true;
  std::size_t restarts = 0;
};

/// Tr[rho (x)_i (X_i - <X_i> I)]. Throws std::invalid_argument on an arity
/// mismatch or a non-unit axis.
double covariance(const DensityMatrix& rho, const LocalObservable& obs);

/// Exhaustive scan over the 3^n Pauli assignments. Ties in |Cov| (within
/// 1e-12) resolve to the lexicographically smallest string, so the result
/// does not depend on `jobs`.
CovarianceScanResult pauli_scan(const DensityMatrix& rho, double tol = kExactVanishTol,
                                std::size_t jobs = 1);

struct CovarianceOptimizerOptions {
  std::size_t restarts = 32;
  std::uint64_t seed = 0;
  double tol = kOptimizerVanishTol;
  /// Seed one extra start at the Pauli-scan optimum.
  bool start_from_pauli_scan = true;
  std::size_t jobs = 1;
};

/// Maximizes |Cov| over unit traceless observables (gain 1, offset 0) by
/// random-restart coordinate ascent on the spheres.
CovarianceScanResult optimize_covariance(const DensityMatrix& rho,
                                         const CovarianceOptimizerOptions& options = {});

}  // namespace multicorr
