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

// Local product measurements, their outcome statistics, and the
// Henderson-Vedral classical correlation
//
//   C_B(rho_AB) = max over measurements {E_i} on B of
//                 S(rho_A) - sum_i p_i S(rho_A^i),
//   rho_A^i = Tr_B[(I x E_i) rho_AB] / p_i.
//
// The maximization here runs over products of single-qubit projective
// measurements on B; optimize_hv() reports a lower bound on C_B.

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "multicorr/correlation.hpp"
#include "multicorr/qmat.hpp"

namespace multicorr {

inline constexpr double kPovmTol = 1e-12;
inline constexpr double kNegativeProbabilityClamp = 1e-12;
inline constexpr double kDistributionSumTol = 1e-9;
inline constexpr double kFactorizationTol = 1e-9;
/// Outcomes rarer than this do not contribute to the conditional entropy.
inline constexpr double kNegligibleOutcome = 1e-12;
/// Largest register for the 6^n informationally complete outcome table.
inline constexpr std::size_t kMaxIcQubits = 6;

/// POVM on one qubit.
struct SiteMeasurement {
  std::vector<Matrix2> elements;
  bool informationally_complete = false;

  /// Outcome 0 projects on +axis, outcome 1 on -axis.
  static SiteMeasurement projective(const Bloch& axis);
  /// Projective z: outcome b is |b><b|.
  static SiteMeasurement computational();
  /// {(I + x)/6, (I - x)/6, (I + y)/6, (I - y)/6, (I + z)/6, (I - z)/6}.
  static SiteMeasurement ic_povm();

  std::size_t arity() const { return elements.size(); }
  /// Throws std::invalid_argument unless every element is positive and they
  /// sum to I within kPovmTol.
  void validate() const;
};

struct ProductMeasurement {
  std::vector<SiteMeasurement> sites;

  static ProductMeasurement computational(std::size_t n);
  static ProductMeasurement projective(std::span<const Bloch> axes);
  bool informationally_complete() const;
  std::size_t size() const { return sites.size(); }
};

/// The six-outcome informationally complete POVM on every qubit.
ProductMeasurement ic_povm_measurement(std::size_t n);

/// Joint outcome probabilities. The flat table uses mixed radix with qubit
/// 0's outcome as the most significant digit.
struct OutcomeDistribution {
  std::vector<std::size_t> arities;
  std::vector<double> probabilities;
  std::optional<Cut> cut;
  bool informationally_complete = false;

  double at(std::span<const std::size_t> outcome) const;
  double total() const;
};

/// Born rule p(o) = Tr[rho (x)_i E_i^{o_i}].
OutcomeDistribution measure(const DensityMatrix& rho, const ProductMeasurement& m);

/// max |p(a, b) - p(a) p(b)| < tol over all outcome pairs across the cut.
bool distribution_factorizes(const OutcomeDistribution& d, const Cut& cut,
                             double tol = kFactorizationTol);

/// S(rho_A) - sum_i p_i S(rho_A^i) at a fixed product measurement on B;
/// m_b.sites[j] acts on qubit cut.b[j].
double hv_classical_correlation(const DensityMatrix& rho, const Cut& cut,
                                const ProductMeasurement& m_b);

struct HvOptions {
  std::size_t restarts = 32;
  std::uint64_t seed = 0;
};

struct HvOptimum {
  double value = 0.0;
  /// Per-qubit axes on B at the optimum, in cut.b order.
  std::vector<Bloch> axes;
  /// Value at computational-basis measurements on B (always a start point).
  double computational_value = 0.0;
  bool converged = true;
  std::size_t restarts = 0;

  ProductMeasurement measurement() const { return ProductMeasurement::projective(axes); }
};

/// Maximizes hv_classical_correlation over single-qubit projective bases on
/// B. The computational basis is the first start, so the result never falls
/// below its value.
HvOptimum optimize_hv(const DensityMatrix& rho, const Cut& cut, const HvOptions& options = {});

/// Linear inversion of IC-POVM statistics back to the density matrix.
/// Throws std::invalid_argument for a distribution not produced by the IC
/// POVM and CapacityError beyond kMaxIcQubits.
DensityMatrix reconstruct_from_ic(const OutcomeDistribution& d);

}  // namespace multicorr
