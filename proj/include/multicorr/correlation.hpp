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

// Bipartite cuts, quantum mutual information across them and the
// all-cuts test for genuine multipartite classical correlations.
//
// A state has classical correlations across A:B iff some product of local
// measurements gives outcomes on A that are correlated with outcomes on B.
// Since a product informationally complete measurement determines the
// state, that happens iff the state is not a product across A:B. The
// decision here is therefore the product test on every cut; the
// measurement-side route lives in measurement.hpp.

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "multicorr/qmat.hpp"

namespace multicorr {

inline constexpr double kProductTol = 1e-9;
/// Mutual information (bits) below which a cut counts as uncorrelated.
inline constexpr double kMutualInfoTol = 1e-7;

/// A:B bipartition of an n-qubit register. Canonical cuts have qubit 0 in A.
struct Cut {
  QubitSet a;
  QubitSet b;

  /// A is the set bits of `mask_a`, B the rest. Throws if either is empty.
  static Cut from_mask(std::uint64_t mask_a, std::size_t n);
  /// Throws std::invalid_argument unless A, B partition [0, n), both
  /// non-empty.
  void validate(std::size_t n) const;
  std::size_t num_qubits() const { return a.size() + b.size(); }
  Cut swapped() const { return {b, a}; }
  std::string to_string() const;

  friend bool operator==(const Cut&, const Cut&) = default;
};

/// All 2^(n-1) - 1 canonical cuts in ascending order of A's bitmask.
std::vector<Cut> enumerate_cuts(std::size_t n);

/// S(rho_A) + S(rho_B) - S(rho).
double mutual_information(const DensityMatrix& rho, const Cut& cut);

/// Mutual information of the dephased W/W-bar mixture across a cut with k
/// qubits on one side. Defined for odd n >= 3, 1 <= k <= n-1.
double closed_form_mi(std::size_t n, std::size_t k);

/// Entropy of the k-qubit marginal of the dephased W/W-bar mixture,
/// odd n >= 3, 1 <= k <= n.
double closed_form_entropy(std::size_t n, std::size_t k);

/// Mutual information between qubits i and j of the two-qubit marginal.
double pairwise_mutual_information(const DensityMatrix& rho, std::size_t i, std::size_t j);
/// Symmetric matrix of pairwise mutual informations, zero diagonal.
Eigen::MatrixXd pairwise_mutual_information_matrix(const DensityMatrix& rho);

/// rho_A (x) rho_B re-embedded in the register order of `cut`.
DensityMatrix product_of_marginals(const DensityMatrix& rho, const Cut& cut);

/// max |rho - rho_A (x) rho_B| < tol entrywise.
bool is_product(const DensityMatrix& rho, const Cut& cut, double tol = kProductTol);

/// Minimum eigenvalue of the partial transpose on A. Negative certifies
/// entanglement across the cut.
double ppt_min_eigenvalue(const DensityMatrix& rho, const Cut& cut);

struct CorrelationReport {
  Cut cut;
  double mutual_information = 0.0;
  bool is_product = false;
  std::optional<double> ppt_min_eigenvalue;
  std::optional<double> hv_value;
};

struct GenuineCorrelationVerdict {
  bool genuine = false;
  std::vector<CorrelationReport> cuts;
  /// First cut (canonical order) across which the state is a product.
  std::optional<Cut> separating_cut;
};

struct CutAnalysisOptions {
  double product_tol = kProductTol;
  bool with_ppt = false;
  std::size_t jobs = 1;
};

/// Correlated across every cut <=> genuine multipartite classical
/// correlations. Reports every canonical cut.
GenuineCorrelationVerdict genuine_classical_correlations(const DensityMatrix& rho,
                                                         const CutAnalysisOptions& options = {});

}  // namespace multicorr
