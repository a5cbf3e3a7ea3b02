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

// Dense n-qubit density-matrix kernel.
//
// Register convention: qubit 0 is the leftmost label in |i0 i1 ... i(n-1)>,
// i.e. the most significant bit of the basis index
//   index(|i0 ... i(n-1)>) = sum_j i_j 2^(n-1-j).
// All entropies are in bits.

#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "multicorr/errors.hpp"

namespace multicorr {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Matrix2 = Eigen::Matrix2cd;
using Vector = Eigen::VectorXcd;
using Bloch = Eigen::Vector3d;

inline constexpr double kHermitianTol = 1e-10;
inline constexpr double kTraceTol = 1e-10;
/// Eigenvalues in [-kEigenClamp, 0) are rounding noise and clamp to zero;
/// anything more negative is an invalid state.
inline constexpr double kEigenClamp = 1e-9;
inline constexpr double kUnitaryTol = 1e-10;
inline constexpr std::size_t kDefaultMaxQubits = 12;

/// Capacity cap for dense registers. MULTICORR_MAX_QUBITS overrides the
/// default of 12 when set to a positive integer.
std::size_t max_qubits();

/// Throws CapacityError when n exceeds max_qubits().
void check_capacity(std::size_t n);

/// Sorted set of distinct qubit indices.
class QubitSet {
 public:
  QubitSet() = default;
  QubitSet(std::initializer_list<std::size_t> qubits);
  explicit QubitSet(std::vector<std::size_t> qubits);

  /// Qubits [begin, end).
  static QubitSet range(std::size_t begin, std::size_t end);
  /// Qubits whose bit is set in `mask` (bit q <-> qubit q).
  static QubitSet from_mask(std::uint64_t mask, std::size_t n);

  std::uint64_t mask() const;
  QubitSet complement(std::size_t n) const;
  bool contains(std::size_t q) const;
  /// Throws std::out_of_range if any index is >= n.
  void validate(std::size_t n) const;

  std::size_t size() const { return qubits_.size(); }
  bool empty() const { return qubits_.empty(); }
  std::size_t operator[](std::size_t i) const { return qubits_[i]; }
  auto begin() const { return qubits_.begin(); }
  auto end() const { return qubits_.end(); }
  const std::vector<std::size_t>& indices() const { return qubits_; }

  std::string to_string() const;

  friend bool operator==(const QubitSet&, const QubitSet&) = default;

 private:
  std::vector<std::size_t> qubits_;
};

/// Hermitian, unit-trace, positive semidefinite matrix on 2^n dimensions.
class DensityMatrix {
 public:
  /// Validates every invariant, including the spectral one.
  static DensityMatrix from_matrix(Matrix m);
  /// Diagonal state with the given probabilities (length 2^n, sum 1).
  static DensityMatrix from_diagonal(std::span<const double> probabilities);
  /// Projector onto a normalized state vector.
  static DensityMatrix pure(const Vector& psi);
  /// Computational basis projector, e.g. basis("010").
  static DensityMatrix basis(std::string_view bits);
  static DensityMatrix maximally_mixed(std::size_t n);
  /// Qubit with Bloch vector r, |r| <= 1.
  static DensityMatrix qubit(const Bloch& r);
  /// Skips validation. Only for results of invariant-preserving maps.
  static DensityMatrix trusted(Matrix m);

  std::size_t num_qubits() const { return n_qubits_; }
  std::size_t dim() const { return static_cast<std::size_t>(data_.rows()); }
  const Matrix& matrix() const { return data_; }
  Complex operator()(std::size_t row, std::size_t col) const {
    return data_(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col));
  }
  double trace() const { return data_.trace().real(); }
  bool is_diagonal(double tol = 0.0) const;
  /// Diagonal entries (computational-basis probabilities).
  std::vector<double> diagonal() const;

 private:
  DensityMatrix(std::size_t n, Matrix m) : n_qubits_(n), data_(std::move(m)) {}

  std::size_t n_qubits_ = 0;
  Matrix data_;
};

/// Eigenvalues of a density matrix, descending.
struct Spectrum {
  std::vector<double> values;
};

// Single-qubit operators.
Matrix2 identity2();
Matrix2 pauli_x();
Matrix2 pauli_y();
Matrix2 pauli_z();
/// r . sigma
Matrix2 bloch_operator(const Bloch& r);
/// Pauli by label 'x', 'y' or 'z'.
Matrix2 pauli(char label);
/// Two-qubit CNOT with the first factor as control.
Matrix cnot();

/// Max entrywise |m - m^dagger|.
double hermiticity_defect(const Matrix& m);
bool is_unitary(const Matrix& u, double tol = kUnitaryTol);

DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b);
/// Kronecker product of the listed states, first state leftmost.
DensityMatrix tensor_all(std::span<const DensityMatrix> factors);

/// Reduced state on `keep`, in ascending qubit order.
DensityMatrix partial_trace(const DensityMatrix& rho, const QubitSet& keep);

/// Reorders qubits: new qubit j is old qubit order[j].
DensityMatrix permute_qubits(const DensityMatrix& rho, std::span<const std::size_t> order);

/// Real eigenvalues of a Hermitian matrix, ascending, no clamping.
/// Throws std::invalid_argument on a Hermiticity defect above kHermitianTol.
std::vector<double> hermitian_eigenvalues(const Matrix& m);

/// Descending spectrum with the [-kEigenClamp, 0) window clamped to zero and
/// the result renormalized to sum one.
Spectrum eigen_spectrum(const DensityMatrix& rho);

/// -sum p log2 p with 0 log 0 = 0.
double shannon_entropy(std::span<const double> probabilities);
double von_neumann_entropy(const DensityMatrix& rho);
double von_neumann_entropy(const Spectrum& spectrum);
/// H(x) = -x log2 x - (1-x) log2(1-x). Throws std::domain_error outside
/// [0, 1] beyond a 1e-12 slack.
double binary_entropy(double x);

/// Zeroes coherences between computational values of the listed qubits.
DensityMatrix dephase_computational(const DensityMatrix& rho, const QubitSet& qubits);
DensityMatrix dephase_all(const DensityMatrix& rho);

/// U rho U^dagger with U acting on `targets`; targets[0] is U's leftmost
/// tensor factor. Targets need not be sorted but must be distinct.
DensityMatrix apply_unitary(const DensityMatrix& rho, const Matrix& u,
                            std::span<const std::size_t> targets);
DensityMatrix apply_unitary(const DensityMatrix& rho, const Matrix& u, const QubitSet& targets);

/// Transpose on the tensor factor of `subset`.
Matrix partial_transpose(const DensityMatrix& rho, const QubitSet& subset);

/// Tr(rho obs) for a Hermitian observable on the full register.
double expectation(const DensityMatrix& rho, const Matrix& obs);

/// Bloch vector of the single-qubit marginal of qubit q.
Bloch bloch_vector(const DensityMatrix& rho, std::size_t q);

}  // namespace multicorr
