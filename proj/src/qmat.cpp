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

#include "multicorr/qmat.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <sstream>

#include "contraction.hpp"

namespace multicorr {

namespace {

using Index = Eigen::Index;

Index idx(std::uint64_t i) { return static_cast<Index>(i); }

std::size_t qubits_for_dim(Index dim) {
  if (dim <= 0 || (dim & (dim - 1)) != 0) {
    throw InvalidStateError("matrix dimension " + std::to_string(dim) + " is not a power of two");
  }
  std::size_t n = 0;
  while ((Index{1} << n) < dim) ++n;
  return n;
}

void check_targets(std::span<const std::size_t> targets, std::size_t n) {
  for (std::size_t i = 0; i < targets.size(); ++i) {
    if (targets[i] >= n) {
      throw std::out_of_range("qubit " + std::to_string(targets[i]) + " out of range for " +
                              std::to_string(n) + "-qubit register");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (targets[i] == targets[j]) throw std::invalid_argument("repeated target qubit");
    }
  }
}

// M <- (U on targets) M, acting on row indices only.
Matrix apply_left(const Matrix& m, const Matrix& u, std::span<const std::size_t> targets,
                  std::size_t n) {
  const std::size_t t = targets.size();
  const std::uint64_t sub = std::uint64_t{1} << t;
  const std::uint64_t dim = std::uint64_t{1} << n;
  std::uint64_t target_mask = 0;
  for (std::size_t q : targets) target_mask |= std::uint64_t{1} << detail::bit_of(q, n);

  std::vector<std::uint64_t> offsets(sub);
  for (std::uint64_t s = 0; s < sub; ++s) offsets[s] = detail::scatter_bits(s, targets, n);

  Matrix out(m.rows(), m.cols());
  Vector gathered(idx(sub));
  for (Index col = 0; col < m.cols(); ++col) {
    for (std::uint64_t base = 0; base < dim; ++base) {
      if (base & target_mask) continue;
      for (std::uint64_t s = 0; s < sub; ++s) gathered(idx(s)) = m(idx(base | offsets[s]), col);
      const Vector mixed = u * gathered;
      for (std::uint64_t s = 0; s < sub; ++s) out(idx(base | offsets[s]), col) = mixed(idx(s));
    }
  }
  return out;
}

}  // namespace

std::size_t max_qubits() {
  if (const char* env = std::getenv("MULTICORR_MAX_QUBITS")) {
    char* end = nullptr;
    const long value = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && value > 0 && value < 31) {
      return static_cast<std::size_t>(value);
    }
  }
  return kDefaultMaxQubits;
}

void check_capacity(std::size_t n) {
  const std::size_t cap = max_qubits();
  if (n > cap) {
    throw CapacityError(std::to_string(n) + " qubits exceeds the dense capacity of " +
                        std::to_string(cap));
  }
}

// QubitSet ------------------------------------------------------------------

QubitSet::QubitSet(std::initializer_list<std::size_t> qubits)
    : QubitSet(std::vector<std::size_t>(qubits)) {}

QubitSet::QubitSet(std::vector<std::size_t> qubits) : qubits_(std::move(qubits)) {
  std::sort(qubits_.begin(), qubits_.end());
  if (std::adjacent_find(qubits_.begin(), qubits_.end()) != qubits_.end()) {
    throw std::invalid_argument("QubitSet contains duplicate indices");
  }
}

QubitSet QubitSet::range(std::size_t begin, std::size_t end) {
  std::vector<std::size_t> q;
  for (std::size_t i = begin; i < end; ++i) q.push_back(i);
  return QubitSet(std::move(q));
}

QubitSet QubitSet::from_mask(std::uint64_t mask, std::size_t n) {
  std::vector<std::size_t> q;
  for (std::size_t i = 0; i < n; ++i) {
    if ((mask >> i) & 1U) q.push_back(i);
  }
  return QubitSet(std::move(q));
}

std::uint64_t QubitSet::mask() const {
  std::uint64_t m = 0;
  for (std::size_t q : qubits_) m |= std::uint64_t{1} << q;
  return m;
}

QubitSet QubitSet::complement(std::size_t n) const {
  std::vector<std::size_t> rest;
  for (std::size_t i = 0; i < n; ++i) {
    if (!contains(i)) rest.push_back(i);
  }
  return QubitSet(std::move(rest));
}

bool QubitSet::contains(std::size_t q) const {
  return std::binary_search(qubits_.begin(), qubits_.end(), q);
}

void QubitSet::validate(std::size_t n) const {
  if (!qubits_.empty() && qubits_.back() >= n) {
    throw std::out_of_range("qubit " + std::to_string(qubits_.back()) + " out of range for " +
                            std::to_string(n) + "-qubit register");
  }
}

std::string QubitSet::to_string() const {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < qubits_.size(); ++i) os << (i ? "," : "") << qubits_[i];
  os << '}';
  return os.str();
}

// DensityMatrix --------------------------------------------------------------

DensityMatrix DensityMatrix::from_matrix(Matrix m) {
  if (m.rows() != m.cols()) throw InvalidStateError("density matrix must be square");
  const std::size_t n = qubits_for_dim(m.rows());
  check_capacity(n);
  const double defect = hermiticity_defect(m);
  if (defect > kHermitianTol) {
    throw InvalidStateError("matrix is not Hermitian (defect " + std::to_string(defect) + ")");
  }
  const Complex tr = m.trace();
  if (std::abs(tr - Complex{1.0, 0.0}) > kTraceTol) {
    throw InvalidStateError("trace " + std::to_string(tr.real()) + " differs from 1");
  }
  const std::vector<double> eig = hermitian_eigenvalues(m);
  if (eig.front() < -kEigenClamp) {
    throw InvalidStateError("negative eigenvalue " + std::to_string(eig.front()));
  }
  return DensityMatrix(n, std::move(m));
}

DensityMatrix DensityMatrix::from_diagonal(std::span<const double> probabilities) {
  const std::size_t n = qubits_for_dim(static_cast<Index>(probabilities.size()));
  check_capacity(n);
  double total = 0.0;
  for (double p : probabilities) {
    if (p < -kEigenClamp) throw InvalidStateError("negative probability");
    total += p;
  }
  if (std::abs(total - 1.0) > kTraceTol) throw InvalidStateError("probabilities do not sum to 1");
  Matrix m = Matrix::Zero(idx(probabilities.size()), idx(probabilities.size()));
  for (std::size_t i = 0; i < probabilities.size(); ++i) {
    m(idx(i), idx(i)) = std::max(probabilities[i], 0.0);
  }
  return DensityMatrix(n, std::move(m));
}

DensityMatrix DensityMatrix::pure(const Vector& psi) {
  const std::size_t n = qubits_for_dim(psi.size());
  check_capacity(n);
  if (std::abs(psi.squaredNorm() - 1.0) > kTraceTol) {
    throw InvalidStateError("state vector is not normalized");
  }
  return DensityMatrix(n, psi * psi.adjoint());
}

DensityMatrix DensityMatrix::basis(std::string_view bits) {
  if (bits.empty()) throw std::invalid_argument("empty basis label");
  check_capacity(bits.size());
  std::uint64_t index = 0;
  for (char c : bits) {
    if (c != '0' && c != '1') throw std::invalid_argument("basis label must be a 0/1 string");
    index = (index << 1) | static_cast<std::uint64_t>(c - '0');
  }
  const Index dim = Index{1} << bits.size();
  Matrix m = Matrix::Zero(dim, dim);
  m(idx(index), idx(index)) = 1.0;
  return DensityMatrix(bits.size(), std::move(m));
}

DensityMatrix DensityMatrix::maximally_mixed(std::size_t n) {
  if (n == 0) throw std::invalid_argument("register needs at least one qubit");
  check_capacity(n);
  const Index dim = Index{1} << n;
  Matrix m = Matrix::Identity(dim, dim) / static_cast<double>(dim);
  return DensityMatrix(n, std::move(m));
}

DensityMatrix DensityMatrix::qubit(const Bloch& r) {
  if (r.norm() > 1.0 + 1e-12) throw InvalidStateError("Bloch vector longer than 1");
  Matrix m = 0.5 * (identity2() + bloch_operator(r));
  return DensityMatrix(1, std::move(m));
}

DensityMatrix DensityMatrix::trusted(Matrix m) {
  const std::size_t n = qubits_for_dim(m.rows());
  return DensityMatrix(n, std::move(m));
}

bool DensityMatrix::is_diagonal(double tol) const {
  for (Index c = 0; c < data_.cols(); ++c) {
    for (Index r = 0; r < data_.rows(); ++r) {
      if (r != c && std::abs(data_(r, c)) > tol) return false;
    }
  }
  return true;
}

std::vector<double> DensityMatrix::diagonal() const {
  std::vector<double> d(dim());
  for (std::size_t i = 0; i < d.size(); ++i) d[i] = data_(idx(i), idx(i)).real();
  return d;
}

// Operators ------------------------------------------------------------------

Matrix2 identity2() { return Matrix2::Identity(); }

Matrix2 pauli_x() {
  Matrix2 m;
  m << 0, 1, 1, 0;
  return m;
}

Matrix2 pauli_y() {
  Matrix2 m;
  m << 0, Complex(0, -1), Complex(0, 1), 0;
  return m;
}

Matrix2 pauli_z() {
  Matrix2 m;
  m << 1, 0, 0, -1;
  return m;
}

Matrix2 bloch_operator(const Bloch& r) {
  return r.x() * pauli_x() + r.y() * pauli_y() + r.z() * pauli_z();
}

Matrix2 pauli(char label) {
  switch (label) {
    case 'x': case 'X': return pauli_x();
    case 'y': case 'Y': return pauli_y();
    case 'z': case 'Z': return pauli_z();
    default: throw std::invalid_argument(std::string("unknown Pauli label '") + label + "'");
  }
}

Matrix cnot() {
  Matrix m = Matrix::Zero(4, 4);
  m(0, 0) = 1;
  m(1, 1) = 1;
  m(2, 3) = 1;
  m(3, 2) = 1;
  return m;
}

double hermiticity_defect(const Matrix& m) {
  if (m.rows() != m.cols()) return std::numeric_limits<double>::infinity();
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

bool is_unitary(const Matrix& u, double tol) {
  if (u.rows() != u.cols()) return false;
  const Matrix defect = u.adjoint() * u - Matrix::Identity(u.rows(), u.cols());
  return defect.cwiseAbs().maxCoeff() <= tol;
}

// Composition and reduction ----------------------------------------------------

DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b) {
  const std::size_t n = a.num_qubits() + b.num_qubits();
  check_capacity(n);
  const Index da = idx(a.dim());
  const Index db = idx(b.dim());
  Matrix out(da * db, da * db);
  for (Index i = 0; i < da; ++i) {
    for (Index j = 0; j < da; ++j) {
      out.block(i * db, j * db, db, db) = a.matrix()(i, j) * b.matrix();
    }
  }
  return DensityMatrix::trusted(std::move(out));
}

DensityMatrix tensor_all(std::span<const DensityMatrix> factors) {
  if (factors.empty()) throw std::invalid_argument("tensor_all needs at least one factor");
  DensityMatrix acc = factors.front();
  for (std::size_t i = 1; i < factors.size(); ++i) acc = tensor(acc, factors[i]);
  return acc;
}

DensityMatrix partial_trace(const DensityMatrix& rho, const QubitSet& keep) {
  const std::size_t n = rho.num_qubits();
  if (keep.empty()) throw std::invalid_argument("partial_trace needs a non-empty keep set");
  keep.validate(n);
  const QubitSet traced = keep.complement(n);
  const std::uint64_t dk = std::uint64_t{1} << keep.size();
  const std::uint64_t dt = std::uint64_t{1} << traced.size();

  std::vector<std::uint64_t> keep_off(dk);
  std::vector<std::uint64_t> trace_off(dt);
  for (std::uint64_t i = 0; i < dk; ++i) keep_off[i] = detail::scatter_bits(i, keep.indices(), n);
  for (std::uint64_t t = 0; t < dt; ++t) {
    trace_off[t] = detail::scatter_bits(t, traced.indices(), n);
  }

  const Matrix& m = rho.matrix();
  Matrix out = Matrix::Zero(idx(dk), idx(dk));
  for (std::uint64_t j = 0; j < dk; ++j) {
    for (std::uint64_t i = 0; i < dk; ++i) {
      Complex sum = 0.0;
      for (std::uint64_t t = 0; t < dt; ++t) {
        sum += m(idx(keep_off[i] | trace_off[t]), idx(keep_off[j] | trace_off[t]));
      }
      out(idx(i), idx(j)) = sum;
    }
  }
  return DensityMatrix::trusted(std::move(out));
}

DensityMatrix permute_qubits(const DensityMatrix& rho, std::span<const std::size_t> order) {
  const std::size_t n = rho.num_qubits();
  if (order.size() != n) throw std::invalid_argument("permutation length must equal qubit count");
  check_targets(order, n);
  const std::uint64_t dim = rho.dim();
  // new index i has new qubit j = old qubit order[j], so gathering the old
  // index's bits in `order` yields the new index.
  std::vector<std::uint64_t> new_of_old(dim);
  for (std::uint64_t old = 0; old < dim; ++old) {
    new_of_old[old] = detail::gather_bits(old, order, n);
  }
  Matrix out(idx(dim), idx(dim));
  for (std::uint64_t c = 0; c < dim; ++c) {
    for (std::uint64_t r = 0; r < dim; ++r) {
      out(idx(new_of_old[r]), idx(new_of_old[c])) = rho.matrix()(idx(r), idx(c));
    }
  }
  return DensityMatrix::trusted(std::move(out));
}

// Spectra and entropies ------------------------------------------------------------

std::vector<double> hermitian_eigenvalues(const Matrix& m) {
  const double defect = hermiticity_defect(m);
  if (defect > kHermitianTol) {
    throw std::invalid_argument("eigensolve requires a Hermitian matrix (defect " +
                                std::to_string(defect) + ")");
  }
  if (m.rows() == 1) return {m(0, 0).real()};
  Eigen::SelfAdjointEigenSolver<Matrix> solver(m, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw std::runtime_error("Hermitian eigensolve failed");
  const Eigen::VectorXd& ev = solver.eigenvalues();
  return std::vector<double>(ev.data(), ev.data() + ev.size());
}

Spectrum eigen_spectrum(const DensityMatrix& rho) {
  std::vector<double> ev = hermitian_eigenvalues(rho.matrix());
  for (double& v : ev) {
    if (v < -kEigenClamp) throw InvalidStateError("negative eigenvalue " + std::to_string(v));
    if (v < 0.0) v = 0.0;
  }
  const double total = std::accumulate(ev.begin(), ev.end(), 0.0);
  for (double& v : ev) v /= total;
  std::sort(ev.begin(), ev.end(), std::greater<>());
  return Spectrum{std::move(ev)};
}

double shannon_entropy(std::span<const double> probabilities) {
  double s = 0.0;
  for (double p : probabilities) {
    if (p > 0.0) s -= p * std::log2(p);
  }
  return s;
}

double von_neumann_entropy(const Spectrum& spectrum) {
  return shannon_entropy(spectrum.values);
}

double von_neumann_entropy(const DensityMatrix& rho) {
  if (rho.is_diagonal()) {
    std::vector<double> d = rho.diagonal();
    for (double& p : d) p = std::max(p, 0.0);
    return shannon_entropy(d);
  }
  return von_neumann_entropy(eigen_spectrum(rho));
}

double binary_entropy(double x) {
  constexpr double slack = 1e-12;
  if (!(x >= -slack && x <= 1.0 + slack)) {
    throw std::domain_error("binary_entropy argument " + std::to_string(x) + " outside [0, 1]");
  }
  x = std::clamp(x, 0.0, 1.0);
  const double p[2] = {x, 1.0 - x};
  return shannon_entropy(p);
}

// Channels -----------------------------------------------------------------------

DensityMatrix dephase_computational(const DensityMatrix& rho, const QubitSet& qubits) {
  const std::size_t n = rho.num_qubits();
  qubits.validate(n);
  std::uint64_t mask = 0;
  for (std::size_t q : qubits) mask |= std::uint64_t{1} << detail::bit_of(q, n);
  Matrix out = rho.matrix();
  for (Index c = 0; c < out.cols(); ++c) {
    for (Index r = 0; r < out.rows(); ++r) {
      if ((static_cast<std::uint64_t>(r) ^ static_cast<std::uint64_t>(c)) & mask) out(r, c) = 0.0;
    }
  }
  return DensityMatrix::trusted(std::move(out));
}

DensityMatrix dephase_all(const DensityMatrix& rho) {
  return dephase_computational(rho, QubitSet::range(0, rho.num_qubits()));
}

DensityMatrix apply_unitary(const DensityMatrix& rho, const Matrix& u,
                            std::span<const std::size_t> targets) {
  const std::size_t n = rho.num_qubits();
  check_targets(targets, n);
  const Index sub = Index{1} << targets.size();
  if (u.rows() != sub || u.cols() != sub) {
    throw std::invalid_argument("unitary dimension does not match the number of targets");
  }
  if (!is_unitary(u)) throw std::invalid_argument("operator is not unitary");
  // (U M^dagger) with M = U rho equals U rho U^dagger.
  const Matrix left = apply_left(rho.matrix(), u, targets, n);
  Matrix out = apply_left(left.adjoint(), u, targets, n);
  return DensityMatrix::trusted(std::move(out));
}

DensityMatrix apply_unitary(const DensityMatrix& rho, const Matrix& u, const QubitSet& targets) {
  return apply_unitary(rho, u, std::span<const std::size_t>(targets.indices()));
}

Matrix partial_transpose(const DensityMatrix& rho, const QubitSet& subset) {
  const std::size_t n = rho.num_qubits();
  subset.validate(n);
  std::uint64_t mask = 0;
  for (std::size_t q : subset) mask |= std::uint64_t{1} << detail::bit_of(q, n);
  const Matrix& m = rho.matrix();
  Matrix out(m.rows(), m.cols());
  for (Index c = 0; c < m.cols(); ++c) {
    for (Index r = 0; r < m.rows(); ++r) {
      const auto ur = static_cast<std::uint64_t>(r);
      const auto uc = static_cast<std::uint64_t>(c);
      const std::uint64_t r2 = (ur & ~mask) | (uc & mask);
      const std::uint64_t c2 = (uc & ~mask) | (ur & mask);
      out(r, c) = m(idx(r2), idx(c2));
    }
  }
  return out;
}

double expectation(const DensityMatrix& rho, const Matrix& obs) {
  if (obs.rows() != idx(rho.dim()) || obs.cols() != idx(rho.dim())) {
    throw std::invalid_argument("observable dimension does not match the state");
  }
  if (hermiticity_defect(obs) > kHermitianTol) {
    throw std::invalid_argument("observable is not Hermitian");
  }
  const Complex value = (rho.matrix().cwiseProduct(obs.transpose())).sum();
  if (std::abs(value.imag()) > 1e-9) {
    throw std::runtime_error("expectation has imaginary part " + std::to_string(value.imag()));
  }
  return value.real();
}

Bloch bloch_vector(const DensityMatrix& rho, std::size_t q) {
  const DensityMatrix marginal = partial_trace(rho, QubitSet{q});
  const Matrix& m = marginal.matrix();
  return Bloch(2.0 * m(1, 0).real(), 2.0 * m(1, 0).imag(), (m(0, 0) - m(1, 1)).real());
}

// Contraction helpers ------------------------------------------------------------

namespace detail {

void contract_qubit(const Matrix& in, std::size_t m, std::size_t q, const Matrix2& op,
                    Matrix& out) {
  const std::size_t pos = bit_of(q, m);
  const Index half = in.rows() / 2;
  out.resize(half, half);
  for (Index c = 0; c < half; ++c) {
    const auto c0 = idx(insert_bit(static_cast<std::uint64_t>(c), pos, 0));
    const auto c1 = idx(insert_bit(static_cast<std::uint64_t>(c), pos, 1));
    for (Index r = 0; r < half; ++r) {
      const auto r0 = idx(insert_bit(static_cast<std::uint64_t>(r), pos, 0));
      const auto r1 = idx(insert_bit(static_cast<std::uint64_t>(r), pos, 1));
      // sum_{a,b} op(b, a) in(r_a, c_b)
      out(r, c) = op(0, 0) * in(r0, c0) + op(1, 0) * in(r0, c1) + op(0, 1) * in(r1, c0) +
                  op(1, 1) * in(r1, c1);
    }
  }
}

Complex product_trace(const Matrix& rho, std::span<const Matrix2> ops) {
  std::size_t m = ops.size();
  Matrix current = rho;
  Matrix next;
  while (m > 0) {
    contract_qubit(current, m, m - 1, ops[m - 1], next);
    std::swap(current, next);
    --m;
  }
  return current(0, 0);
}

Matrix2 contract_all_but(const Matrix& rho, std::span<const Matrix2> ops, std::size_t site) {
  std::size_t m = ops.size();
  Matrix current = rho;
  Matrix next;
  // Contract from the last qubit down; `site` stays and shifts to position
  // `site` of the shrinking register as later qubits disappear.
  for (std::size_t q = ops.size(); q-- > 0;) {
    if (q == site) continue;
    contract_qubit(current, m, q, ops[q], next);
    std::swap(current, next);
    --m;
  }
  return current;
}

}  // namespace detail

}  // namespace multicorr
