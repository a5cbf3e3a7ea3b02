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

#include "multicorr/states.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace multicorr {

namespace {

using Index = Eigen::Index;

void require_qubits(std::size_t n, std::size_t min, const char* what) {
  if (n < min) {
    throw std::invalid_argument(std::string(what) + " needs at least " + std::to_string(min) +
                                " qubits");
  }
  check_capacity(n);
}

void require_odd(std::size_t n) {
  if (n < 3 || n % 2 == 0) {
    throw ScopeError("the W/W-bar mixture is defined for odd n >= 3, got n = " +
                     std::to_string(n));
  }
}

double standard_normal(Rng& rng) {
  // Box-Muller on our own uniforms keeps draws identical across standard
  // libraries.
  const double u1 = 1.0 - uniform01(rng);
  const double u2 = uniform01(rng);
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

// Uniform superposition over the basis strings with exactly `ones` ones.
Vector hamming_shell(std::size_t n, int ones) {
  const Index dim = Index{1} << n;
  Vector psi = Vector::Zero(dim);
  for (Index i = 0; i < dim; ++i) {
    if (std::popcount(static_cast<std::uint64_t>(i)) == ones) psi(i) = 1.0;
  }
  return psi / psi.norm();
}

// Shannon mutual information between the first qubit and the rest of a
// diagonal distribution.
double first_qubit_mi(const std::vector<double>& p, std::size_t n) {
  const std::size_t half = std::size_t{1} << (n - 1);
  double a[2] = {0.0, 0.0};
  std::vector<double> b(half, 0.0);
  for (std::size_t i = 0; i < p.size(); ++i) {
    a[i / half] += p[i];
    b[i % half] += p[i];
  }
  return shannon_entropy(a) + shannon_entropy(b) - shannon_entropy(p);
}

}  // namespace

Bloch random_unit_vector(Rng& rng) {
  for (;;) {
    Bloch v(standard_normal(rng), standard_normal(rng), standard_normal(rng));
    const double norm = v.norm();
    if (norm > 1e-12) return v / norm;
  }
}

Matrix random_unitary(std::size_t dim, Rng& rng) {
  const auto d = static_cast<Index>(dim);
  Matrix g(d, d);
  for (Index c = 0; c < d; ++c) {
    for (Index r = 0; r < d; ++r) g(r, c) = Complex(standard_normal(rng), standard_normal(rng));
  }
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ();
  const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  // Fix column phases so the distribution is Haar.
  for (Index c = 0; c < d; ++c) {
    const Complex diag = r(c, c);
    const double mag = std::abs(diag);
    if (mag > 0.0) q.col(c) *= diag / mag;
  }
  return q;
}

DensityMatrix ghz_classical(std::size_t n) {
  require_qubits(n, 1, "ghz_classical");
  std::vector<double> p(std::size_t{1} << n, 0.0);
  p.front() = 0.5;
  p.back() += 0.5;
  return DensityMatrix::from_diagonal(p);
}

DensityMatrix parity_even_classical(std::size_t n) {
  require_qubits(n, 2, "parity_even_classical");
  const std::size_t dim = std::size_t{1} << n;
  const double weight = std::ldexp(1.0, 1 - static_cast<int>(n));
  std::vector<double> p(dim, 0.0);
  for (std::size_t i = 0; i < dim; ++i) {
    if (std::popcount(i) % 2 == 0) p[i] = weight;
  }
  return DensityMatrix::from_diagonal(p);
}

DensityMatrix w_state(std::size_t n) {
  require_qubits(n, 2, "w_state");
  return DensityMatrix::pure(hamming_shell(n, 1));
}

DensityMatrix wbar_state(std::size_t n) {
  require_qubits(n, 2, "wbar_state");
  return DensityMatrix::pure(hamming_shell(n, static_cast<int>(n) - 1));
}

DensityMatrix kaszlikowski(std::size_t n) {
  require_odd(n);
  check_capacity(n);
  Matrix m = 0.5 * (w_state(n).matrix() + wbar_state(n).matrix());
  return DensityMatrix::trusted(std::move(m));
}

DensityMatrix dephased_kaszlikowski(std::size_t n) { return dephase_all(kaszlikowski(n)); }

DensityMatrix reduced_kaszlikowski_closed_form(std::size_t n, std::size_t k) {
  require_odd(n);
  if (k < 1 || k > n) {
    throw std::out_of_range("subset size k = " + std::to_string(k) + " outside [1, n]");
  }
  check_capacity(k);
  const std::size_t dim = std::size_t{1} << k;
  const double nn = static_cast<double>(n);
  const double bulk = static_cast<double>(n - k) / (2.0 * nn);
  const double single = 1.0 / (2.0 * nn);
  std::vector<double> p(dim, 0.0);
  p[0] += bulk;
  p[dim - 1] += bulk;
  for (std::size_t i = 0; i < dim; ++i) {
    const auto ones = static_cast<std::size_t>(std::popcount(i));
    if (ones == 1) p[i] += single;
    if (ones == k - 1) p[i] += single;
  }
  return DensityMatrix::from_diagonal(p);
}

DensityMatrix random_product_classical(std::size_t n, Rng& rng) {
  require_qubits(n, 1, "random_product_classical");
  std::vector<DensityMatrix> factors;
  for (std::size_t i = 0; i < n; ++i) {
    factors.push_back(DensityMatrix::qubit(Bloch(0.0, 0.0, 2.0 * uniform01(rng) - 1.0)));
  }
  return tensor_all(factors);
}

DensityMatrix random_product_classical(std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  return random_product_classical(n, rng);
}

DensityMatrix random_correlated_classical(std::size_t n, Rng& rng) {
  require_qubits(n, 2, "random_correlated_classical");
  const std::size_t dim = std::size_t{1} << n;
  std::vector<double> p(dim);
  for (int round = 0; round < 1000; ++round) {
    double total = 0.0;
    for (double& x : p) {
      x = -std::log(1.0 - uniform01(rng));
      total += x;
    }
    for (double& x : p) x /= total;
    if (first_qubit_mi(p, n) > 0.05) return DensityMatrix::from_diagonal(p);
  }
  throw std::runtime_error("random_correlated_classical: no correlated draw in 1000 rounds");
}

DensityMatrix random_correlated_classical(std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  return random_correlated_classical(n, rng);
}

DensityMatrix random_product_quantum(std::size_t n, Rng& rng) {
  require_qubits(n, 1, "random_product_quantum");
  std::vector<DensityMatrix> factors;
  for (std::size_t i = 0; i < n; ++i) {
    const double radius = std::cbrt(uniform01(rng));
    factors.push_back(DensityMatrix::qubit(radius * random_unit_vector(rng)));
  }
  return tensor_all(factors);
}

DensityMatrix random_product_quantum(std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  return random_product_quantum(n, rng);
}

DensityMatrix random_mixed(std::size_t n, Rng& rng) {
  require_qubits(n, 1, "random_mixed");
  const auto d = static_cast<Index>(std::size_t{1} << n);
  Matrix g(d, d);
  for (Index c = 0; c < d; ++c) {
    for (Index r = 0; r < d; ++r) g(r, c) = Complex(standard_normal(rng), standard_normal(rng));
  }
  Matrix m = g * g.adjoint();
  m /= m.trace().real();
  m = 0.5 * (m + m.adjoint());
  return DensityMatrix::trusted(std::move(m));
}

DensityMatrix random_product_across(std::size_t n, const QubitSet& a, Rng& rng) {
  require_qubits(n, 2, "random_product_across");
  a.validate(n);
  const QubitSet b = a.complement(n);
  if (a.empty() || b.empty()) throw std::invalid_argument("both sides must be non-empty");
  const DensityMatrix joined = tensor(random_mixed(a.size(), rng), random_mixed(b.size(), rng));
  // Tensor position i holds a[i], position |a| + i holds b[i].
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < a.size(); ++i) order[a[i]] = i;
  for (std::size_t i = 0; i < b.size(); ++i) order[b[i]] = a.size() + i;
  return permute_qubits(joined, order);
}

namespace {

struct FamilyName {
  Family family;
  std::string_view name;
};

constexpr FamilyName kFamilyNames[] = {
    {Family::kGhzClassical, "ghz_classical"},
    {Family::kParityEven, "parity_even"},
    {Family::kW, "w"},
    {Family::kWbar, "wbar"},
    {Family::kKaszlikowski, "kaszlikowski"},
    {Family::kDephasedKaszlikowski, "dephased_kaszlikowski"},
    {Family::kReducedKaszlikowski, "reduced_kaszlikowski"},
    {Family::kRandomProduct, "random_product"},
    {Family::kRandomClassical, "random_classical"},
};

}  // namespace

std::string_view family_name(Family family) {
  for (const auto& entry : kFamilyNames) {
    if (entry.family == family) return entry.name;
  }
  return "unknown";
}

Family parse_family(std::string_view name) {
  for (const auto& entry : kFamilyNames) {
    if (entry.name == name) return entry.family;
  }
  throw std::invalid_argument("unknown state family '" + std::string(name) + "'");
}

DensityMatrix make_state(const StateSpec& spec) {
  const std::uint64_t seed = spec.seed.value_or(0);
  switch (spec.family) {
    case Family::kGhzClassical: return ghz_classical(spec.n);
    case Family::kParityEven: return parity_even_classical(spec.n);
    case Family::kW: return w_state(spec.n);
    case Family::kWbar: return wbar_state(spec.n);
    case Family::kKaszlikowski: return kaszlikowski(spec.n);
    case Family::kDephasedKaszlikowski: return dephased_kaszlikowski(spec.n);
    case Family::kReducedKaszlikowski:
      if (!spec.k) throw std::invalid_argument("reduced_kaszlikowski needs k");
      return reduced_kaszlikowski_closed_form(spec.n, *spec.k);
    case Family::kRandomProduct: return random_product_quantum(spec.n, seed);
    case Family::kRandomClassical: return random_correlated_classical(spec.n, seed);
  }
  throw std::invalid_argument("unhandled state family");
}

}  // namespace multicorr
