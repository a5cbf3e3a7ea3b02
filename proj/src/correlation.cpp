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

#include "multicorr/correlation.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "contraction.hpp"

namespace multicorr {

namespace {

void require_odd_register(std::size_t n) {
  if (n < 3 || n % 2 == 0) {
    throw std::out_of_range("closed forms hold for odd n >= 3, got n = " + std::to_string(n));
  }
}

}  // namespace

Cut Cut::from_mask(std::uint64_t mask_a, std::size_t n) {
  Cut cut{QubitSet::from_mask(mask_a, n), {}};
  cut.b = cut.a.complement(n);
  cut.validate(n);
  return cut;
}

void Cut::validate(std::size_t n) const {
  if (a.empty() || b.empty()) throw std::invalid_argument("both sides of a cut must be non-empty");
  a.validate(n);
  b.validate(n);
  if (a.size() + b.size() != n || (a.mask() & b.mask()) != 0) {
    throw std::invalid_argument("cut " + to_string() + " does not partition " +
                                std::to_string(n) + " qubits");
  }
}

std::string Cut::to_string() const { return a.to_string() + ":" + b.to_string(); }

std::vector<Cut> enumerate_cuts(std::size_t n) {
  if (n < 2) throw std::invalid_argument("cuts need at least two qubits");
  check_capacity(n);
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  std::vector<Cut> cuts;
  cuts.reserve((std::size_t{1} << (n - 1)) - 1);
  for (std::uint64_t mask = 1; mask < full; mask += 2) cuts.push_back(Cut::from_mask(mask, n));
  return cuts;
}

double mutual_information(const DensityMatrix& rho, const Cut& cut) {
  cut.validate(rho.num_qubits());
  return von_neumann_entropy(partial_trace(rho, cut.a)) +
         von_neumann_entropy(partial_trace(rho, cut.b)) - von_neumann_entropy(rho);
}

double closed_form_mi(std::size_t n, std::size_t k) {
  require_odd_register(n);
  if (k < 1 || k > n - 1) throw std::out_of_range("cut size k must lie in [1, n-1]");
  const double nn = static_cast<double>(n);
  if (n == 3) return 1.0 / 3.0;
  if (k == 1 || k == n - 1) return 1.0;
  if (k == 2 || k == n - 2) return binary_entropy(2.0 / nn) + (nn - 2.0) / nn;
  return 1.0 + binary_entropy(static_cast<double>(k) / nn);
}

double closed_form_entropy(std::size_t n, std::size_t k) {
  require_odd_register(n);
  if (k < 1 || k > n) throw std::out_of_range("subset size k must lie in [1, n]");
  const double nn = static_cast<double>(n);
  const double kk = static_cast<double>(k);
  if (k == 1) return 1.0;
  if (k == 2) return 1.0 + binary_entropy(2.0 / nn);
  return 1.0 + binary_entropy(kk / nn) + (kk / nn) * std::log2(kk);
}

double pairwise_mutual_information(const DensityMatrix& rho, std::size_t i, std::size_t j) {
  if (i == j) throw std::invalid_argument("pairwise mutual information needs two distinct qubits");
  const std::size_t n = rho.num_qubits();
  if (i >= n || j >= n) throw std::out_of_range("qubit index out of range");
  const DensityMatrix pair = partial_trace(rho, QubitSet{i, j});
  return mutual_information(pair, Cut{QubitSet{0}, QubitSet{1}});
}

Eigen::MatrixXd pairwise_mutual_information_matrix(const DensityMatrix& rho) {
  const auto n = static_cast<Eigen::Index>(rho.num_qubits());
  Eigen::MatrixXd mi = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i + 1; j < n; ++j) {
      mi(i, j) = mi(j, i) = pairwise_mutual_information(rho, static_cast<std::size_t>(i),
                                                        static_cast<std::size_t>(j));
    }
  }
  return mi;
}

DensityMatrix product_of_marginals(const DensityMatrix& rho, const Cut& cut) {
  const std::size_t n = rho.num_qubits();
  cut.validate(n);
  const Matrix rho_a = partial_trace(rho, cut.a).matrix();
  const Matrix rho_b = partial_trace(rho, cut.b).matrix();
  const std::uint64_t dim = rho.dim();
  std::vector<Eigen::Index> ia(dim);
  std::vector<Eigen::Index> ib(dim);
  for (std::uint64_t i = 0; i < dim; ++i) {
    ia[i] = static_cast<Eigen::Index>(detail::gather_bits(i, cut.a.indices(), n));
    ib[i] = static_cast<Eigen::Index>(detail::gather_bits(i, cut.b.indices(), n));
  }
  Matrix out(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  for (std::uint64_t c = 0; c < dim; ++c) {
    for (std::uint64_t r = 0; r < dim; ++r) {
      out(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
          rho_a(ia[r], ia[c]) * rho_b(ib[r], ib[c]);
    }
  }
  return DensityMatrix::trusted(std::move(out));
}

bool is_product(const DensityMatrix& rho, const Cut& cut, double tol) {
  const DensityMatrix prod = product_of_marginals(rho, cut);
  return (rho.matrix() - prod.matrix()).cwiseAbs().maxCoeff() < tol;
}

double ppt_min_eigenvalue(const DensityMatrix& rho, const Cut& cut) {
  cut.validate(rho.num_qubits());
  return hermitian_eigenvalues(partial_transpose(rho, cut.a)).front();
}

GenuineCorrelationVerdict genuine_classical_correlations(const DensityMatrix& rho,
                                                         const CutAnalysisOptions& options) {
  const std::size_t n = rho.num_qubits();
  const std::vector<Cut> cuts = enumerate_cuts(n);
  const double total_entropy = von_neumann_entropy(rho);

  GenuineCorrelationVerdict verdict;
  verdict.cuts.resize(cuts.size());
  auto analyse = [&](std::size_t i) {
    CorrelationReport& row = verdict.cuts[i];
    row.cut = cuts[i];
    row.mutual_information = von_neumann_entropy(partial_trace(rho, cuts[i].a)) +
                             von_neumann_entropy(partial_trace(rho, cuts[i].b)) - total_entropy;
    row.is_product = is_product(rho, cuts[i], options.product_tol);
    if (options.with_ppt) row.ppt_min_eigenvalue = ppt_min_eigenvalue(rho, cuts[i]);
  };

  const std::size_t threads = std::min(std::max<std::size_t>(options.jobs, 1), cuts.size());
  if (threads <= 1) {
    for (std::size_t i = 0; i < cuts.size(); ++i) analyse(i);
  } else {
    std::vector<std::thread> workers;
    for (std::size_t t = 0; t < threads; ++t) {
      workers.emplace_back([&, t] {
        for (std::size_t i = t; i < cuts.size(); i += threads) analyse(i);
      });
    }
    for (auto& w : workers) w.join();
  }

  verdict.genuine = true;
  for (const auto& row : verdict.cuts) {
    if (row.is_product) {
      verdict.genuine = false;
      verdict.separating_cut = row.cut;
      break;
    }
  }
  return verdict;
}

}  // namespace multicorr
