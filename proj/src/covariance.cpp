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

#include "multicorr/covariance.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <iomanip>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "contraction.hpp"
#include "multicorr/sphere_ascent.hpp"

namespace multicorr {

namespace {

constexpr char kPauliLabels[3] = {'x', 'y', 'z'};
constexpr double kTieTol = 1e-12;

std::vector<Bloch> marginal_bloch_vectors(const DensityMatrix& rho) {
  std::vector<Bloch> r(rho.num_qubits());
  for (std::size_t q = 0; q < r.size(); ++q) r[q] = bloch_vector(rho, q);
  return r;
}

// axis . (sigma - r I): the centered traceless part of a unit observable.
Matrix2 centered(const Bloch& axis, const Bloch& r) {
  return bloch_operator(axis) - axis.dot(r) * identity2();
}

double real_checked(Complex value) {
  if (std::abs(value.imag()) > 1e-9) {
    throw std::runtime_error("covariance has imaginary part " + std::to_string(value.imag()));
  }
  return value.real();
}

// Walks the Pauli tree from the last qubit to the first. `tensor` acts on
// qubits [0, m); `index` accumulates the base-3 assignment with qubit 0 as
// the most significant digit.
void scan_subtree(const Matrix& tensor, std::size_t m, std::size_t n, std::uint64_t index,
                  const std::vector<std::array<Matrix2, 3>>& ops, std::vector<double>& values) {
  if (m == 0) {
    values[index] = real_checked(tensor(0, 0));
    return;
  }
  const std::size_t q = m - 1;
  std::uint64_t weight = 1;
  for (std::size_t j = q + 1; j < n; ++j) weight *= 3;
  Matrix next;
  for (std::size_t k = 0; k < 3; ++k) {
    detail::contract_qubit(tensor, m, q, ops[q][k], next);
    scan_subtree(next, m - 1, n, index + k * weight, ops, values);
  }
}

class CovarianceObjective : public SphereObjective {
 public:
  explicit CovarianceObjective(const DensityMatrix& rho)
      : rho_(rho.matrix()), bloch_(marginal_bloch_vectors(rho)) {}

  std::size_t sites() const override { return bloch_.size(); }

  double value(std::span<const Bloch> axes) const override {
    return std::abs(detail::product_trace(rho_, centered_ops(axes)).real());
  }

  std::function<double(const Bloch&)> restrict_to(std::size_t site,
                                                  std::span<const Bloch> axes) const override {
    // Cov is linear in the axis at `site`: Cov = g . axis.
    const Matrix2 rest = detail::contract_all_but(rho_, centered_ops(axes), site);
    Bloch g;
    for (int k = 0; k < 3; ++k) {
      const Matrix2 c = pauli(kPauliLabels[k]) - bloch_[site][k] * identity2();
      g[k] = (c * rest).trace().real();
    }
    return [g](const Bloch& axis) { return std::abs(g.dot(axis)); };
  }

 private:
  std::vector<Matrix2> centered_ops(std::span<const Bloch> axes) const {
    std::vector<Matrix2> ops(axes.size());
    for (std::size_t q = 0; q < axes.size(); ++q) ops[q] = centered(axes[q], bloch_[q]);
    return ops;
  }

  Matrix rho_;
  std::vector<Bloch> bloch_;
};

}  // namespace

SiteObservable SiteObservable::pauli(char label) {
  switch (label) {
    case 'x': case 'X': return {Bloch::UnitX(), 1.0, 0.0};
    case 'y': case 'Y': return {Bloch::UnitY(), 1.0, 0.0};
    case 'z': case 'Z': return {Bloch::UnitZ(), 1.0, 0.0};
    default: throw std::invalid_argument(std::string("unknown Pauli label '") + label + "'");
  }
}

Matrix2 SiteObservable::matrix() const {
  return gain * bloch_operator(axis) + offset * identity2();
}

std::optional<char> SiteObservable::pauli_label() const {
  if (gain != 1.0 || offset != 0.0) return std::nullopt;
  for (int k = 0; k < 3; ++k) {
    if (axis == Bloch::Unit(k)) return kPauliLabels[k];
  }
  return std::nullopt;
}

LocalObservable LocalObservable::from_paulis(std::string_view labels) {
  LocalObservable obs;
  for (char c : labels) obs.sites.push_back(SiteObservable::pauli(c));
  return obs;
}

LocalObservable LocalObservable::from_axes(std::span<const Bloch> axes) {
  LocalObservable obs;
  for (const Bloch& a : axes) obs.sites.push_back({a.normalized(), 1.0, 0.0});
  return obs;
}

std::string LocalObservable::to_string() const {
  std::string labels;
  for (const auto& site : sites) {
    const auto label = site.pauli_label();
    if (!label) {
      labels.clear();
      break;
    }
    labels.push_back(*label);
  }
  if (!labels.empty() || sites.empty()) return labels;

  std::ostringstream os;
  os.imbue(std::locale::classic());
  os << std::setprecision(12) << '[';
  for (std::size_t i = 0; i < sites.size(); ++i) {
    const auto& s = sites[i];
    os << (i ? ", " : "") << '(' << s.axis.x() << ' ' << s.axis.y() << ' ' << s.axis.z() << ')';
    if (s.gain != 1.0 || s.offset != 0.0) os << '*' << s.gain << '+' << s.offset;
  }
  os << ']';
  return os.str();
}

double covariance(const DensityMatrix& rho, const LocalObservable& obs) {
  const std::size_t n = rho.num_qubits();
  if (obs.size() != n) {
    throw std::invalid_argument("observable covers " + std::to_string(obs.size()) +
                                " qubits, state has " + std::to_string(n));
  }
  std::vector<Matrix2> ops(n);
  for (std::size_t q = 0; q < n; ++q) {
    const SiteObservable& site = obs.sites[q];
    if (std::abs(site.axis.norm() - 1.0) > 1e-12) {
      throw std::invalid_argument("observable axis at qubit " + std::to_string(q) +
                                  " is not a unit vector");
    }
    const Matrix2 x = site.matrix();
    const DensityMatrix marginal = partial_trace(rho, QubitSet{q});
    const double mean = real_checked((marginal.matrix() * x).trace());
    ops[q] = x - mean * identity2();
  }
  return real_checked(detail::product_trace(rho.matrix(), ops));
}

CovarianceScanResult pauli_scan(const DensityMatrix& rho, double tol, std::size_t jobs) {
  const std::size_t n = rho.num_qubits();
  check_capacity(n);
  const std::vector<Bloch> r = marginal_bloch_vectors(rho);
  std::vector<std::array<Matrix2, 3>> ops(n);
  for (std::size_t q = 0; q < n; ++q) {
    for (int k = 0; k < 3; ++k) ops[q][k] = centered(Bloch::Unit(k), r[q]);
  }

  std::uint64_t total = 1;
  for (std::size_t q = 0; q < n; ++q) total *= 3;
  std::vector<double> values(total, 0.0);

  // Split the tree on the last `split` qubits; each branch is independent
  // and writes a disjoint slice of `values`.
  jobs = std::max<std::size_t>(jobs, 1);
  std::size_t split = 0;
  std::uint64_t branches = 1;
  while (split < n && branches < jobs * 4 && jobs > 1) {
    ++split;
    branches *= 3;
  }

  auto run_branch = [&](std::uint64_t branch) {
    Matrix tensor = rho.matrix();
    Matrix next;
    std::size_t m = n;
    std::uint64_t index = 0;
    std::uint64_t weight = 1;
    std::uint64_t rest = branch;
    for (std::size_t s = 0; s < split; ++s) {
      const std::size_t q = m - 1;
      const std::uint64_t k = rest % 3;
      rest /= 3;
      detail::contract_qubit(tensor, m, q, ops[q][k], next);
      std::swap(tensor, next);
      index += k * weight;
      weight *= 3;
      --m;
    }
    scan_subtree(tensor, m, n, index, ops, values);
  };

  if (branches == 1) {
    run_branch(0);
  } else {
    std::vector<std::thread> workers;
    const std::size_t threads = std::min<std::uint64_t>(jobs, branches);
    for (std::size_t t = 0; t < threads; ++t) {
      workers.emplace_back([&, t] {
        for (std::uint64_t b = t; b < branches; b += threads) run_branch(b);
      });
    }
    for (auto& w : workers) w.join();
  }

  CovarianceScanResult result;
  result.tol = tol;
  result.evaluated_count = total;
  for (double v : values) result.max_abs = std::max(result.max_abs, std::abs(v));
  const double cutoff = result.max_abs - kTieTol * std::max(1.0, result.max_abs);
  std::uint64_t best = 0;
  for (std::uint64_t i = 0; i < total; ++i) {
    if (std::abs(values[i]) >= cutoff) {
      best = i;
      break;
    }
  }
  result.value_at_argmax = values[best];
  std::string labels(n, 'x');
  for (std::size_t q = n; q-- > 0;) {
    labels[q] = kPauliLabels[best % 3];
    best /= 3;
  }
  result.argmax = LocalObservable::from_paulis(labels);
  result.all_below_tol = result.max_abs < tol;
  return result;
}

CovarianceScanResult optimize_covariance(const DensityMatrix& rho,
                                         const CovarianceOptimizerOptions& options) {
  if (options.restarts < 1) throw std::invalid_argument("at least one restart is required");
  const CovarianceObjective objective(rho);

  std::vector<std::vector<Bloch>> starts;
  if (options.start_from_pauli_scan) {
    const CovarianceScanResult scan = pauli_scan(rho, options.tol, options.jobs);
    std::vector<Bloch> axes;
    for (const auto& site : scan.argmax.sites) axes.push_back(site.axis);
    starts.push_back(std::move(axes));
  }

  SphereAscentOptions ascent;
  ascent.restarts = options.restarts;
  ascent.seed = options.seed;
  const SphereAscentResult best = maximize_on_spheres(objective, ascent, starts);

  CovarianceScanResult result;
  result.tol = options.tol;
  result.argmax = LocalObservable::from_axes(best.axes);
  result.value_at_argmax = covariance(rho, result.argmax);
  result.max_abs = std::abs(result.value_at_argmax);
  result.evaluated_count = best.line_searches;
  result.all_below_tol = result.max_abs < options.tol;
  result.converged = best.converged;
  result.restarts = best.restarts_run;
  return result;
}

}  // namespace multicorr
