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

#include "multicorr/measurement.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "contraction.hpp"
#include "multicorr/sphere_ascent.hpp"

namespace multicorr {

namespace {

constexpr std::uint64_t kMaxOutcomes = std::uint64_t{1} << 24;

// Entropy of an unnormalized positive matrix after normalization, tolerant
// of the rounding that division by a small weight amplifies.
double normalized_entropy(const Matrix& unnormalized) {
  const Matrix herm = 0.5 * (unnormalized + unnormalized.adjoint());
  std::vector<double> ev = hermitian_eigenvalues(herm);
  for (double& v : ev) v = std::max(v, 0.0);
  const double total = std::accumulate(ev.begin(), ev.end(), 0.0);
  if (total <= 0.0) return 0.0;
  for (double& v : ev) v /= total;
  return shannon_entropy(ev);
}

// Branches over every outcome of qubits [0, m) of `tensor`, contracting the
// last remaining qubit first; `visit` receives the accumulated mixed-radix
// index and the fully contracted remainder (on `stop` qubits).
template <typename Visit>
void branch_outcomes(const Matrix& tensor, std::size_t m, std::size_t stop, std::uint64_t index,
                     std::uint64_t weight, std::span<const SiteMeasurement> sites,
                     const Visit& visit) {
  if (m == stop) {
    visit(index, tensor);
    return;
  }
  const std::size_t q = m - 1;
  const SiteMeasurement& site = sites[q - stop];
  Matrix next;
  for (std::size_t o = 0; o < site.arity(); ++o) {
    detail::contract_qubit(tensor, m, q, site.elements[o], next);
    branch_outcomes(next, m - 1, stop, index + o * weight, weight * site.arity(), sites, visit);
  }
}

std::vector<std::size_t> decompose(std::uint64_t flat, std::span<const std::size_t> arities) {
  std::vector<std::size_t> digits(arities.size());
  for (std::size_t q = arities.size(); q-- > 0;) {
    digits[q] = flat % arities[q];
    flat /= arities[q];
  }
  return digits;
}

class HvObjective : public SphereObjective {
 public:
  HvObjective(const DensityMatrix& rho, const Cut& cut) : rho_(rho), cut_(cut) {}
  std::size_t sites() const override { return cut_.b.size(); }
  double value(std::span<const Bloch> axes) const override {
    return hv_classical_correlation(rho_, cut_, ProductMeasurement::projective(axes));
  }

 private:
  const DensityMatrix& rho_;
  const Cut& cut_;
};

}  // namespace

// Measurements ------------------------------------------------------------------

SiteMeasurement SiteMeasurement::projective(const Bloch& axis) {
  const double norm = axis.norm();
  if (std::abs(norm - 1.0) > 1e-9) throw std::invalid_argument("measurement axis must be a unit vector");
  const Bloch unit = axis / norm;
  return {{0.5 * (identity2() + bloch_operator(unit)), 0.5 * (identity2() - bloch_operator(unit))},
          false};
}

SiteMeasurement SiteMeasurement::computational() { return projective(Bloch::UnitZ()); }

SiteMeasurement SiteMeasurement::ic_povm() {
  SiteMeasurement m;
  for (int k = 0; k < 3; ++k) {
    const Matrix2 s = bloch_operator(Bloch::Unit(k));
    m.elements.push_back((identity2() + s) / 6.0);
    m.elements.push_back((identity2() - s) / 6.0);
  }
  m.informationally_complete = true;
  return m;
}

void SiteMeasurement::validate() const {
  if (elements.empty()) throw std::invalid_argument("POVM has no elements");
  Matrix2 sum = Matrix2::Zero();
  for (const Matrix2& e : elements) {
    if (hermiticity_defect(e) > kPovmTol) throw std::invalid_argument("POVM element not Hermitian");
    if (hermitian_eigenvalues(e).front() < -kPovmTol) {
      throw std::invalid_argument("POVM element is not positive");
    }
    sum += e;
  }
  if ((sum - identity2()).cwiseAbs().maxCoeff() > kPovmTol) {
    throw std::invalid_argument("POVM elements do not sum to the identity");
  }
}

ProductMeasurement ProductMeasurement::computational(std::size_t n) {
  return {std::vector<SiteMeasurement>(n, SiteMeasurement::computational())};
}

ProductMeasurement ProductMeasurement::projective(std::span<const Bloch> axes) {
  ProductMeasurement m;
  for (const Bloch& a : axes) m.sites.push_back(SiteMeasurement::projective(a));
  return m;
}

bool ProductMeasurement::informationally_complete() const {
  return !sites.empty() && std::all_of(sites.begin(), sites.end(), [](const SiteMeasurement& s) {
    return s.informationally_complete;
  });
}

ProductMeasurement ic_povm_measurement(std::size_t n) {
  return {std::vector<SiteMeasurement>(n, SiteMeasurement::ic_povm())};
}

// Distributions ------------------------------------------------------------------

double OutcomeDistribution::at(std::span<const std::size_t> outcome) const {
  if (outcome.size() != arities.size()) throw std::invalid_argument("outcome arity mismatch");
  std::uint64_t flat = 0;
  for (std::size_t q = 0; q < outcome.size(); ++q) {
    if (outcome[q] >= arities[q]) throw std::out_of_range("outcome index out of range");
    flat = flat * arities[q] + outcome[q];
  }
  return probabilities[flat];
}

double OutcomeDistribution::total() const {
  return std::accumulate(probabilities.begin(), probabilities.end(), 0.0);
}

OutcomeDistribution measure(const DensityMatrix& rho, const ProductMeasurement& m) {
  const std::size_t n = rho.num_qubits();
  if (m.size() != n) {
    throw std::invalid_argument("measurement covers " + std::to_string(m.size()) +
                                " qubits, state has " + std::to_string(n));
  }
  if (m.informationally_complete() && n > kMaxIcQubits) {
    throw CapacityError("IC outcome table limited to " + std::to_string(kMaxIcQubits) + " qubits");
  }
  OutcomeDistribution d;
  std::uint64_t outcomes = 1;
  for (const auto& site : m.sites) {
    site.validate();
    d.arities.push_back(site.arity());
    outcomes *= site.arity();
    if (outcomes > kMaxOutcomes) throw CapacityError("outcome table too large");
  }
  d.informationally_complete = m.informationally_complete();
  d.probabilities.assign(outcomes, 0.0);

  branch_outcomes(rho.matrix(), n, 0, 0, 1, m.sites, [&](std::uint64_t index, const Matrix& t) {
    double p = t(0, 0).real();
    if (p < -kNegativeProbabilityClamp) {
      throw InvalidStateError("negative outcome probability " + std::to_string(p));
    }
    d.probabilities[index] = std::max(p, 0.0);
  });

  if (std::abs(d.total() - 1.0) > kDistributionSumTol) {
    throw InvalidStateError("outcome probabilities sum to " + std::to_string(d.total()));
  }
  return d;
}

bool distribution_factorizes(const OutcomeDistribution& d, const Cut& cut, double tol) {
  const std::size_t n = d.arities.size();
  cut.validate(n);
  std::uint64_t size_a = 1;
  std::uint64_t size_b = 1;
  for (std::size_t q : cut.a) size_a *= d.arities[q];
  for (std::size_t q : cut.b) size_b *= d.arities[q];

  std::vector<std::uint64_t> index_a(d.probabilities.size());
  std::vector<std::uint64_t> index_b(d.probabilities.size());
  std::vector<double> pa(size_a, 0.0);
  std::vector<double> pb(size_b, 0.0);
  for (std::uint64_t flat = 0; flat < d.probabilities.size(); ++flat) {
    const std::vector<std::size_t> digits = decompose(flat, d.arities);
    std::uint64_t ia = 0;
    std::uint64_t ib = 0;
    for (std::size_t q : cut.a) ia = ia * d.arities[q] + digits[q];
    for (std::size_t q : cut.b) ib = ib * d.arities[q] + digits[q];
    index_a[flat] = ia;
    index_b[flat] = ib;
    pa[ia] += d.probabilities[flat];
    pb[ib] += d.probabilities[flat];
  }
  for (std::uint64_t flat = 0; flat < d.probabilities.size(); ++flat) {
    const double gap = std::abs(d.probabilities[flat] - pa[index_a[flat]] * pb[index_b[flat]]);
    if (!(gap < tol)) return false;
  }
  return true;
}

// Henderson-Vedral ------------------------------------------------------------------

double hv_classical_correlation(const DensityMatrix& rho, const Cut& cut,
                                const ProductMeasurement& m_b) {
  const std::size_t n = rho.num_qubits();
  cut.validate(n);
  if (m_b.size() != cut.b.size()) {
    throw std::invalid_argument("measurement covers " + std::to_string(m_b.size()) +
                                " qubits, side B has " + std::to_string(cut.b.size()));
  }
  for (const auto& site : m_b.sites) site.validate();

  // Bring A to the front so that contracting the trailing |B| qubits leaves
  // the unnormalized conditional A states.
  std::vector<std::size_t> order(cut.a.begin(), cut.a.end());
  order.insert(order.end(), cut.b.begin(), cut.b.end());
  const DensityMatrix arranged = permute_qubits(rho, order);
  const double entropy_a = von_neumann_entropy(partial_trace(rho, cut.a));

  double conditional = 0.0;
  branch_outcomes(arranged.matrix(), n, cut.a.size(), 0, 1, m_b.sites,
                  [&](std::uint64_t, const Matrix& sigma) {
                    const double p = sigma.trace().real();
                    if (p < kNegligibleOutcome) return;
                    conditional += p * normalized_entropy(sigma);
                  });
  return entropy_a - conditional;
}

HvOptimum optimize_hv(const DensityMatrix& rho, const Cut& cut, const HvOptions& options) {
  cut.validate(rho.num_qubits());
  const HvObjective objective(rho, cut);
  const std::vector<std::vector<Bloch>> starts{
      std::vector<Bloch>(cut.b.size(), Bloch::UnitZ())};

  SphereAscentOptions ascent;
  ascent.restarts = options.restarts;
  ascent.seed = options.seed;
  const SphereAscentResult best = maximize_on_spheres(objective, ascent, starts);

  HvOptimum out;
  out.axes = best.axes;
  out.value = best.value;
  out.computational_value =
      hv_classical_correlation(rho, cut, ProductMeasurement::computational(cut.b.size()));
  out.converged = best.converged;
  out.restarts = best.restarts_run;
  return out;
}

// IC reconstruction ------------------------------------------------------------------

DensityMatrix reconstruct_from_ic(const OutcomeDistribution& d) {
  const std::size_t n = d.arities.size();
  if (!d.informationally_complete || n == 0 ||
      std::any_of(d.arities.begin(), d.arities.end(), [](std::size_t a) { return a != 6; })) {
    throw std::invalid_argument("reconstruction requires six-outcome IC POVM statistics");
  }
  if (n > kMaxIcQubits) {
    throw CapacityError("IC reconstruction limited to " + std::to_string(kMaxIcQubits) + " qubits");
  }

  // Dual frame: rho = sum_o p(o) (x)_q D_{o_q}, D_{+-k} = (I +- 3 sigma_k) / 2.
  std::array<Matrix2, 6> dual;
  for (int k = 0; k < 3; ++k) {
    const Matrix2 s = bloch_operator(Bloch::Unit(k));
    dual[2 * k] = 0.5 * (identity2() + 3.0 * s);
    dual[2 * k + 1] = 0.5 * (identity2() - 3.0 * s);
  }

  // Mode-by-mode transform of the 6^n table into 4^n operator entries, the
  // entry index of qubit q being 2 * row_bit + col_bit.
  std::vector<Complex> current(d.probabilities.begin(), d.probabilities.end());
  std::uint64_t prefix = 1;
  std::uint64_t suffix = 1;
  for (std::size_t q = 1; q < n; ++q) suffix *= 6;
  for (std::size_t q = 0; q < n; ++q) {
    std::vector<Complex> next(prefix * 4 * suffix, 0.0);
    for (std::uint64_t p = 0; p < prefix; ++p) {
      for (std::size_t o = 0; o < 6; ++o) {
        for (std::uint64_t s = 0; s < suffix; ++s) {
          const Complex v = current[(p * 6 + o) * suffix + s];
          if (v == 0.0) continue;
          for (std::size_t e = 0; e < 4; ++e) {
            next[(p * 4 + e) * suffix + s] += v * dual[o](static_cast<Eigen::Index>(e / 2),
                                                           static_cast<Eigen::Index>(e % 2));
          }
        }
      }
    }
    current = std::move(next);
    prefix *= 4;
    if (q + 1 < n) suffix /= 6;
  }

  const auto dim = static_cast<Eigen::Index>(std::uint64_t{1} << n);
  Matrix out(dim, dim);
  for (std::uint64_t flat = 0; flat < current.size(); ++flat) {
    std::uint64_t row = 0;
    std::uint64_t col = 0;
    std::uint64_t rest = flat;
    for (std::size_t q = n; q-- > 0;) {
      const std::uint64_t e = rest % 4;
      rest /= 4;
      row |= (e / 2) << (n - 1 - q);
      col |= (e % 2) << (n - 1 - q);
    }
    out(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) = current[flat];
  }
  return DensityMatrix::trusted(std::move(out));
}

}  // namespace multicorr
