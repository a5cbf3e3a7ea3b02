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

#include "multicorr/property_suite.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "multicorr/correlation.hpp"
#include "multicorr/covariance.hpp"
#include "multicorr/measurement.hpp"
#include "multicorr/postulate.hpp"
#include "multicorr/qmat.hpp"
#include "multicorr/states.hpp"

namespace multicorr {

namespace {

// Records the worst violation and the first failing trial.
class Tracker {
 public:
  explicit Tracker(std::size_t trials) { result_.trials = trials; }

  void expect_within(double error, double tol, std::size_t trial, const std::string& what = "") {
    result_.worst = std::max(result_.worst, error);
    if (!(error <= tol)) fail(trial, what + " error " + format(error) + " > " + format(tol));
  }

  void expect(bool ok, std::size_t trial, const std::string& what) {
    if (!ok) fail(trial, what);
  }

  PropertyResult finish() {
    if (result_.detail.empty()) result_.detail = "worst " + format(result_.worst);
    return result_;
  }

 private:
  static std::string format(double v) {
    std::ostringstream os;
    os.imbue(std::locale::classic());
    os.precision(3);
    os << v;
    return os.str();
  }

  void fail(std::size_t trial, const std::string& what) {
    if (result_.failures++ == 0) result_.detail = "trial " + std::to_string(trial) + ": " + what;
  }

  PropertyResult result_;
};

std::size_t pick(Rng& rng, std::size_t lo, std::size_t hi) {
  return lo + static_cast<std::size_t>(uniform01(rng) * static_cast<double>(hi - lo + 1));
}

double max_abs(const Matrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

QubitSet random_nonempty_proper_subset(std::size_t n, Rng& rng) {
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  const std::uint64_t mask = 1 + static_cast<std::uint64_t>(uniform01(rng) * static_cast<double>(full - 1));
  return QubitSet::from_mask(std::min(mask, full - 1), n);
}

Cut random_cut(std::size_t n, Rng& rng) {
  const QubitSet a = random_nonempty_proper_subset(n, rng);
  return Cut{a, a.complement(n)};
}

LocalObservable random_observable(std::size_t n, Rng& rng, bool affine) {
  LocalObservable obs;
  for (std::size_t q = 0; q < n; ++q) {
    SiteObservable site{random_unit_vector(rng), 1.0, 0.0};
    if (affine) {
      site.gain = 4.0 * uniform01(rng) - 2.0;
      site.offset = 4.0 * uniform01(rng) - 2.0;
    }
    obs.sites.push_back(site);
  }
  return obs;
}

const std::size_t kOddSizes[] = {3, 5, 7};

// qmat -----------------------------------------------------------------------------

PropertyResult partial_trace_recovers_factor(std::size_t trials, std::uint64_t seed) {
  Rng rng(seed);
  Tracker t(trials);
  for (std::size_t i = 0; i < trials; ++i) {
    const std::size_t na = pick(rng, 1, 2);
    const std::size_t nb = pick(rng, 1, 2);
    const DensityMatrix a = random_mixed(na, rng);
    const DensityMatrix b = random_mixed(nb, rng);
    const DensityMatrix back = partial_trace(tensor(a, b), QubitSet::range(0, na));
    t.expect_within(max_abs(back.matrix() - a.matrix()), 1e-10, i);
  }
  return t.finish();
}

PropertyResult entropy_additive(std::size_t trials, std::uint64_t seed) {
  Rng rng(seed);
  Tracker t(trials);
  for (std::size_t i = 0; i < trials; ++i) {
    const DensityMatrix a = random_mixed(pick(rng, 1, 2), rng);
    const DensityMatrix b = random_mixed(pick(rng, 1, 2), rng);
    const double gap =
        von_neumann_entropy(tensor(a, b)) - von_neumann_entropy(a) - von_neumann_entropy(b);
    t.expect_within(std::abs(gap), 1e-8, i);
  }
  return t.finish();
}

PropertyResult entropy_unitarily_invariant(std::size_t trials, std::uint64_t seed) {
  Rng rng(seed);
  Tracker t(trials);
  for (std::size_t i = 0; i < trials; ++i) {
    const std::size_t n = pick(rng, 1, 3);
    const DensityMatrix rho = random_mixed(n, rng);
    const Matrix u = random_unitary(std::size_t{1} << n, rng);
    const DensityMatrix rotated = apply_unitary(rho, u, QubitSet::range(0, n));
    t.expect_within(std::abs(von_neumann_entropy(rotated) - von_neumann_entropy(rho)), 1e-8, i);
  }
  return t.finish();
}

PropertyResult dephasing_idempotent(std::size_t trials, std::uint64_t seed) {
  Rng rng(seed);
  Tracker t(trials);
  for (std::size_t i = 0; i < trials; ++i) {
    const std::size_t n = pick(rng, 1, 3);
    const DensityMatrix rho = random_mixed(n, rng);
    const QubitSet qubits = QubitSet::from_mask(
        static_cast<std::uint64_t>(uniform01(rng) * static_cast<double>(1U << n)), n);
    const DensityMatrix once = dephase_computational(rho, qubits);
    const DensityMatrix twice = dephase_computational(once, qubits);
    t.expect_within(max_abs(twice.matrix() - once.matrix()), 1e-12, i);
  }
  return t.finish();
}

PropertyResult partial_trace_preserves_invariants(std::size_t trials, std::uint64_t seed) {
  Rng rng(seed);
  Tracker t(trials);
  for (std::size_t i = 0; i < trials; ++i) {
    const std::size_t n = pick(rng, 2, 4);
    const DensityMatrix rho = random_mixed(n, rng);
    const QubitSet keep = random_nonempty_proper_subset(n, rng);
    const DensityMatrix reduced = partial_trace(rho, keep);
    t.expect_within(std::abs(reduced.trace() - 1.0), 1e-10, i, "trace");
    t.expect_within(hermiticity_defect(reduced.matrix()), 1e-10, i, "hermiticity");
    const double lowest = hermitian_eigenvalues(reduced.matrix()).front();
    t.expect(lowest >= -kEigenClamp, i, "negative eigenvalue " + std::to_string(lowest));
  }
  return t.finish();
}

PropertyResult partial_transpose_involution(std::size_t trials, std::uint64_t seed) {
  Rng rng(seed);
  Tracker t(trials);
  for (std::size_t i = 0; i < trials; ++i) {
    const std::size_t n = pick(rng, 2, 4);
    const DensityMatrix rho = random_mixed(n, rng);
    const QubitSet subset = random_nonempty_proper_subset(n, rng);
    const DensityMatrix once = DensityMatrix::trusted(partial_transpose(rho, subset));
    const Matrix twice = partial_transpose(once, subset);
    t.expect_within(max_abs(twice - rho.matrix()), 0.0, i);
  }
  return t.finish();
}

// states ---------------------------------------------------------------------------

PropertyResult constructors_valid(std::size_t trials, std::uint64_t seed) {
  Rng rng(seed);
  Tracker t(trials);
  for (std::size_t i = 0; i < trials; ++i) {
    const std::size_t odd = kOddSizes[pick(rng, 0, 2)];
    const std::size_t n = pick(rng, 2, 6);
    const std::uint64_t s = rng();
    DensityMatrix rho = DensityMatrix::maximally_mixed(1);
    switch (i % 9) {
      case 0: rho = ghz_classical(n); break;
      case 1: rho = parity_even_classical(n); break;
      case 2: rho = w_state(n); break;
      case 3: rho = wbar_state(n); break;
      case 4: rho = kaszlikowski(odd); break;
      case 5: rho = reduced_kaszlikowski_closed_form(odd, pick(rng, 1, odd)); break;
      case 6: rho = random_product_classical(n, s); break;
      case 7: rho = random_correlated_classical(n, s); break;
      default: rho = random_product_quantum(n, s); break;
    }
    try {
      DensityMatrix::from_matrix(rho.matrix());
    } catch (const std::exception& e) {
      t.expect(false, i, e.what());
    }
  }
  return t.finish();
}

PropertyResult mixture_has_zero_z_means(std::size_t trials, std::uint64_t) {
  Tracker t(trials);
  for (std::size_t i = 0; i < trials; ++i) {
    const std::size_t n = kOddSizes[i % 3];
    const DensityMatrix rho = kaszlikowski(n);
    const std::size_t site = i % n;
    t.expect_within(std::abs(bloch_vector(rho, site).z()), 1e-12, i);
  }
  return t.finish();
}

PropertyResult parity_even_unit_mi(std::size_t trials, std::uint64_t seed) {
  Rng rng(seed);
  Tracker t(trials);
  for (std::size_t i = 0; i < trials; ++i) {
    const std::size_t n = pick(rng, 3, 5);
    const DensityMatrix rho = parity_even_classical(n);
    t.expect_within(std::abs(mutual_information(rho, random_cut(n, rng)) - 1.0), 1e-9, i);
  }
  return t.finish();
}

PropertyResult ghz_pairs_unit_mi(std::size_t trials, std::uint64_t seed) {
  Rng rng(seed);
  Tracker t(trials);
  for (std::size_t i = 0; i < trials; ++i) {
    const std::size_t n = pick(rng, 3, 5);
    const std::size_t q1 = pick(rng, 0, n - 1);
    const std::size_t q2 = (q1 + pick(rng, 1, n - 1)) % n;
    const double mi = pairwise_mutual_information(ghz_classical(n), q1, q2);
    t.expect_within(std::abs(mi - 1.0), 1e-9, i);
  }
  return t.finish();
}

PropertyResult closed_form_marginal_matches(std::size_t trials, std::uint64_t seed) {
  Rng rng(seed);
  Tracker t(trials);
  for (std::size_t i = 0; i < trials; ++i) {
    const std::size_t n = kOddSizes[i % 3];
    std::vector<std::size_t> all(n);
    std::iota(all.begin(), all.end(), 0);
    // Random subset of random size; the marginal depends only on its size.
    std::shuffle(all.begin(), all.end(), rng);
    const std::size_t k = pick(rng, 1, n);
    const QubitSet keep(std::vector<std::size_t>(all.begin(), all.begin() + static_cast<long>(k)));
    const DensityMatrix routed = partial_trace(dephased_kaszlikowski(n), keep);
    const DensityMatrix closed = reduced_kaszlikowski_closed_form(n, k);
    t.expect_within(max_abs(routed.matrix() - closed.matrix()), 1e-12, i);
  }
  return t.finish();
}

// covariance ---------------------------------------------------------------------

PropertyResult covariance_affine_reduction(std::size_t trials, std::uint64_t seed) {
  Rng rng(seed);
  Tracker t(trials);
  for (std::size_t i = 0; i < trials; ++i) {
    const std::size_t n = pick(rng, 2, 4);
    const DensityMatrix rho = random_mixed(n, rng);
    const LocalObservable affine = random_observable(n, rng, true);
    LocalObservable unit = affine;
    double gains = 1.0;
    for (auto& site : unit.sites) {
      gains *= site.gain;
      site.gain = 1.0;
      site.offset = 0.0;
    }
    t.expect_within(std::abs(covariance(rho, affine) - gains * covariance(rho, unit)), 1e-10, i);
  }
  return t.finish();
}

PropertyResult covariance_multilinear(std::size_t trials, std::uint64_t seed) {
  Rng rng(seed);
  Tracker t(trials);
  for (std::size_t i = 0; i < trials; ++i) {
    const std::size_t n = pick(rng, 2, 4);
    const DensityMatrix rho = random_mixed(n, rng);
    const LocalObservable obs = random_observable(n, rng, true);
    LocalObservable scaled = obs;
    const double c = 6.0 * uniform01(rng) - 3.0;
    scaled.sites[pick(rng, 0, n - 1)].gain *= c;
    t.expect_within(std::abs(covariance(rho, scaled) - c * covariance(rho, obs)), 1e-10, i);
  }
  return t.finish();
}

PropertyResult covariance_zero_on_products(std::size_t trials, std::uint64_t seed) {
  Rng rng(seed);
  Tracker t(trials);
  for (std::size_t i = 0; i < trials; ++i) {
    const std::size_t n = pick(rng, 2, 5);
    const DensityMatrix rho = random_product_quantum(n, rng);
    t.expect_within(std::abs(covariance(rho, random_observable(n, rng, true))), 1e-10, i);
  }
  return t.finish();
}

PropertyResult covariance_vanishes_on_mixture(std::size_t trials, std::uint64_t seed) {
  Tracker t(trials);
  for (std::size_t i = 0; i < trials; ++i) {
    const std::size_t n = kOddSizes[i % 3];
    const DensityMatrix rho = kaszlikowski(n);
    CovarianceOptimizerOptions options;
    options.seed = seed + i;
    options.restarts = i < 3 ? 32 : 4;
    // Later trials start from random axes only.
    options.start_from_pauli_scan = i < 3;
    const CovarianceScanResult opt = optimize_covariance(rho, options);
    t.expect_within(opt.max_abs, kOptimizerVanishTol, i, "optimizer n=" + std::to_string(n));
    if (i < 3) {
      t.expect_within(pauli_scan(rho).max_abs, kExactVanishTol, i,
                      "pauli scan n=" + std::to_string(n));
    }
  }
  return t.finish();
}

PropertyResult covariance_permutation_symmetric(std::size_t trials, std::uint64_t seed) {
  Rng rng(seed);
  Tracker t(trials);
  for (std::size_t i = 0; i < trials; ++i) {
    const std::size_t n = pick(rng, 3, 5);
    DensityMatrix rho = ghz_classical(n);
    switch (i % 4) {
      case 1: rho = parity_even_classical(n); break;
      case 2: rho = kaszlikowski(n % 2 ? n : n - 1); break;
      case 3: rho = w_state(n); break;
      default: break;
    }
    const std::size_t m = rho.num_qubits();
    const LocalObservable obs = random_observable(m, rng, true);
    std::vector<std::size_t> perm(m);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    LocalObservable permuted;
    for (std::size_t q = 0; q < m; ++q) permuted.sites.push_back(obs.sites[perm[q]]);
    t.expect_within(std::abs(covariance(rho, permuted) - covariance(rho, obs)), 1e-10, i);
  }
  return t.finish();
}

// correlation --------------------------------------------------------------------

PropertyResult mi_matches_closed_form(std::size_t trials, std::uint64_t seed) {
  Rng rng(seed);
  Tracker t(trials);
  for (std::size_t i = 0; i < trials; ++i) {
    const std::size_t n = kOddSizes[i % 3];
    const Cut cut = random_cut(n, rng);
    const double mi = mutual_information(dephased_kaszlikowski(n), cut);
    t.expect_within(std::abs(mi - closed_form_mi(n, cut.a.size())), 1e-9, i, cut.to_string());
  }
  return t.finish();
}

PropertyResult entropy_matches_closed_form(std::size_t trials, std::uint64_t seed) {
  Rng rng(seed);
  Tracker t(trials);
  for (std::size_t i = 0; i < trials; ++i) {
    const std::size_t n = kOddSizes[i % 3];
    const std::size_t k = pick(rng, 1, n);
    const DensityMatrix marginal = partial_trace(dephased_kaszlikowski(n), QubitSet::range(0, k));
    t.expect_within(std::abs(von_neumann_entropy(marginal) - closed_form_entropy(n, k)), 1e-9, i);
  }
  return t.finish();
}

PropertyResult mi_nonnegative_symmetric(std::size_t trials, std::uint64_t seed) {
  Rng rng(seed);
  Tracker t(trials);
  for (std::size_t i = 0; i < trials; ++i) {
    const std::size_t n = pick(rng, 2, 4);
    const DensityMatrix rho = random_mixed(n, rng);
    const Cut cut = random_cut(n, rng);
    const double forward = mutual_information(rho, cut);
    const double backward = mutual_information(rho, cut.swapped());
    t.expect(forward >= -1e-9, i, "negative mutual information");
    t.expect_within(std::abs(forward - backward), 1e-9, i, "asymmetry");
  }
  return t.finish();
}

PropertyResult product_iff_zero_mi(std::size_t trials, std::uint64_t seed) {
  Rng rng(seed);
  Tracker t(trials);
  for (std::size_t i = 0; i < trials; ++i) {
    const std::size_t n = pick(rng, 2, 4);
    const Cut cut = random_cut(n, rng);
    const DensityMatrix rho =
        (i % 2 == 0) ? random_product_across(n, cut.a, rng) : random_mixed(n, rng);
    const bool product = is_product(rho, cut);
    const bool vanishing = mutual_information(rho, cut) < kMutualInfoTol;
    t.expect(product == vanishing, i, "product flag disagrees with mutual information");
    t.expect(product == (i % 2 == 0), i, "unexpected product flag");
  }
  return t.finish();
}

PropertyResult single_party_products_imply_full_product(std::size_t trials, std::uint64_t seed) {
  Rng rng(seed);
  Tracker t(trials);
  std::size_t fired = 0;
  for (std::size_t i = 0; i < trials; ++i) {
    const std::size_t n = pick(rng, 2, 4);
    const DensityMatrix rho =
        (i % 2 == 0) ? random_product_classical(n, rng) : random_correlated_classical(n, rng);
    bool all_single = true;
    for (std::size_t q = 0; q < n && all_single; ++q) {
      const QubitSet one{q};
      all_single = is_product(rho, Cut{one, one.complement(n)});
    }
    if (!all_single) continue;
    ++fired;
    std::vector<DensityMatrix> marginals;
    for (std::size_t q = 0; q < n; ++q) marginals.push_back(partial_trace(rho, QubitSet{q}));
    t.expect_within(max_abs(tensor_all(marginals).matrix() - rho.matrix()), 1e-9, i);
  }
  t.expect(fired > 0, trials, "antecedent never held");
  return t.finish();
}

PropertyResult cut_decision_matches_measurement_route(std::size_t trials, std::uint64_t seed) {
  Rng rng(seed);
  Tracker t(trials);
  for (std::size_t i = 0; i < trials; ++i) {
    const std::size_t n = 3;
    const DensityMatrix rho =
        (i % 2 == 0) ? random_product_across(n, random_nonempty_proper_subset(n, rng), rng)
                     : random_mixed(n, rng);
    const bool genuine = genuine_classical_correlations(rho).genuine;
    const OutcomeDistribution d = measure(rho, ic_povm_measurement(n));
    bool every_cut_correlated = true;
    for (const Cut& cut : enumerate_cuts(n)) {
      every_cut_correlated = every_cut_correlated && !distribution_factorizes(d, cut);
    }
    t.expect(genuine == every_cut_correlated, i, "decision disagrees with IC statistics");
    t.expect(genuine == (i % 2 == 1), i, "unexpected decision");
  }
  return t.finish();
}

// classical measure ------------------------------------------------------------------

SiteMeasurement random_povm(Rng& rng) {
  switch (pick(rng, 0, 2)) {
    case 0: return SiteMeasurement::projective(random_unit_vector(rng));
    case 1: return SiteMeasurement::ic_povm();
    default: {
      // Three-outcome trine-like POVM: w_i (I + a_i . sigma)/2 with
      // weights and axes chosen so the elements sum to I.
      const Bloch a = random_unit_vector(rng);
      const Bloch b = random_unit_vector(rng);
      const double w = 0.2 + 0.6 * uniform01(rng);
      SiteMeasurement m;
      const Matrix2 e0 = w * 0.5 * (identity2() + bloch_operator(a));
      const Matrix2 e1 = w * 0.5 * (identity2() - bloch_operator(a));
      m.elements = {e0 * 0.5 + (1 - w) * 0.5 * (identity2() + bloch_operator(b)),
                    (1 - w) * 0.5 * (identity2() - bloch_operator(b)), e1 + e0 * 0.5};
      return m;
    }
  }
}

PropertyResult born_rule_normalized(std::size_t trials, std::uint64_t seed) {
  Rng rng(seed);
  Tracker t(trials);
  for (std::size_t i = 0; i < trials; ++i) {
    const std::size_t n = pick(rng, 1, 3);
    const DensityMatrix rho = random_mixed(n, rng);
    ProductMeasurement m;
    for (std::size_t q = 0; q < n; ++q) m.sites.push_back(random_povm(rng));
    const OutcomeDistribution d = measure(rho, m);
    t.expect_within(std::abs(d.total() - 1.0), 1e-9, i, "sum");
    t.expect(*std::min_element(d.probabilities.begin(), d.probabilities.end()) >= 0.0, i,
             "negative probability");
  }
  return t.finish();
}

PropertyResult ic_factorization_iff_product(std::size_t trials, std::uint64_t seed) {
  Rng rng(seed);
  Tracker t(trials);
  for (std::size_t i = 0; i < trials; ++i) {
    const std::size_t n = pick(rng, 2, 3);
    const DensityMatrix rho =
        (i % 2 == 0) ? random_product_across(n, random_nonempty_proper_subset(n, rng), rng)
                     : random_mixed(n, rng);
    const OutcomeDistribution d = measure(rho, ic_povm_measurement(n));
    for (const Cut& cut : enumerate_cuts(n)) {
      t.expect(distribution_factorizes(d, cut) == is_product(rho, cut), i,
               "equivalence fails on " + cut.to_string());
    }
  }
  return t.finish();
}

PropertyResult hv_local_unitary_invariant(std::size_t trials, std::uint64_t seed) {
  Rng rng(seed);
  Tracker t(trials);
  for (std::size_t i = 0; i < trials; ++i) {
    const std::size_t n = pick(rng, 2, 3);
    const DensityMatrix rho = random_mixed(n, rng);
    const Cut cut = random_cut(n, rng);
    std::vector<Matrix> local(n);
    DensityMatrix rotated = rho;
    for (std::size_t q = 0; q < n; ++q) {
      local[q] = random_unitary(2, rng);
      rotated = apply_unitary(rotated, local[q], QubitSet{q});
    }
    ProductMeasurement m_b;
    ProductMeasurement m_b_rotated;
    for (std::size_t j = 0; j < cut.b.size(); ++j) {
      const SiteMeasurement base = SiteMeasurement::projective(random_unit_vector(rng));
      SiteMeasurement turned = base;
      const Matrix2 u = local[cut.b[j]];
      for (Matrix2& e : turned.elements) e = u * e * u.adjoint();
      m_b.sites.push_back(base);
      m_b_rotated.sites.push_back(turned);
    }
    const double gap = hv_classical_correlation(rotated, cut, m_b_rotated) -
                       hv_classical_correlation(rho, cut, m_b);
    t.expect_within(std::abs(gap), 1e-9, i);
  }
  return t.finish();
}

PropertyResult hv_equals_mi_on_diagonal(std::size_t trials, std::uint64_t seed) {
  Rng rng(seed);
  Tracker t(trials);
  for (std::size_t i = 0; i < trials; ++i) {
    const std::size_t n = pick(rng, 2, 4);
    const DensityMatrix rho =
        (i % 2 == 0) ? random_correlated_classical(n, rng) : random_product_classical(n, rng);
    const Cut cut = random_cut(n, rng);
    const double hv =
        hv_classical_correlation(rho, cut, ProductMeasurement::computational(cut.b.size()));
    t.expect_within(std::abs(hv - mutual_information(rho, cut)), 1e-9, i);
  }
  return t.finish();
}

PropertyResult hv_nonnegative_on_diagonal(std::size_t trials, std::uint64_t seed) {
  Rng rng(seed);
  Tracker t(trials);
  for (std::size_t i = 0; i < trials; ++i) {
    const std::size_t n = pick(rng, 2, 4);
    const DensityMatrix rho = random_correlated_classical(n, rng);
    const Cut cut = random_cut(n, rng);
    std::vector<Bloch> axes(cut.b.size());
    for (auto& a : axes) a = random_unit_vector(rng);
    const double hv = hv_classical_correlation(rho, cut, ProductMeasurement::projective(axes));
    t.expect(hv >= -1e-9, i, "negative value " + std::to_string(hv));
  }
  return t.finish();
}

// postulate ------------------------------------------------------------------------

Extension random_extension(std::size_t n, Rng& rng, bool identity_ops) {
  Extension ext;
  const std::size_t k = pick(rng, 1, 2);
  std::vector<std::size_t> parties(k);
  std::iota(parties.begin(), parties.end(), n);
  std::shuffle(parties.begin(), parties.end(), rng);
  for (std::size_t j = 0; j < k; ++j) {
    Ancilla anc;
    anc.owner = pick(rng, 0, n - 1);
    anc.new_party = parties[j];
    anc.state = DensityMatrix::qubit(std::cbrt(uniform01(rng)) * random_unit_vector(rng)).matrix();
    ext.ancillas.push_back(anc);
  }
  for (std::size_t p = 0; p < n; ++p) {
    std::vector<std::size_t> held{p};
    for (std::size_t j = 0; j < k; ++j) {
      if (ext.ancillas[j].owner == p) held.push_back(n + j);
    }
    std::shuffle(held.begin(), held.end(), rng);
    const Matrix u = identity_ops ? Matrix::Identity(Eigen::Index{1} << held.size(),
                                                     Eigen::Index{1} << held.size())
                                  : random_unitary(std::size_t{1} << held.size(), rng);
    ext.operations.push_back({p, u, held});
  }
  return ext;
}

PropertyResult extension_preserves_invariants(std::size_t trials, std::uint64_t seed) {
  Rng rng(seed);
  Tracker t(trials);
  for (std::size_t i = 0; i < trials; ++i) {
    const std::size_t n = pick(rng, 1, 3);
    const DensityMatrix rho = random_mixed(n, rng);
    const ExtendedState out = extend_state(rho, random_extension(n, rng, false));
    try {
      DensityMatrix::from_matrix(out.rho.matrix());
    } catch (const std::exception& e) {
      t.expect(false, i, e.what());
    }
    t.expect_within(std::abs(out.rho.trace() - 1.0), 1e-12, i, "trace");
  }
  return t.finish();
}

PropertyResult identity_extension_traces_back(std::size_t trials, std::uint64_t seed) {
  Rng rng(seed);
  Tracker t(trials);
  for (std::size_t i = 0; i < trials; ++i) {
    const std::size_t n = pick(rng, 1, 3);
    const DensityMatrix rho = random_mixed(n, rng);
    const ExtendedState out = extend_state(rho, random_extension(n, rng, true));
    const DensityMatrix back = partial_trace(out.rho, QubitSet::range(0, n));
    t.expect_within(max_abs(back.matrix() - rho.matrix()), 1e-12, i);
  }
  return t.finish();
}

PropertyResult nonlocal_operations_rejected(std::size_t trials, std::uint64_t seed) {
  Rng rng(seed);
  Tracker t(trials);
  for (std::size_t i = 0; i < trials; ++i) {
    const std::size_t n = pick(rng, 2, 3);
    const DensityMatrix rho = random_mixed(n, rng);
    Extension ext = random_extension(n, rng, false);
    // Party p reaches for a qubit held by another party.
    const std::size_t p = pick(rng, 0, n - 1);
    const std::size_t other = (p + pick(rng, 1, n - 1)) % n;
    ext.operations.push_back({p, random_unitary(4, rng), {p, other}});
    bool rejected = false;
    try {
      extend_state(rho, ext);
    } catch (const LocalityError&) {
      rejected = true;
    }
    t.expect(rejected, i, "cross-party operation accepted");
  }
  return t.finish();
}

PropertyResult counterexample_exact(std::size_t trials, std::uint64_t) {
  Tracker t(trials);
  const CounterexampleRecord record = covariance_counterexample();
  t.expect(record.verdict.value_before == 0.0, 0, "before != 0");
  t.expect(record.verdict.value_after == 1.0, 0, "after != 1");
  t.expect(record.verdict.postulate_violated, 0, "no violation reported");
  return t.finish();
}

}  // namespace

const std::vector<PropertyCheck>& property_checks() {
  static const std::vector<PropertyCheck> checks = {
      {"qmat", "partial trace recovers tensor factor", partial_trace_recovers_factor},
      {"qmat", "entropy additive under tensor", entropy_additive},
      {"qmat", "entropy invariant under unitaries", entropy_unitarily_invariant},
      {"qmat", "dephasing idempotent", dephasing_idempotent},
      {"qmat", "partial trace preserves state invariants", partial_trace_preserves_invariants},
      {"qmat", "partial transpose is an involution", partial_transpose_involution},
      {"states", "constructors satisfy state invariants", constructors_valid},
      {"states", "W/W-bar mixture has zero z means", mixture_has_zero_z_means},
      {"states", "parity-even state has unit MI on every cut", parity_even_unit_mi},
      {"states", "GHZ mixture pairs have unit MI", ghz_pairs_unit_mi},
      {"states", "closed-form marginal equals partial trace", closed_form_marginal_matches},
      {"covariance", "affine reduction", covariance_affine_reduction},
      {"covariance", "multilinear scaling", covariance_multilinear},
      {"covariance", "zero on product states", covariance_zero_on_products},
      {"covariance", "scan and optimizer agree on W/W-bar vanishing",
       covariance_vanishes_on_mixture},
      {"covariance", "permutation symmetry", covariance_permutation_symmetric},
      {"correlation", "MI equals closed form on every cut", mi_matches_closed_form},
      {"correlation", "marginal entropy equals closed form", entropy_matches_closed_form},
      {"correlation", "MI non-negative and symmetric", mi_nonnegative_symmetric},
      {"correlation", "product iff vanishing MI", product_iff_zero_mi},
      {"correlation", "single-party products imply full product",
       single_party_products_imply_full_product},
      {"correlation", "cut decision matches IC measurement route",
       cut_decision_matches_measurement_route},
      {"measurement", "Born-rule distributions normalized", born_rule_normalized},
      {"measurement", "IC factorization iff product", ic_factorization_iff_product},
      {"measurement", "HV invariant under local unitaries", hv_local_unitary_invariant},
      {"measurement", "HV equals MI on diagonal states", hv_equals_mi_on_diagonal},
      {"measurement", "HV non-negative on diagonal states", hv_nonnegative_on_diagonal},
      {"postulate", "extension preserves state invariants", extension_preserves_invariants},
      {"postulate", "identity extension traces back", identity_extension_traces_back},
      {"postulate", "cross-party operations rejected", nonlocal_operations_rejected},
      {"postulate", "covariance counterexample is exact", counterexample_exact},
  };
  return checks;
}

}  // namespace multicorr
