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

#include <cmath>

#include <gtest/gtest.h>

#include "multicorr/correlation.hpp"
#include "multicorr/states.hpp"
#include "oracle.hpp"

namespace multicorr {
namespace {

TEST(Cut, EnumerationCountsAndCanonicalForm) {
  for (std::size_t n : {2, 3, 5, 7}) {
    const std::vector<Cut> cuts = enumerate_cuts(n);
    EXPECT_EQ(cuts.size(), (std::size_t{1} << (n - 1)) - 1);
    for (const Cut& c : cuts) {
      EXPECT_TRUE(c.a.contains(0));
      EXPECT_FALSE(c.b.empty());
    }
  }
  EXPECT_EQ(enumerate_cuts(3).front().to_string(), "{0}:{1,2}");
  EXPECT_THROW(enumerate_cuts(1), std::invalid_argument);
}

TEST(Cut, ThreeQubitOrder) {
  const std::vector<Cut> cuts = enumerate_cuts(3);
  ASSERT_EQ(cuts.size(), 3U);
  EXPECT_EQ(cuts[0].to_string(), "{0}:{1,2}");
  EXPECT_EQ(cuts[1].to_string(), "{0,1}:{2}");
  EXPECT_EQ(cuts[2].to_string(), "{0,2}:{1}");
  EXPECT_EQ(enumerate_cuts(2).size(), 1U);
}

TEST(Cut, Validation) {
  EXPECT_THROW((Cut{QubitSet{0}, QubitSet{0, 1}}.validate(2)), std::invalid_argument);
  EXPECT_THROW((Cut{QubitSet{0}, QubitSet{1}}.validate(3)), std::invalid_argument);
  EXPECT_THROW((Cut{QubitSet{}, QubitSet{0, 1}}.validate(2)), std::invalid_argument);
  EXPECT_NO_THROW((Cut{QubitSet{1}, QubitSet{0, 2}}.validate(3)));
}

TEST(ClosedForms, HandComputedValues) {
  EXPECT_NEAR(closed_form_mi(3, 1), 1.0 / 3.0, 1e-15);
  EXPECT_NEAR(closed_form_mi(3, 2), 1.0 / 3.0, 1e-15);
  EXPECT_DOUBLE_EQ(closed_form_mi(5, 1), 1.0);
  EXPECT_DOUBLE_EQ(closed_form_mi(5, 4), 1.0);
  EXPECT_NEAR(closed_form_mi(5, 2), oracle::h2(0.4) + 0.6, 1e-15);
  EXPECT_NEAR(closed_form_mi(7, 3), 1.0 + oracle::h2(3.0 / 7.0), 1e-15);
  EXPECT_NEAR(closed_form_mi(7, 3), 1.985228, 1e-6);
  EXPECT_DOUBLE_EQ(closed_form_entropy(7, 1), 1.0);
  EXPECT_NEAR(closed_form_entropy(7, 2), 1.0 + oracle::h2(2.0 / 7.0), 1e-15);
  EXPECT_NEAR(closed_form_entropy(7, 3), 2.664498, 1e-6);
  EXPECT_NEAR(closed_form_entropy(5, 5), std::log2(10.0), 1e-12);
  EXPECT_THROW(closed_form_mi(4, 1), std::out_of_range);
  EXPECT_THROW(closed_form_entropy(5, 0), std::out_of_range);
}

TEST(MutualInformation, DephasedMixtureEveryCut) {
  for (std::size_t n : {3, 5, 7}) {
    const DensityMatrix rho = dephased_kaszlikowski(n);
    for (const Cut& cut : enumerate_cuts(n)) {
      EXPECT_NEAR(mutual_information(rho, cut), closed_form_mi(n, cut.a.size()), 1e-9)
          << cut.to_string();
    }
  }
}

TEST(MutualInformation, MatchesOracleOnRandomStates) {
  Rng rng(40);
  for (int i = 0; i < 6; ++i) {
    const DensityMatrix rho = random_mixed(3, rng);
    for (const Cut& cut : enumerate_cuts(3)) {
      EXPECT_NEAR(mutual_information(rho, cut), oracle::mutual_information(rho.matrix(), cut.a.indices(), 3),
                  1e-10);
    }
  }
}

TEST(MutualInformation, BellStateCarriesTwoBits) {
  Vector v = Vector::Zero(4);
  v(0) = v(3) = 1.0 / std::sqrt(2.0);
  EXPECT_NEAR(mutual_information(DensityMatrix::pure(v), enumerate_cuts(2)[0]), 2.0, 1e-12);
}

TEST(MutualInformation, GhzAndParityStates) {
  for (std::size_t n : {3, 4, 5}) {
    for (const Cut& cut : enumerate_cuts(n)) {
      EXPECT_NEAR(mutual_information(parity_even_classical(n), cut), 1.0, 1e-12);
      EXPECT_NEAR(mutual_information(ghz_classical(n), cut), 1.0, 1e-12);
    }
  }
}

TEST(Pairwise, DephasedMixture) {
  for (std::size_t n : {3, 5, 7}) {
    const Eigen::MatrixXd m = pairwise_mutual_information_matrix(dephased_kaszlikowski(n));
    const double expected = 1.0 - oracle::h2(2.0 / static_cast<double>(n));
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      EXPECT_EQ(m(i, i), 0.0);
      for (Eigen::Index j = 0; j < m.cols(); ++j) {
        if (i != j) {
          EXPECT_NEAR(m(i, j), expected, 1e-12);
        }
      }
    }
  }
  EXPECT_NEAR(1.0 - oracle::h2(2.0 / 3.0), 0.081704, 1e-6);
  EXPECT_NEAR(1.0 - oracle::h2(0.4), 0.029049, 1e-6);
}

TEST(Pairwise, GhzAndParity) {
  EXPECT_NEAR(pairwise_mutual_information(ghz_classical(5), 1, 4), 1.0, 1e-12);
  EXPECT_NEAR(pairwise_mutual_information(parity_even_classical(4), 0, 2), 0.0, 1e-12);
  EXPECT_THROW(pairwise_mutual_information(ghz_classical(3), 1, 1), std::invalid_argument);
}

TEST(Product, ParityMarginalsAreFullyProduct) {
  for (std::size_t n : {3, 4, 5}) {
    const DensityMatrix rho = parity_even_classical(n);
    for (std::size_t drop = 0; drop < n; ++drop) {
      const DensityMatrix m = partial_trace(rho, QubitSet{drop}.complement(n));
      const double uniform = std::ldexp(1.0, -static_cast<int>(n - 1));
      EXPECT_LT((m.matrix() - Matrix::Identity(m.dim(), m.dim()) * uniform).cwiseAbs().maxCoeff(),
                1e-15);
      for (const Cut& cut : enumerate_cuts(n - 1)) EXPECT_TRUE(is_product(m, cut));
    }
  }
}

TEST(Product, ProductOfMarginalsAndFlag) {
  Rng rng(41);
  const DensityMatrix rho = random_product_across(3, QubitSet{0, 2}, rng);
  const Cut cut{QubitSet{0, 2}, QubitSet{1}};
  EXPECT_TRUE(is_product(rho, cut));
  EXPECT_LT((product_of_marginals(rho, cut).matrix() - rho.matrix()).cwiseAbs().maxCoeff(), 1e-12);
  EXPECT_FALSE(is_product(rho, Cut{QubitSet{0}, QubitSet{1, 2}}));
  EXPECT_FALSE(is_product(ghz_classical(3), cut));
}

TEST(Product, TensorAndGhz) {
  Rng rng(42);
  const DensityMatrix rho = tensor(random_mixed(2, rng), random_mixed(1, rng));
  EXPECT_TRUE(is_product(rho, Cut{QubitSet{0, 1}, QubitSet{2}}));
  for (const Cut& cut : enumerate_cuts(3)) EXPECT_FALSE(is_product(ghz_classical(3), cut));
}

TEST(Ppt, DiagonalStatesArePpt) {
  for (const Cut& cut : enumerate_cuts(4)) {
    EXPECT_GE(ppt_min_eigenvalue(random_correlated_classical(4, 3), cut), 0.0);
    EXPECT_GE(ppt_min_eigenvalue(parity_even_classical(4), cut), 0.0);
  }
}

TEST(Ppt, BellAndMixture) {
  Vector v = Vector::Zero(4);
  v(0) = v(3) = 1.0 / std::sqrt(2.0);
  EXPECT_NEAR(ppt_min_eigenvalue(DensityMatrix::pure(v), enumerate_cuts(2)[0]), -0.5, 1e-12);
  const DensityMatrix rho = kaszlikowski(3);
  for (const Cut& cut : enumerate_cuts(3)) {
    const double expected =
        oracle::min_eigenvalue(oracle::partial_transpose(rho.matrix(), cut.a.indices(), 3));
    EXPECT_NEAR(ppt_min_eigenvalue(rho, cut), expected, 1e-12);
    EXPECT_LT(ppt_min_eigenvalue(rho, cut), 0.0);
  }
  EXPECT_GE(ppt_min_eigenvalue(ghz_classical(3), enumerate_cuts(3)[0]), -1e-15);
}

TEST(Verdict, GenuineStates) {
  for (const DensityMatrix& rho :
       {dephased_kaszlikowski(5), kaszlikowski(3), ghz_classical(4), parity_even_classical(4)}) {
    const GenuineCorrelationVerdict v = genuine_classical_correlations(rho);
    EXPECT_TRUE(v.genuine);
    EXPECT_FALSE(v.separating_cut.has_value());
    EXPECT_EQ(v.cuts.size(), enumerate_cuts(rho.num_qubits()).size());
  }
}

TEST(Verdict, ProductStatesAreNotGenuine) {
  const GenuineCorrelationVerdict v = genuine_classical_correlations(random_product_quantum(4, 9));
  EXPECT_FALSE(v.genuine);
  ASSERT_TRUE(v.separating_cut.has_value());
  EXPECT_EQ(v.separating_cut->to_string(), "{0}:{1,2,3}");

  // Correlated on {0,1} only; separable by the cut isolating qubit 2.
  Rng rng(3);
  const DensityMatrix rho = random_product_across(3, QubitSet{2}, rng);
  const GenuineCorrelationVerdict w = genuine_classical_correlations(rho);
  EXPECT_FALSE(w.genuine);
  EXPECT_EQ(w.separating_cut->to_string(), "{0,1}:{2}");
}

TEST(Verdict, PptAndJobsOptions) {
  CutAnalysisOptions options;
  options.with_ppt = true;
  options.jobs = 3;
  const GenuineCorrelationVerdict v = genuine_classical_correlations(kaszlikowski(5), options);
  const GenuineCorrelationVerdict serial = genuine_classical_correlations(kaszlikowski(5));
  ASSERT_EQ(v.cuts.size(), 15U);
  for (std::size_t i = 0; i < v.cuts.size(); ++i) {
    ASSERT_TRUE(v.cuts[i].ppt_min_eigenvalue.has_value());
    EXPECT_LT(*v.cuts[i].ppt_min_eigenvalue, 0.0);
    EXPECT_EQ(v.cuts[i].mutual_information, serial.cuts[i].mutual_information);
  }
}

}  // namespace
}  // namespace multicorr
