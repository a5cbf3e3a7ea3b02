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

#include "multicorr/covariance.hpp"
#include "multicorr/states.hpp"
#include "oracle.hpp"

namespace multicorr {
namespace {

oracle::Mat site_matrix(const SiteObservable& s) {
  return s.gain * oracle::axis_op(s.axis.x(), s.axis.y(), s.axis.z()) +
         s.offset * oracle::Mat::Identity(2, 2);
}

double oracle_covariance(const DensityMatrix& rho, const LocalObservable& obs) {
  std::vector<oracle::Mat> ops;
  for (const auto& s : obs.sites) ops.push_back(site_matrix(s));
  return oracle::covariance(rho.matrix(), ops);
}

LocalObservable random_affine(std::size_t n, Rng& rng) {
  LocalObservable obs;
  for (std::size_t q = 0; q < n; ++q) {
    obs.sites.push_back({random_unit_vector(rng), 2.0 * uniform01(rng) - 1.0, uniform01(rng)});
  }
  return obs;
}

TEST(LocalObservable, PauliLabels) {
  const LocalObservable obs = LocalObservable::from_paulis("xyz");
  EXPECT_EQ(obs.size(), 3U);
  EXPECT_EQ(obs.to_string(), "xyz");
  EXPECT_EQ(obs.sites[1].pauli_label(), 'y');
  EXPECT_THROW(LocalObservable::from_paulis("xq"), std::invalid_argument);
  EXPECT_EQ((SiteObservable::pauli('x').matrix() - pauli_x()).norm(), 0.0);
}

TEST(Covariance, MatchesFullRegisterOracle) {
  Rng rng(31);
  for (std::size_t n : {1, 2, 3, 4}) {
    for (int i = 0; i < 4; ++i) {
      const DensityMatrix rho = random_mixed(n, rng);
      const LocalObservable obs = random_affine(n, rng);
      EXPECT_NEAR(covariance(rho, obs), oracle_covariance(rho, obs), 1e-12) << "n=" << n;
    }
  }
}

TEST(Covariance, AffinePartReducesToGainProduct) {
  Rng rng(4);
  const DensityMatrix rho = random_mixed(3, rng);
  LocalObservable obs = random_affine(3, rng);
  LocalObservable bare = obs;
  double gains = 1.0;
  for (auto& s : bare.sites) {
    gains *= s.gain;
    s.gain = 1.0;
    s.offset = 0.0;
  }
  EXPECT_NEAR(covariance(rho, obs), gains * covariance(rho, bare), 1e-12);
}

TEST(Covariance, ClassicalGhzExamples) {
  EXPECT_NEAR(covariance(ghz_classical(3), LocalObservable::from_paulis("zzz")), 0.0, 1e-15);
  EXPECT_DOUBLE_EQ(covariance(ghz_classical(4), LocalObservable::from_paulis("zzzz")), 1.0);
  EXPECT_DOUBLE_EQ(covariance(ghz_classical(2), LocalObservable::from_paulis("zz")), 1.0);
}

TEST(Covariance, ProductStatesGiveZero) {
  Rng rng(5);
  const DensityMatrix rho = random_product_quantum(4, rng);
  EXPECT_NEAR(covariance(rho, random_affine(4, rng)), 0.0, 1e-12);
}

TEST(Covariance, RejectsBadObservables) {
  EXPECT_THROW(covariance(ghz_classical(3), LocalObservable::from_paulis("zz")),
               std::invalid_argument);
  LocalObservable obs = LocalObservable::from_paulis("zzz");
  obs.sites[0].axis = Bloch(1, 1, 0);
  EXPECT_THROW(covariance(ghz_classical(3), obs), std::invalid_argument);
}

TEST(PauliScan, OddGhzVanishes) {
  const CovarianceScanResult r = pauli_scan(ghz_classical(3));
  EXPECT_LT(r.max_abs, 1e-10);
  EXPECT_TRUE(r.all_below_tol);
  EXPECT_EQ(r.evaluated_count, 27U);
}

TEST(PauliScan, EvenGhzPeaksAtAllZ) {
  const CovarianceScanResult r = pauli_scan(ghz_classical(4));
  EXPECT_NEAR(r.max_abs, 1.0, 1e-12);
  EXPECT_NEAR(r.value_at_argmax, 1.0, 1e-12);
  EXPECT_EQ(r.argmax.to_string(), "zzzz");
  EXPECT_FALSE(r.all_below_tol);
  EXPECT_EQ(r.evaluated_count, 81U);
}

TEST(PauliScan, MixtureVanishesForOddN) {
  for (std::size_t n : {3, 5, 7}) {
    const CovarianceScanResult r = pauli_scan(kaszlikowski(n));
    EXPECT_LT(r.max_abs, 1e-10) << n;
    EXPECT_TRUE(r.all_below_tol);
  }
  EXPECT_EQ(pauli_scan(kaszlikowski(5)).evaluated_count, 243U);
}

TEST(PauliScan, MatchesExhaustiveOracle) {
  Rng rng(12);
  const DensityMatrix rho = random_mixed(3, rng);
  double best = -1.0;
  std::string label;
  const std::string letters = "xyz";
  for (char a : letters) {
    for (char b : letters) {
      for (char c : letters) {
        const std::string s{a, b, c};
        const double v = std::abs(oracle_covariance(rho, LocalObservable::from_paulis(s)));
        if (v > best + 1e-12) {
          best = v;
          label = s;
        }
      }
    }
  }
  const CovarianceScanResult r = pauli_scan(rho);
  EXPECT_NEAR(r.max_abs, best, 1e-12);
  EXPECT_EQ(r.argmax.to_string(), label);
}

TEST(PauliScan, ThreadCountDoesNotChangeResult) {
  Rng rng(13);
  const DensityMatrix rho = random_mixed(5, rng);
  const CovarianceScanResult one = pauli_scan(rho, kExactVanishTol, 1);
  const CovarianceScanResult four = pauli_scan(rho, kExactVanishTol, 4);
  EXPECT_EQ(one.max_abs, four.max_abs);
  EXPECT_EQ(one.argmax.to_string(), four.argmax.to_string());
}

TEST(Optimizer, MixtureVanishes) {
  for (std::size_t n : {3, 5, 7}) {
    const CovarianceScanResult r = optimize_covariance(kaszlikowski(n));
    EXPECT_LT(r.max_abs, kOptimizerVanishTol) << n;
    EXPECT_TRUE(r.all_below_tol);
    EXPECT_GE(r.restarts, 32U);
  }
}

TEST(Optimizer, RecoversGhzOptimumAndZeroOnMixed) {
  EXPECT_GE(optimize_covariance(ghz_classical(4)).max_abs, 1.0 - 1e-6);
  EXPECT_LT(optimize_covariance(DensityMatrix::maximally_mixed(3)).max_abs, 1e-9);
  EXPECT_LT(pauli_scan(DensityMatrix::maximally_mixed(3)).max_abs, 1e-9);
}

TEST(Optimizer, NeverBelowPauliScanAndSelfConsistent) {
  Rng rng(14);
  for (int i = 0; i < 3; ++i) {
    const DensityMatrix rho = random_mixed(3, rng);
    CovarianceOptimizerOptions options;
    options.restarts = 8;
    const CovarianceScanResult opt = optimize_covariance(rho, options);
    EXPECT_GE(opt.max_abs, pauli_scan(rho).max_abs - 1e-12);
    EXPECT_NEAR(std::abs(covariance(rho, opt.argmax)), opt.max_abs, 1e-12);
    EXPECT_NEAR(oracle_covariance(rho, opt.argmax), opt.value_at_argmax, 1e-12);
  }
}

TEST(Optimizer, FindsContinuousOptimumBeyondPauli) {
  // Two sites: Cov(a, b) = a^T C b, so the maximum is the top singular value.
  Rng rng(15);
  const DensityMatrix rho = random_mixed(2, rng);
  const Bloch r0 = bloch_vector(rho, 0);
  const Bloch r1 = bloch_vector(rho, 1);
  Eigen::Matrix3d c;
  const char labels[] = {'x', 'y', 'z'};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      const oracle::Mat op = oracle::kron(oracle::sigma(labels[i]), oracle::sigma(labels[j]));
      c(i, j) = (rho.matrix() * op).trace().real() - r0(i) * r1(j);
    }
  }
  Eigen::JacobiSVD<Eigen::Matrix3d> svd(c);
  const CovarianceScanResult opt = optimize_covariance(rho);
  EXPECT_NEAR(opt.max_abs, svd.singularValues()(0), 1e-9);
}

}  // namespace
}  // namespace multicorr
