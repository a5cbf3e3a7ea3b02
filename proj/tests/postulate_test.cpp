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

#include <gtest/gtest.h>

#include "multicorr/postulate.hpp"
#include "multicorr/states.hpp"

namespace multicorr {
namespace {

double max_abs(const Matrix& m) { return m.cwiseAbs().maxCoeff(); }

TEST(Extension, CnotPipelineGivesFourPartyGhz) {
  const ExtendedState out = extend_state(ghz_classical(3), ghz_cnot_extension());
  EXPECT_EQ(out.rho.num_qubits(), 4U);
  EXPECT_EQ(max_abs(out.rho.matrix() - ghz_classical(4).matrix()), 0.0);
  EXPECT_EQ(out.parties, single_qubit_parties(4));
}

TEST(Extension, AncillasLandAtTheirNewParty) {
  Extension ext;
  ext.ancillas.push_back({DensityMatrix::basis("1").matrix(), 0, 4});
  ext.ancillas.push_back({DensityMatrix::basis("0").matrix(), 1, 3});
  const ExtendedState out = extend_state(DensityMatrix::basis("000"), ext);
  EXPECT_EQ(max_abs(out.rho.matrix() - DensityMatrix::basis("00001").matrix()), 0.0);
}

TEST(Extension, LocalityEnforced) {
  Extension ext = ghz_cnot_extension();
  ext.operations[0].party = 1;
  EXPECT_THROW(extend_state(ghz_classical(3), ext), LocalityError);
  ext = ghz_cnot_extension();
  ext.operations[0].targets = {0, 1};
  EXPECT_THROW(extend_state(ghz_classical(3), ext), LocalityError);
}

TEST(Extension, MalformedAncillaAssignments) {
  Extension ext = ghz_cnot_extension();
  ext.ancillas[0].new_party = 2;
  EXPECT_THROW(extend_state(ghz_classical(3), ext), std::invalid_argument);
  ext = ghz_cnot_extension();
  ext.ancillas[0].owner = 5;
  EXPECT_THROW(extend_state(ghz_classical(3), ext), std::invalid_argument);
  ext = ghz_cnot_extension();
  ext.ancillas.push_back(ext.ancillas[0]);
  EXPECT_THROW(extend_state(ghz_classical(3), ext), std::invalid_argument);
}

TEST(Extension, EmptyExtensionIsIdentity) {
  Rng rng(61);
  const DensityMatrix rho = random_mixed(3, rng);
  const ExtendedState out = extend_state(rho, Extension{});
  EXPECT_EQ(max_abs(out.rho.matrix() - rho.matrix()), 0.0);
}

TEST(Postulate, BareAncillaAddsNoGenuineCorrelation) {
  Extension ext;
  ext.ancillas.push_back({});
  ext.ancillas[0].new_party = 3;
  const MeasureVerdict v =
      check_postulate(min_cut_mutual_information_measure(), ghz_classical(3), ext);
  EXPECT_NEAR(v.value_after, 0.0, 1e-12);
  EXPECT_FALSE(v.postulate_violated);
  const MeasureVerdict c =
      check_postulate(max_abs_pauli_covariance_measure(), random_product_quantum(3, 2), ext);
  EXPECT_LT(c.value_before, 1e-12);
  EXPECT_LT(c.value_after, 1e-12);
  EXPECT_FALSE(c.postulate_violated);
}

TEST(Postulate, VerdictRobustToThreshold) {
  for (double threshold : {1e-12, 1e-10, 1e-6, 0.5}) {
    EXPECT_TRUE(covariance_counterexample(threshold).verdict.postulate_violated) << threshold;
  }
}

TEST(Postulate, CovarianceCounterexampleIsExact) {
  const CounterexampleRecord record = covariance_counterexample();
  EXPECT_EQ(record.verdict.value_before, 0.0);
  EXPECT_EQ(record.verdict.value_after, 1.0);
  EXPECT_TRUE(record.verdict.postulate_violated);
  EXPECT_EQ(record.witness.to_string(), "zzzz");
  EXPECT_FALSE(record.narrative.empty());
}

TEST(Postulate, MutualInformationMeasureIsNotViolatedHere) {
  const MeasureVerdict v = check_postulate(min_cut_mutual_information_measure(), ghz_classical(3),
                                           ghz_cnot_extension());
  EXPECT_NEAR(v.value_before, 1.0, 1e-12);
  EXPECT_NEAR(v.value_after, 1.0, 1e-12);
  EXPECT_FALSE(v.postulate_violated);
}

TEST(Postulate, MeasureLookup) {
  EXPECT_EQ(measure_by_name("max_abs_pauli_covariance").name, "max_abs_pauli_covariance");
  EXPECT_THROW(measure_by_name("nope"), std::invalid_argument);
  const CorrelationMeasure m = max_abs_pauli_covariance_measure();
  EXPECT_THROW(m.evaluate(ghz_classical(2), Parties{{0, 1}}), std::invalid_argument);
}

TEST(Postulate, ProductStartStaysUncorrelatedUnderLocalUnitaries) {
  Rng rng(60);
  const DensityMatrix rho = random_product_quantum(3, rng);
  Extension ext;
  ext.ancillas.push_back({});
  ext.ancillas[0].owner = 2;
  ext.ancillas[0].new_party = 3;
  ext.operations.push_back({2, random_unitary(4, rng), {2, 3}});
  const MeasureVerdict v = check_postulate(min_cut_mutual_information_measure(), rho, ext);
  EXPECT_LT(v.value_before, 1e-9);
  EXPECT_LT(v.value_after, 1e-9);
  EXPECT_FALSE(v.postulate_violated);
}

}  // namespace
}  // namespace multicorr
