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

// Ancilla-extension test for correlation measures.
//
// A measure passes on (rho, extension) unless rho shows no genuine
// n-party correlations under it, while the state obtained by attaching
// product ancillas to single parties, applying local unitaries within each
// party and handing every ancilla to a new party shows genuine
// (n+k)-party correlations. "Shows correlations" means value >= threshold.

#pragma once

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "multicorr/covariance.hpp"
#include "multicorr/qmat.hpp"

namespace multicorr {

inline constexpr double kPostulateThreshold = 1e-9;

/// Qubits held by each party, party-major.
using Parties = std::vector<std::vector<std::size_t>>;

/// One qubit per party.
Parties single_qubit_parties(std::size_t n);

/// Operation spanning more than one party's holdings.
class LocalityError : public std::invalid_argument {
 public:
  explicit LocalityError(const std::string& what) : std::invalid_argument(what) {}
};

struct Ancilla {
  /// Initial single-qubit state, |0><0| by default.
  Matrix2 state = (Matrix2() << 1, 0, 0, 0).finished();
  /// Original party that receives the ancilla.
  std::size_t owner = 0;
  /// Party index (>= n) the ancilla is handed to at the end.
  std::size_t new_party = 0;
};

/// Unitary on qubits of the extended register: original qubit q is q,
/// ancilla j is n + j. targets[0] is the leftmost tensor factor.
struct LocalOperation {
  std::size_t party = 0;
  Matrix unitary;
  std::vector<std::size_t> targets;
};

struct Extension {
  std::vector<Ancilla> ancillas;
  std::vector<LocalOperation> operations;
};

struct ExtendedState {
  DensityMatrix rho;
  /// Output register order: the n original qubits, then the ancillas
  /// sorted by new party. Every party holds one qubit.
  Parties parties;
};

/// Attaches, operates, redistributes. Throws LocalityError when an
/// operation touches a qubit its party does not hold, std::invalid_argument
/// for a malformed extension.
ExtendedState extend_state(const DensityMatrix& rho, const Extension& ext);

/// Scalar correlation measure over a state with a party structure.
struct CorrelationMeasure {
  std::string name;
  std::function<double(const DensityMatrix&, const Parties&)> evaluate;
};

/// max |Cov| over all Pauli assignments.
CorrelationMeasure max_abs_pauli_covariance_measure(std::size_t jobs = 1);
/// Smallest mutual information over all canonical cuts.
CorrelationMeasure min_cut_mutual_information_measure();
/// "max_abs_pauli_covariance" or "min_cut_mutual_information".
CorrelationMeasure measure_by_name(std::string_view name);

struct MeasureVerdict {
  std::string measure;
  double value_before = 0.0;
  double value_after = 0.0;
  double threshold = kPostulateThreshold;
  bool postulate_violated = false;
};

MeasureVerdict check_postulate(const CorrelationMeasure& measure, const DensityMatrix& rho,
                               const Extension& ext, double threshold = kPostulateThreshold);

/// The three-party classical GHZ mixture extended by one |0> ancilla at
/// party 0, CNOT from party 0's qubit onto it, ancilla handed to party 3.
Extension ghz_cnot_extension();

struct CounterexampleRecord {
  MeasureVerdict verdict;
  /// Pauli string attaining the post-extension covariance.
  LocalObservable witness;
  std::vector<std::string> narrative;
};

/// Runs the classical GHZ CNOT extension against max |Cov|.
CounterexampleRecord covariance_counterexample(double threshold = kPostulateThreshold);

}  // namespace multicorr
