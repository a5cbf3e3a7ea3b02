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

#include "multicorr/postulate.hpp"

#include <algorithm>
#include <limits>

#include "multicorr/correlation.hpp"
#include "multicorr/states.hpp"

namespace multicorr {

namespace {

void require_single_qubit_parties(const Parties& parties, std::string_view measure) {
  for (const auto& party : parties) {
    if (party.size() != 1) {
      throw std::invalid_argument(std::string(measure) +
                                  " is defined for one qubit per party only");
    }
  }
}

}  // namespace

Parties single_qubit_parties(std::size_t n) {
  Parties parties(n);
  for (std::size_t p = 0; p < n; ++p) parties[p] = {p};
  return parties;
}

ExtendedState extend_state(const DensityMatrix& rho, const Extension& ext) {
  const std::size_t n = rho.num_qubits();
  const std::size_t k = ext.ancillas.size();
  check_capacity(n + k);

  // Each original party p holds qubit p and the ancillas it owns.
  auto holder = [&](std::size_t qubit) {
    return qubit < n ? qubit : ext.ancillas[qubit - n].owner;
  };

  std::vector<bool> party_taken(k, false);
  DensityMatrix state = rho;
  for (const Ancilla& anc : ext.ancillas) {
    if (anc.owner >= n) throw std::invalid_argument("ancilla owner is not an original party");
    if (anc.new_party < n || anc.new_party >= n + k) {
      throw std::invalid_argument("ancilla must go to a new party in [n, n + k)");
    }
    if (party_taken[anc.new_party - n]) {
      throw std::invalid_argument("two ancillas assigned to the same new party");
    }
    party_taken[anc.new_party - n] = true;
    state = tensor(state, DensityMatrix::from_matrix(anc.state));
  }

  for (const LocalOperation& op : ext.operations) {
    if (op.party >= n) throw std::invalid_argument("operation party out of range");
    for (std::size_t q : op.targets) {
      if (q >= n + k) throw std::out_of_range("operation target out of range");
      if (holder(q) != op.party) {
        throw LocalityError("operation of party " + std::to_string(op.party) +
                            " touches qubit " + std::to_string(q) + " held by party " +
                            std::to_string(holder(q)));
      }
    }
    state = apply_unitary(state, op.unitary, op.targets);
  }

  std::vector<std::size_t> order(n + k);
  for (std::size_t q = 0; q < n; ++q) order[q] = q;
  for (std::size_t j = 0; j < k; ++j) order[ext.ancillas[j].new_party] = n + j;
  return {permute_qubits(state, order), single_qubit_parties(n + k)};
}

CorrelationMeasure max_abs_pauli_covariance_measure(std::size_t jobs) {
  return {"max_abs_pauli_covariance", [jobs](const DensityMatrix& rho, const Parties& parties) {
            require_single_qubit_parties(parties, "max_abs_pauli_covariance");
            return pauli_scan(rho, kExactVanishTol, jobs).max_abs;
          }};
}

CorrelationMeasure min_cut_mutual_information_measure() {
  return {"min_cut_mutual_information", [](const DensityMatrix& rho, const Parties& parties) {
            require_single_qubit_parties(parties, "min_cut_mutual_information");
            double lowest = std::numeric_limits<double>::infinity();
            for (const Cut& cut : enumerate_cuts(rho.num_qubits())) {
              lowest = std::min(lowest, mutual_information(rho, cut));
            }
            return lowest;
          }};
}

CorrelationMeasure measure_by_name(std::string_view name) {
  if (name == "max_abs_pauli_covariance") return max_abs_pauli_covariance_measure();
  if (name == "min_cut_mutual_information") return min_cut_mutual_information_measure();
  throw std::invalid_argument("unknown correlation measure '" + std::string(name) + "'");
}

MeasureVerdict check_postulate(const CorrelationMeasure& measure, const DensityMatrix& rho,
                               const Extension& ext, double threshold) {
  const ExtendedState extended = extend_state(rho, ext);
  MeasureVerdict verdict;
  verdict.measure = measure.name;
  verdict.threshold = threshold;
  verdict.value_before = measure.evaluate(rho, single_qubit_parties(rho.num_qubits()));
  verdict.value_after = measure.evaluate(extended.rho, extended.parties);
  verdict.postulate_violated =
      verdict.value_before < threshold && verdict.value_after >= threshold;
  return verdict;
}

Extension ghz_cnot_extension() {
  Extension ext;
  ext.ancillas.push_back(Ancilla{.owner = 0, .new_party = 3});
  ext.operations.push_back(LocalOperation{.party = 0, .unitary = cnot(), .targets = {0, 3}});
  return ext;
}

CounterexampleRecord covariance_counterexample(double threshold) {
  const DensityMatrix before = ghz_classical(3);
  const Extension ext = ghz_cnot_extension();

  CounterexampleRecord record;
  record.verdict = check_postulate(max_abs_pauli_covariance_measure(), before, ext, threshold);
  record.witness = pauli_scan(extend_state(before, ext).rho).argmax;
  record.narrative = {
      "start: (|000><000| + |111><111|)/2, three parties",
      "party 0 attaches an ancilla prepared in |0>",
      "party 0 applies CNOT (control: its qubit, target: the ancilla)",
      "the ancilla is handed to a fourth party",
      "result: (|0000><0000| + |1111><1111|)/2",
      "max |Cov| over Pauli observables: before " + std::to_string(record.verdict.value_before) +
          ", after " + std::to_string(record.verdict.value_after) + " at " +
          record.witness.to_string(),
  };
  return record;
}

}  // namespace multicorr
