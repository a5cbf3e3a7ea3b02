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

#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>

#include "multicorr/qmat.hpp"

namespace multicorr {

/// Caller-owned PRNG used by every seeded constructor.
using Rng = std::mt19937_64;

/// Uniform double in [0, 1) from the top 53 bits of one draw.
inline double uniform01(Rng& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

/// Uniformly distributed unit vector.
Bloch random_unit_vector(Rng& rng);
/// Haar-random unitary of dimension dim.
Matrix random_unitary(std::size_t dim, Rng& rng);

/// (|0..0><0..0| + |1..1><1..1|) / 2.
DensityMatrix ghz_classical(std::size_t n);

/// Uniform mixture over the 2^(n-1) even-parity strings, each with weight
/// 2^(1-n).
DensityMatrix parity_even_classical(std::size_t n);

/// Projector onto the uniform superposition of single-excitation strings.
DensityMatrix w_state(std::size_t n);
/// Projector onto the uniform superposition of single-hole strings.
DensityMatrix wbar_state(std::size_t n);

/// (W + W-bar) / 2 for odd n >= 3. Even n throws ScopeError.
DensityMatrix kaszlikowski(std::size_t n);
DensityMatrix dephased_kaszlikowski(std::size_t n);

/// Closed-form k-qubit marginal of the dephased W/W-bar mixture: weight
/// (n-k)/(2n) on the all-0 and all-1 strings and 1/(2n) on every
/// single-excitation and single-hole string, overlapping terms added.
DensityMatrix reduced_kaszlikowski_closed_form(std::size_t n, std::size_t k);

/// Tensor product of random diagonal qubits.
DensityMatrix random_product_classical(std::size_t n, Rng& rng);
DensityMatrix random_product_classical(std::size_t n, std::uint64_t seed);

/// Random diagonal state with more than 0.05 bits of mutual information
/// between qubit 0 and the rest (the designated cut {0}:{1..n-1}).
/// Gives up with std::runtime_error after 1000 rejected draws.
DensityMatrix random_correlated_classical(std::size_t n, Rng& rng);
DensityMatrix random_correlated_classical(std::size_t n, std::uint64_t seed);

/// Tensor product of random mixed qubits (Bloch vectors uniform in the ball).
DensityMatrix random_product_quantum(std::size_t n, Rng& rng);
DensityMatrix random_product_quantum(std::size_t n, std::uint64_t seed);

/// rho_A (x) rho_B with independent random mixed states on `a` and its
/// complement, laid out in register order.
DensityMatrix random_product_across(std::size_t n, const QubitSet& a, Rng& rng);

/// Full-rank random mixed state G G^dagger / Tr, G complex Ginibre.
DensityMatrix random_mixed(std::size_t n, Rng& rng);

enum class Family {
  kGhzClassical,
  kParityEven,
  kW,
  kWbar,
  kKaszlikowski,
  kDephasedKaszlikowski,
  kReducedKaszlikowski,
  kRandomProduct,
  kRandomClassical,
};

/// Names as used on the command line (ghz_classical, parity_even, w, ...).
std::string_view family_name(Family family);
/// Throws std::invalid_argument for an unknown name.
Family parse_family(std::string_view name);

/// Named state family with its parameters.
struct StateSpec {
  Family family = Family::kGhzClassical;
  std::size_t n = 3;
  std::optional<std::size_t> k;
  std::optional<std::uint64_t> seed;
};

/// Builds the state a spec names. random_product maps to
/// random_product_quantum and random_classical to random_correlated_classical;
/// both default to seed 0.
DensityMatrix make_state(const StateSpec& spec);

}  // namespace multicorr
