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

// Internal helpers: bit manipulation on register indices and contraction of
// single-qubit operators into a dense operator on m qubits.
//
// Dense operators are handled as Eigen column-major matrices. Contracting
// qubit q with a 2x2 operator A replaces M by Tr_q[(A on q) M], so
// contracting every qubit against A_0, ..., A_(m-1) yields Tr[M (A_0 x ... )].

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>

#include "multicorr/qmat.hpp"

namespace multicorr::detail {

/// Bit position of qubit q in an m-qubit basis index.
inline std::size_t bit_of(std::size_t q, std::size_t m) { return m - 1 - q; }

/// Inserts `bit` at position `pos` of `x`, shifting higher bits up.
inline std::uint64_t insert_bit(std::uint64_t x, std::size_t pos, std::uint64_t bit) {
  const std::uint64_t low = x & ((std::uint64_t{1} << pos) - 1);
  return ((x >> pos) << (pos + 1)) | (bit << pos) | low;
}

/// Collects the bits of `index` at the positions of `qubits` (in the order
/// given, first qubit most significant) into a compact index.
inline std::uint64_t gather_bits(std::uint64_t index, std::span<const std::size_t> qubits,
                                 std::size_t m) {
  std::uint64_t out = 0;
  for (std::size_t q : qubits) out = (out << 1) | ((index >> bit_of(q, m)) & 1U);
  return out;
}

/// Inverse of gather_bits: spreads a compact index onto the qubit positions.
inline std::uint64_t scatter_bits(std::uint64_t compact, std::span<const std::size_t> qubits,
                                  std::size_t m) {
  std::uint64_t out = 0;
  const std::size_t k = qubits.size();
  for (std::size_t j = 0; j < k; ++j) {
    const std::uint64_t bit = (compact >> (k - 1 - j)) & 1U;
    out |= bit << bit_of(qubits[j], m);
  }
  return out;
}

/// out = Tr_q[(op on qubit q) in], where `in` acts on m qubits.
void contract_qubit(const Matrix& in, std::size_t m, std::size_t q, const Matrix2& op,
                    Matrix& out);

/// Tr[rho (ops[0] x ops[1] x ...)].
Complex product_trace(const Matrix& rho, std::span<const Matrix2> ops);

/// Contracts every qubit except `site`, leaving the 2x2 operator
/// T = Tr_{all but site}[(x_{j != site} ops[j]) rho].
/// Then Tr[rho (x_j ops[j])] = Tr[ops[site] T] for any choice of ops[site].
Matrix2 contract_all_but(const Matrix& rho, std::span<const Matrix2> ops, std::size_t site);

}  // namespace multicorr::detail
