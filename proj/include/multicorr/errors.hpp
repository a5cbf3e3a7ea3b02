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

#include <stdexcept>
#include <string>

namespace multicorr {

/// Register too large for dense storage (see max_qubits()).
class CapacityError : public std::length_error {
 public:
  explicit CapacityError(const std::string& what) : std::length_error(what) {}
};

/// Matrix that fails the density-matrix invariants (Hermitian, trace one,
/// positive up to the clamp window).
class InvalidStateError : public std::invalid_argument {
 public:
  explicit InvalidStateError(const std::string& what) : std::invalid_argument(what) {}
};

/// Request outside the parameter range a construction is defined for
/// (e.g. an even register for the W/W-bar mixture).
class ScopeError : public std::domain_error {
 public:
  explicit ScopeError(const std::string& what) : std::domain_error(what) {}
};

}  // namespace multicorr
