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

// Seeded randomized checks of the library's invariants. Each check draws
// its inputs from its own generator, so results depend only on (trials,
// seed) and not on which other checks ran.

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace multicorr {

struct PropertyResult {
  std::size_t trials = 0;
  std::size_t failures = 0;
  /// Largest observed violation measure (check-specific; 0 when exact).
  double worst = 0.0;
  std::string detail;

  bool passed() const { return failures == 0; }
};

struct PropertyCheck {
  std::string module;
  std::string name;
  std::function<PropertyResult(std::size_t trials, std::uint64_t seed)> run;
};

/// Every invariant check, grouped by module.
const std::vector<PropertyCheck>& property_checks();

}  // namespace multicorr
