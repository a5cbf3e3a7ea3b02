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

// Report assembly for the command-line front end. Every command returns a
// Report holding a command-specific JSON result, a flat CSV table and the
// list of claim checks that decide the exit code.

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "multicorr/states.hpp"

namespace multicorr::report {

inline constexpr const char* kSchemaVersion = "1.0.0";

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 2,
  kExitClaimFailed = 3,
  kExitCapacity = 4,
};

enum class Format { kJson, kCsv, kTable };

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct Report {
  std::string command;
  std::vector<std::string> argv;
  std::optional<StateSpec> state;
  bool dephased = false;
  std::uint64_t seed = 0;
  nlohmann::ordered_json result = nlohmann::ordered_json::object();
  std::vector<Check> checks;
  std::vector<std::string> csv_header;
  std::vector<std::vector<std::string>> csv_rows;

  bool verified() const;
  int exit_code() const { return verified() ? kExitOk : kExitClaimFailed; }
};

/// Rounds to 12 significant digits; -0 becomes 0.
double round12(double x);
/// Locale-independent %.12g.
std::string format12(double x);

nlohmann::ordered_json to_json(const Report& report);
std::string render(const Report& report, Format format);

enum class CovarianceMode { kPauli, kOptimize };

struct CovarianceArgs {
  StateSpec spec;
  bool dephase = false;
  CovarianceMode mode = CovarianceMode::kPauli;
  /// Defaults to 1e-10 (pauli) or 1e-7 (optimize) when unset.
  std::optional<double> tol;
  std::uint64_t seed = 0;
  std::size_t restarts = 32;
  std::size_t jobs = 1;
};
Report cmd_covariance(const CovarianceArgs& args);

inline constexpr std::size_t kMaxHvQubits = 9;

struct CutsArgs {
  StateSpec spec;
  bool dephase = false;
  bool with_hv = false;
  bool with_ppt = false;
  std::uint64_t seed = 0;
  std::size_t restarts = 32;
  std::size_t jobs = 1;
};
Report cmd_cuts(const CutsArgs& args);

Report cmd_postulate();

inline constexpr std::size_t kMaxLemmaQubits = 4;

struct LemmaArgs {
  std::size_t n = 3;
  std::size_t trials = 20;
  std::uint64_t seed = 0;
};
Report cmd_lemma(const LemmaArgs& args);

struct PairwiseArgs {
  StateSpec spec;
  bool dephase = false;
};
Report cmd_pairwise(const PairwiseArgs& args);

struct ReproduceArgs {
  std::size_t jobs = 1;
  std::size_t property_trials = 200;
  std::uint64_t seed = 0;
};
/// Every headline claim plus the randomized property suite.
Report cmd_reproduce(const ReproduceArgs& args);

}  // namespace multicorr::report
