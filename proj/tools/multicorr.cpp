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

#include <cstdint>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "multicorr/errors.hpp"
#include "multicorr/report.hpp"

namespace {

using multicorr::Family;
using multicorr::StateSpec;
namespace report = multicorr::report;

struct StateFlags {
  std::string family;
  std::size_t n = 3;
  std::optional<std::size_t> k;
  std::optional<std::uint64_t> seed;
  bool dephase = false;

  StateSpec spec() const {
    StateSpec s;
    s.family = multicorr::parse_family(family);
    s.n = n;
    s.k = k;
    s.seed = seed;
    return s;
  }
};

void add_state_flags(CLI::App* cmd, StateFlags& flags, bool with_dephase = true) {
  cmd->add_option("--family", flags.family,
                  "ghz_classical, parity_even, w, wbar, kaszlikowski, dephased_kaszlikowski, "
                  "reduced_kaszlikowski, random_product, random_classical")
      ->required();
  cmd->add_option("--n", flags.n, "number of qubits")->capture_default_str();
  cmd->add_option("--k", flags.k, "marginal size (reduced_kaszlikowski)");
  cmd->add_option("--seed", flags.seed, "seed for random families and optimizers");
  if (with_dephase) cmd->add_flag("--dephase", flags.dephase, "dephase every qubit first");
}

const std::map<std::string, report::Format> kFormats = {
    {"json", report::Format::kJson},
    {"csv", report::Format::kCsv},
    {"table", report::Format::kTable},
};

void add_output_flags(CLI::App* cmd, report::Format& format, std::size_t* jobs) {
  cmd->add_option("--format", format, "json, csv or table")
      ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));
  if (jobs) {
    cmd->add_option("--jobs", *jobs, "worker threads")
        ->check(CLI::Range(std::size_t{1}, std::size_t{256}));
  }
}

int run(int argc, char** argv) {
  CLI::App app{"Multipartite correlation analysis of qubit registers"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string("multicorr ") + MULTICORR_CLI_VERSION);

  report::Format format = report::Format::kJson;
  std::size_t jobs = 1;

  StateFlags cov_state;
  std::string cov_mode = "pauli";
  std::optional<double> cov_tol;
  std::size_t cov_restarts = 32;
  auto* cov = app.add_subcommand("covariance", "n-party covariance scan or optimization");
  add_state_flags(cov, cov_state);
  cov->add_option("--mode", cov_mode, "pauli or optimize")
      ->check(CLI::IsMember({"pauli", "optimize"}));
  cov->add_option("--tol", cov_tol, "vanishing tolerance");
  cov->add_option("--restarts", cov_restarts, "optimizer restarts")->check(CLI::PositiveNumber);
  add_output_flags(cov, format, &jobs);

  StateFlags cuts_state;
  bool with_hv = false;
  bool with_ppt = false;
  std::size_t cuts_restarts = 32;
  auto* cuts = app.add_subcommand("cuts", "mutual information across every bipartite cut");
  add_state_flags(cuts, cuts_state);
  cuts->add_flag("--hv", with_hv, "optimize the Henderson-Vedral measure per cut");
  cuts->add_flag("--ppt", with_ppt, "partial-transpose witness per cut");
  cuts->add_option("--restarts", cuts_restarts, "HV optimizer restarts")
      ->check(CLI::PositiveNumber);
  add_output_flags(cuts, format, &jobs);

  auto* postulate = app.add_subcommand("postulate", "ancilla-extension counterexample");
  add_output_flags(postulate, format, nullptr);

  report::LemmaArgs lemma_args;
  auto* lemma = app.add_subcommand("lemma", "IC-POVM factorization versus product test");
  lemma->add_option("--n", lemma_args.n, "number of qubits (2..4)")->capture_default_str();
  lemma->add_option("--trials", lemma_args.trials, "random states")->capture_default_str();
  lemma->add_option("--seed", lemma_args.seed, "seed")->capture_default_str();
  add_output_flags(lemma, format, nullptr);

  StateFlags pair_state;
  auto* pairwise = app.add_subcommand("pairwise", "two-qubit mutual information matrix");
  add_state_flags(pairwise, pair_state);
  add_output_flags(pairwise, format, nullptr);

  report::ReproduceArgs repro;
  auto* reproduce = app.add_subcommand("reproduce-paper", "run every headline check");
  reproduce->add_option("--trials", repro.property_trials, "property-suite trials")
      ->capture_default_str();
  reproduce->add_option("--seed", repro.seed, "seed")->capture_default_str();
  add_output_flags(reproduce, format, &jobs);
  reproduce->preparse_callback([&](std::size_t) { format = report::Format::kTable; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : report::kExitUsage;
  }

  report::Report result;
  if (cov->parsed()) {
    report::CovarianceArgs args;
    args.spec = cov_state.spec();
    args.dephase = cov_state.dephase;
    args.mode = cov_mode == "pauli" ? report::CovarianceMode::kPauli
                                    : report::CovarianceMode::kOptimize;
    args.tol = cov_tol;
    args.seed = cov_state.seed.value_or(0);
    args.restarts = cov_restarts;
    args.jobs = jobs;
    result = report::cmd_covariance(args);
  } else if (cuts->parsed()) {
    report::CutsArgs args;
    args.spec = cuts_state.spec();
    args.dephase = cuts_state.dephase;
    args.with_hv = with_hv;
    args.with_ppt = with_ppt;
    args.seed = cuts_state.seed.value_or(0);
    args.restarts = cuts_restarts;
    args.jobs = jobs;
    result = report::cmd_cuts(args);
  } else if (postulate->parsed()) {
    result = report::cmd_postulate();
  } else if (lemma->parsed()) {
    result = report::cmd_lemma(lemma_args);
  } else if (pairwise->parsed()) {
    result = report::cmd_pairwise({pair_state.spec(), pair_state.dephase});
  } else {
    repro.jobs = jobs;
    result = report::cmd_reproduce(repro);
  }

  for (int i = 1; i < argc; ++i) result.argv.emplace_back(argv[i]);
  std::cout << report::render(result, format);
  return result.exit_code();
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const multicorr::CapacityError& e) {
    std::cerr << "capacity: " << e.what() << '\n';
    return report::kExitCapacity;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage: " << e.what() << '\n';
    return report::kExitUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "usage: " << e.what() << '\n';
    return report::kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "usage: " << e.what() << '\n';
    return report::kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
