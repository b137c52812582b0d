// Copyright 2026 The semmarket Authors
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
#include <string>
#include <vector>

#include "semmarket/auction/audit.hpp"
#include "semmarket/model.hpp"

// Randomized property suites over seeded instances: oracle equivalence of
// the exact solvers, truthfulness, and individual rationality.
namespace semmarket {

struct VerificationOptions {
  int trials = 100;
  std::uint64_t seed = 7;
  std::int32_t n_max = 12;
  std::int32_t budget_max = 40;
  bool run_oracle = true;
  bool run_ic = true;
  bool run_ir = true;
  std::vector<double> deviation_grid = kDefaultDeviationGrid;
  PaymentRule<double> payment_rule = vcg_rule<double>();
};

struct Counterexample {
  std::string suite;
  std::string detail;
  Instance instance;
};

struct VerificationReport {
  int instances = 0;
  int oracle_failures = 0;
  int ic_failures = 0;
  int ir_failures = 0;
  double max_ic_gain = 0.0;
  double min_winner_utility = 0.0;
  double max_ir_identity_error = 0.0;
  std::int64_t deviations = 0;
  std::int64_t winners = 0;
  std::optional<Counterexample> counterexample;

  bool passed() const { return oracle_failures == 0 && ic_failures == 0 && ir_failures == 0; }
};

/// Trial t of a verification run: N uniform in [1, n_max], B uniform in
/// [0, budget_max], a wide-demand population seeded from (seed, t). Odd
/// trials snap bids to multiples of 0.5 and values to integers so that
/// co-optimal allocations (ties) actually occur; every tenth trial uses the
/// literal welfare mode.
Instance verification_instance(const VerificationOptions& options, int trial);

/// Throws Refusal if n_max exceeds the brute-force limit.
VerificationReport run_verification(const VerificationOptions& options);

}  // namespace semmarket
