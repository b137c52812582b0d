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

#include "semmarket/verification.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "semmarket/experiments.hpp"
#include "semmarket/rng.hpp"
#include "semmarket/scenario.hpp"

namespace semmarket {

Instance verification_instance(const VerificationOptions& options, int trial) {
  Rng rng(Rng::derive(options.seed, static_cast<std::uint64_t>(trial)));
  const auto n = static_cast<std::int32_t>(rng.between(1, options.n_max));
  const auto budget = static_cast<std::int32_t>(rng.between(0, options.budget_max));
  MarketConfig config = default_market_config(budget);
  if (trial % 10 == 9) config.welfare_mode = WelfareMode::literal;

  Instance instance = generate_population(n, rng.next(), config, default_profile_table(),
                                          GeneratorParams::wide_demand());
  if (trial % 2 == 1) {
    for (auto& b : *instance.bids) {
      b.bid = std::max(0.5, std::round(2.0 * b.bid) / 2.0);
      b.semantic_value = std::round(b.semantic_value);
    }
  }
  return instance;
}

VerificationReport run_verification(const VerificationOptions& options) {
  if (options.n_max > kBruteForceMaxBidders)
    throw Refusal("verify: n_max " + std::to_string(options.n_max) +
                  " exceeds the brute-force limit of " +
                  std::to_string(kBruteForceMaxBidders));
  if (options.n_max < 1) throw ContractViolation("verify: n_max must be at least 1");

  VerificationReport report;
  report.min_winner_utility = std::numeric_limits<double>::infinity();
  report.max_ic_gain = -std::numeric_limits<double>::infinity();

  auto fail = [&](const char* suite, const std::string& detail, const Instance& instance) {
    if (!report.counterexample) report.counterexample = Counterexample{suite, detail, instance};
  };

  for (int t = 0; t < options.trials; ++t) {
    const Instance instance = verification_instance(options, t);
    const auto book = make_bid_book<double>(*instance.bids);
    const auto params = params_from<double>(instance.config);
    ++report.instances;
    const std::string where = "trial " + std::to_string(t) + ": ";

    if (options.run_oracle) {
      const auto oracle = oracle_audit(book, params);
      if (!oracle.holds()) {
        ++report.oracle_failures;
        fail("oracle", where + "exact DP welfare " + format_double(oracle.welfare_dp) +
                           ", branch-and-bound " + format_double(oracle.welfare_branch_bound) +
                           ", brute force " + format_double(oracle.welfare_brute_force) +
                           (oracle.winners_match ? "" : ", winner sets differ"),
             instance);
      }
    }
    if (options.run_ic) {
      const auto ic = ic_audit(book, params, options.deviation_grid, 0, 0,
                               options.payment_rule);
      report.deviations += ic.deviations;
      if (ic.deviations > 0) report.max_ic_gain = std::max(report.max_ic_gain, ic.max_gain);
      if (!ic.holds()) {
        ++report.ic_failures;
        fail("ic", where + "device " + std::to_string(ic.worst_device) + " gains " +
                       format_double(ic.max_gain) + " by bidding " +
                       format_double(ic.worst_multiplier) + " x cost",
             instance);
      }
    }
    if (options.run_ir) {
      const auto ir = ir_audit(book, params, options.payment_rule);
      report.winners += ir.winners;
      if (ir.winners > 0) report.min_winner_utility = std::min(report.min_winner_utility, ir.min_utility);
      report.max_ir_identity_error = std::max(report.max_ir_identity_error, ir.max_identity_error);
      if (!ir.holds()) {
        ++report.ir_failures;
        fail("ir", where + "min winner utility " + format_double(ir.min_utility) +
                       ", identity error " + format_double(ir.max_identity_error),
             instance);
      }
    }
  }
  if (report.deviations == 0) report.max_ic_gain = 0.0;
  if (report.winners == 0) report.min_winner_utility = 0.0;
  return report;
}

}  // namespace semmarket
