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

#include <cmath>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "semmarket/auction/vcg.hpp"
#include "semmarket/rng.hpp"

// Executable checks of the mechanism's guarantees on a single round:
// truthfulness (no bidder gains by scaling its bid), individual
// rationality (no winner loses money), and agreement of the exact solvers
// with the brute-force oracle.
namespace semmarket {

inline const std::vector<double> kDefaultDeviationGrid{0.5, 0.8, 1.2, 2.0};

template <typename Scalar>
struct ICReport {
  Scalar max_gain = -std::numeric_limits<Scalar>::infinity();
  Eigen::Index worst_device = -1;
  Scalar worst_multiplier = Scalar(1);
  std::int64_t deviations = 0;

  bool holds() const { return deviations == 0 || max_gain <= Scalar(kWelfareTolerance); }
};

/// Truthfulness audit. The bids in `book` are taken as true costs. For each
/// bidder k and each multiplier m (the grid, plus `extra_trials` multipliers
/// drawn log-uniformly from [1/4, 4] with `seed`), bidder k reports m * c_k
/// while everyone else stays truthful; the gain is
///
///   (p'_k - R_k - c_k) x'_k  -  u_k
///
/// measured against its true cost. Reports the largest gain seen.
template <typename Scalar>
ICReport<Scalar> ic_audit(const BidBook<Scalar>& book, const AuctionParams<Scalar>& params,
                          std::span<const double> grid = kDefaultDeviationGrid,
                          int extra_trials = 0, std::uint64_t seed = 0,
                          const PaymentRule<Scalar>& rule = vcg_rule<Scalar>(),
                          SolverKind solver = SolverKind::exact_dp) {
  std::vector<Scalar> multipliers;
  for (double m : grid) {
    if (!(m > 0.0) || !std::isfinite(m))
      throw ContractViolation("ic_audit: deviation multipliers must be finite and positive");
    multipliers.push_back(static_cast<Scalar>(m));
  }
  Rng rng(seed);
  for (int t = 0; t < extra_trials; ++t)
    multipliers.push_back(static_cast<Scalar>(std::exp(rng.uniform(-std::log(4.0), std::log(4.0)))));

  const auto truthful = settle(book, params, solver, true, rule);
  ICReport<Scalar> report;
  for (Eigen::Index k = 0; k < book.size(); ++k) {
    const Scalar cost = book.bid(k);
    for (Scalar m : multipliers) {
      BidBook<Scalar> deviated = book;
      deviated.bid(k) = m * cost;
      const auto outcome = settle(deviated, params, solver, true, rule);
      const Scalar utility = outcome.allocation(k) != 0
                                 ? outcome.payments(k) - book.value(k) - cost
                                 : Scalar(0);
      const Scalar gain = utility - truthful.utilities(k);
      ++report.deviations;
      if (gain > report.max_gain) {
        report.max_gain = gain;
        report.worst_device = k;
        report.worst_multiplier = m;
      }
    }
  }
  return report;
}

template <typename Scalar>
struct IRReport {
  Scalar min_utility = std::numeric_limits<Scalar>::infinity();
  /// max over winners of |u_k - (S(x*) - S_{-k})|.
  Scalar max_identity_error = Scalar(0);
  std::int64_t winners = 0;

  bool holds() const {
    return (winners == 0 || min_utility >= -Scalar(kWelfareTolerance)) &&
           max_identity_error <= Scalar(kWelfareTolerance);
  }
};

/// Individual-rationality audit of a truthful round: every winner's utility
/// is non-negative and equals its marginal contribution S(x*) - S_{-k}.
template <typename Scalar>
IRReport<Scalar> ir_audit(const BidBook<Scalar>& book, const AuctionParams<Scalar>& params,
                          const PaymentRule<Scalar>& rule = vcg_rule<Scalar>(),
                          SolverKind solver = SolverKind::exact_dp) {
  using std::abs;
  const auto outcome = settle(book, params, solver, true, rule);
  IRReport<Scalar> report;
  for (Eigen::Index k = 0; k < book.size(); ++k) {
    if (outcome.allocation(k) == 0) continue;
    ++report.winners;
    const Scalar u = outcome.utilities(k);
    const Scalar marginal = outcome.social_welfare - welfare_without(k, book, params, solver);
    report.min_utility = std::min(report.min_utility, u);
    report.max_identity_error = std::max(report.max_identity_error, abs(u - marginal));
  }
  return report;
}

template <typename Scalar>
struct OracleReport {
  Scalar welfare_dp = Scalar(0);
  Scalar welfare_branch_bound = Scalar(0);
  Scalar welfare_brute_force = Scalar(0);
  bool winners_match = false;

  bool holds() const {
    return welfare_dp == welfare_brute_force && welfare_branch_bound == welfare_brute_force &&
           winners_match;
  }
};

/// Exact comparison of both exact backends against brute force.
template <typename Scalar>
OracleReport<Scalar> oracle_audit(const BidBook<Scalar>& book,
                                  const AuctionParams<Scalar>& params) {
  const Allocation dp = solve_exact_dp(book, params);
  const Allocation bb = solve_branch_bound(book, params);
  const Allocation bf = solve_brute_force(book, params);
  OracleReport<Scalar> report;
  report.welfare_dp = social_welfare(dp, book, params);
  report.welfare_branch_bound = social_welfare(bb, book, params);
  report.welfare_brute_force = social_welfare(bf, book, params);
  report.winners_match = dp == bf && bb == bf;
  return report;
}

}  // namespace semmarket
