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
#include <functional>
#include <string>

#include "semmarket/auction/bid_book.hpp"
#include "semmarket/auction/solvers.hpp"

namespace semmarket {

/// Absolute tolerance of every welfare/utility equality check.
inline constexpr double kWelfareTolerance = 1e-9;

/// Computes the payment to bidder k given an allocation. The VCG rule is
/// the default; tests inject faulty rules as negative controls.
template <typename Scalar>
using PaymentRule = std::function<Scalar(Eigen::Index k, const BidBook<Scalar>&,
                                         const AuctionParams<Scalar>&, const Allocation&,
                                         SolverKind)>;

/// Best welfare achievable without bidder k (k stays in the book, but may
/// not win).
template <typename Scalar>
Scalar welfare_without(Eigen::Index k, const BidBook<Scalar>& book,
                       const AuctionParams<Scalar>& params,
                       SolverKind solver = SolverKind::exact_dp) {
  return social_welfare(solve(solver, book, params, k), book, params);
}

/// VCG payment to bidder k:
///
///   p_k = S(x*) - S_{-k} + (R_k + b_k) x_k
///
/// where S is the welfare of the active mode and S_{-k} is re-solved
/// exactly with k removed. Losers are paid exactly 0. Throws
/// ContractViolation if `allocation` is infeasible or not welfare-optimal.
template <typename Scalar>
Scalar vcg_payment(Eigen::Index k, const BidBook<Scalar>& book,
                   const AuctionParams<Scalar>& params, const Allocation& allocation,
                   SolverKind solver = SolverKind::exact_dp) {
  using std::abs;
  if (!is_exact(solver))
    throw ContractViolation("vcg_payment: requires an exact solver, got " +
                            to_string(solver));
  if (k < 0 || k >= book.size())
    throw ContractViolation("vcg_payment: bidder " + std::to_string(k) + " out of range");
  if (!is_feasible(allocation, book, params.budget))
    throw ContractViolation("vcg_payment: allocation is infeasible");
  const Scalar welfare = social_welfare(allocation, book, params);
  const Scalar optimum = social_welfare(solve(solver, book, params), book, params);
  if (welfare < optimum - Scalar(kWelfareTolerance))
    throw ContractViolation("vcg_payment: allocation is not welfare-optimal");

  if (allocation(k) == 0) return Scalar(0);
  return welfare - welfare_without(k, book, params, solver) + (book.value(k) + book.bid(k));
}

template <typename Scalar>
PaymentRule<Scalar> vcg_rule() {
  return [](Eigen::Index k, const BidBook<Scalar>& book, const AuctionParams<Scalar>& params,
            const Allocation& allocation, SolverKind solver) {
    return vcg_payment(k, book, params, allocation, solver);
  };
}

template <typename Scalar>
struct Settlement {
  Allocation allocation;
  VectorX<Scalar> payments;
  VectorX<Scalar> utilities;
  Scalar vsp_utility = Scalar(0);
  Scalar social_welfare = Scalar(0);
  SolverKind solver = SolverKind::exact_dp;
  bool with_payments = false;
};

/// Runs one auction round.
///
/// With payments: every winner k is paid by `rule` and earns
/// u_k = p_k - R_k - b_k; losers get p = u = 0. The provider earns
/// sum(x R) - sum(x p) - channel_cost. In literal mode the accounting
/// identity sum(x u) + u_vsp == S is checked and a ContractViolation is
/// thrown if it fails; in value-aware mode it does not hold in general.
///
/// Payments need an exact optimum, so requesting them with the greedy
/// solver throws ContractViolation.
template <typename Scalar>
Settlement<Scalar> settle(const BidBook<Scalar>& book, const AuctionParams<Scalar>& params,
                          SolverKind solver = SolverKind::exact_dp,
                          bool with_payments = true,
                          const PaymentRule<Scalar>& rule = vcg_rule<Scalar>()) {
  using std::abs;
  if (with_payments && !is_exact(solver))
    throw ContractViolation("settle: payments require an exact solver; " +
                            to_string(solver) + " outcomes carry no payments");
  const Eigen::Index n = book.size();
  Settlement<Scalar> out;
  out.solver = solver;
  out.with_payments = with_payments;
  out.allocation = solve(solver, book, params);
  out.social_welfare = social_welfare(out.allocation, book, params);
  out.payments = VectorX<Scalar>::Zero(n);
  out.utilities = VectorX<Scalar>::Zero(n);
  if (!with_payments) return out;

  Scalar reward(0);
  Scalar paid(0);
  for (Eigen::Index k = 0; k < n; ++k) {
    if (out.allocation(k) == 0) continue;
    out.payments(k) = rule(k, book, params, out.allocation, solver);
    out.utilities(k) = out.payments(k) - book.value(k) - book.bid(k);
    reward += book.value(k);
    paid += out.payments(k);
  }
  out.vsp_utility = reward - paid - params.channel_cost;

  if (params.mode == WelfareMode::literal) {
    const Scalar total = out.utilities.sum() + out.vsp_utility;
    if (abs(total - out.social_welfare) > Scalar(kWelfareTolerance))
      throw ContractViolation("settle: literal-mode accounting identity violated");
  }
  return out;
}

/// Converts a settlement into the public outcome record.
template <typename Scalar>
AuctionOutcome to_outcome(const Settlement<Scalar>& s) {
  AuctionOutcome o;
  const auto n = static_cast<std::size_t>(s.allocation.size());
  o.allocation.resize(n);
  for (std::size_t i = 0; i < n; ++i)
    o.allocation[i] = static_cast<std::uint8_t>(s.allocation(static_cast<Eigen::Index>(i)));
  if (s.with_payments) {
    o.payments.resize(n);
    o.device_utilities.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      o.payments[i] = static_cast<double>(s.payments(static_cast<Eigen::Index>(i)));
      o.device_utilities[i] = static_cast<double>(s.utilities(static_cast<Eigen::Index>(i)));
    }
    o.vsp_utility = static_cast<double>(s.vsp_utility);
  }
  o.social_welfare = static_cast<double>(s.social_welfare);
  o.solver = s.solver;
  o.winners = winners_of(s.allocation);
  return o;
}

/// Convenience entry point on sealed bids and a market config.
/// Greedy rounds are settled without payments.
AuctionOutcome settle(std::span<const SealedBid> bids, const MarketConfig& config,
                      SolverKind solver = SolverKind::exact_dp);

}  // namespace semmarket
