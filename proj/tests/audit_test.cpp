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


#include "semmarket/auction/audit.hpp"

#include <gtest/gtest.h>

#include "semmarket/verification.hpp"

namespace semmarket {
namespace {

const std::vector<SealedBid> kTwoBidders{{0, 1.0, 6.0, 1}, {1, 1.0, 4.0, 1}};

// Pays each winner its reward plus its bid: a first-price rule.
PaymentRule<double> pay_as_bid() {
  return [](Eigen::Index k, const BidBookd& book, const AuctionParams<double>&,
            const Allocation&, SolverKind) { return book.value(k) + book.bid(k); };
}

TEST(IcAudit, IdentityDeviationGainsNothing) {
  VerificationOptions options;
  for (int t = 0; t < 30; ++t) {
    const Instance inst = verification_instance(options, t);
    const auto book = make_bid_book<double>(*inst.bids);
    const std::vector<double> identity{1.0};
    const auto report = ic_audit(book, params_from<double>(inst.config), identity);
    if (report.deviations > 0) {
      ASSERT_EQ(report.max_gain, 0.0) << "trial " << t;
    }
  }
}

TEST(IcAudit, UnderbiddingLoserStaysAtZero) {
  const auto book = make_bid_book<double>(kTwoBidders);
  const AuctionParams<double> p{1, 0.0, WelfareMode::value_aware};
  const std::vector<double> half{0.5};
  const auto truthful = settle(book, p);
  ASSERT_EQ(truthful.allocation(1), 0);

  auto deviated = book;
  deviated.bid(1) *= 0.5;
  const auto out = settle(deviated, p);
  EXPECT_EQ(out.allocation(1), 0);
  EXPECT_EQ(out.utilities(1), 0.0);
  EXPECT_LE(ic_audit(book, p, half).max_gain, 0.0);
}

TEST(IcAudit, HoldsOnRandomInstances) {
  VerificationOptions options;
  options.seed = 100;
  for (int t = 0; t < 60; ++t) {
    const Instance inst = verification_instance(options, t);
    const auto book = make_bid_book<double>(*inst.bids);
    const auto report = ic_audit(book, params_from<double>(inst.config), kDefaultDeviationGrid,
                                 8, static_cast<std::uint64_t>(t));
    ASSERT_TRUE(report.holds()) << "trial " << t << " gain " << report.max_gain;
  }
}

TEST(IcAudit, DetectsPayAsBid) {
  const auto book = make_bid_book<double>(kTwoBidders);
  const AuctionParams<double> p{1, 0.0, WelfareMode::value_aware};
  const auto report = ic_audit(book, p, kDefaultDeviationGrid, 0, 0, pay_as_bid());
  EXPECT_FALSE(report.holds());
  EXPECT_EQ(report.worst_device, 0);
  EXPECT_GT(report.max_gain, 0.0);
}

TEST(IcAudit, RejectsBadMultipliers) {
  const auto book = make_bid_book<double>(kTwoBidders);
  const AuctionParams<double> p{1, 0.0, WelfareMode::value_aware};
  const std::vector<double> bad{0.0};
  EXPECT_THROW(ic_audit(book, p, bad), ContractViolation);
}

TEST(IrAudit, UtilityEqualsMarginalContribution) {
  const auto book = make_bid_book<double>(kTwoBidders);
  const auto report = ir_audit(book, AuctionParams<double>{1, 0.0, WelfareMode::value_aware});
  EXPECT_EQ(report.winners, 1);
  EXPECT_DOUBLE_EQ(report.min_utility, 2.0);
  EXPECT_EQ(report.max_identity_error, 0.0);
  EXPECT_TRUE(report.holds());
}

TEST(IrAudit, FlagsRuleThatUnderpays) {
  const auto underpay = [](Eigen::Index k, const BidBookd& book, const AuctionParams<double>&,
                           const Allocation&, SolverKind) { return book.value(k); };
  const auto book = make_bid_book<double>(kTwoBidders);
  EXPECT_FALSE(ir_audit<double>(book, {1, 0.0, WelfareMode::value_aware}, underpay).holds());
}

TEST(OracleAudit, HoldsOnRandomInstances) {
  VerificationOptions options;
  options.seed = 55;
  for (int t = 0; t < 100; ++t) {
    const Instance inst = verification_instance(options, t);
    const auto report =
        oracle_audit(make_bid_book<double>(*inst.bids), params_from<double>(inst.config));
    ASSERT_TRUE(report.holds()) << "trial " << t;
  }
}

TEST(Verification, FaultyRuleProducesCounterexample) {
  VerificationOptions options;
  options.trials = 20;
  options.payment_rule = pay_as_bid();
  const auto report = run_verification(options);
  EXPECT_FALSE(report.passed());
  EXPECT_GT(report.ic_failures, 0);
  ASSERT_TRUE(report.counterexample.has_value());
  EXPECT_TRUE(validate_instance(report.counterexample->instance).ok());
}

TEST(Verification, RefusesOversizedInstances) {
  VerificationOptions options;
  options.n_max = 30;
  EXPECT_THROW(run_verification(options), Refusal);
}

}  // namespace
}  // namespace semmarket
