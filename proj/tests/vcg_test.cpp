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


#include "semmarket/auction/vcg.hpp"

#include <gtest/gtest.h>

#include "semmarket/scenario.hpp"
#include "semmarket/verification.hpp"
#include "test_oracle.hpp"

namespace semmarket {
namespace {

// Two bidders with one channel each; only one fits.
const std::vector<SealedBid> kTwoBidders{{0, 1.0, 6.0, 1}, {1, 1.0, 4.0, 1}};

MarketConfig config_with(std::int32_t budget, double channel_cost = 0.0,
                         WelfareMode mode = WelfareMode::value_aware) {
  MarketConfig c;
  c.num_channels = budget;
  c.channel_cost = channel_cost;
  c.welfare_mode = mode;
  return c;
}

TEST(VcgPayment, TwoBidderHandExample) {
  const auto out = settle(kTwoBidders, config_with(1));
  EXPECT_EQ(out.winners, (std::vector<DeviceId>{0}));
  EXPECT_DOUBLE_EQ(out.social_welfare, 5.0);
  ASSERT_TRUE(out.has_payments());
  EXPECT_DOUBLE_EQ(out.payments[0], 9.0);
  EXPECT_EQ(out.payments[1], 0.0);
  EXPECT_DOUBLE_EQ(out.device_utilities[0], 2.0);
  EXPECT_EQ(out.device_utilities[1], 0.0);
  EXPECT_DOUBLE_EQ(out.vsp_utility, -3.0);
}

TEST(VcgPayment, MonopolistIsPaidTwiceItsReward) {
  const std::vector<SealedBid> one{{0, 1.5, 4.0, 2}};
  for (double channel_cost : {0.0, 2.0}) {
    const auto out = settle(one, config_with(3, channel_cost));
    ASSERT_EQ(out.winners.size(), 1u);
    EXPECT_DOUBLE_EQ(out.payments[0], 8.0);
    EXPECT_DOUBLE_EQ(out.device_utilities[0], 4.0 - 1.5);
  }
}

TEST(VcgPayment, ChannelCostCancels) {
  const auto a = settle(kTwoBidders, config_with(1, 0.0));
  const auto b = settle(kTwoBidders, config_with(1, 3.25));
  EXPECT_EQ(a.payments, b.payments);
  EXPECT_DOUBLE_EQ(b.vsp_utility, a.vsp_utility - 3.25);
}

TEST(VcgPayment, RejectsSuboptimalOrInfeasibleAllocations) {
  const auto book = make_bid_book<double>(kTwoBidders);
  const AuctionParams<double> p{1, 0.0, WelfareMode::value_aware};
  Allocation worse(2);
  worse << 0, 1;
  EXPECT_THROW(vcg_payment(1, book, p, worse), ContractViolation);
  Allocation both(2);
  both << 1, 1;
  EXPECT_THROW(vcg_payment(0, book, p, both), ContractViolation);
  Allocation best(2);
  best << 1, 0;
  EXPECT_THROW(vcg_payment(0, book, p, best, SolverKind::greedy), ContractViolation);
}

TEST(Settle, GreedyCarriesNoPayments) {
  const auto out = settle(kTwoBidders, config_with(1), SolverKind::greedy);
  EXPECT_FALSE(out.has_payments());
  const auto book = make_bid_book<double>(kTwoBidders);
  EXPECT_THROW(settle(book, params_from<double>(config_with(1)), SolverKind::greedy, true),
               ContractViolation);
}

TEST(Settle, LiteralEmptyRoundSatisfiesIdentity) {
  const auto out = settle(kTwoBidders, config_with(5, 1.5, WelfareMode::literal));
  EXPECT_TRUE(out.winners.empty());
  EXPECT_DOUBLE_EQ(out.social_welfare, -1.5);
  EXPECT_DOUBLE_EQ(out.vsp_utility, -1.5);
}

TEST(Settle, BackendsProduceIdenticalOutcomes) {
  VerificationOptions options;
  options.seed = 3;
  for (int t = 0; t < 60; ++t) {
    const Instance inst = verification_instance(options, t);
    const auto dp = settle(*inst.bids, inst.config, SolverKind::exact_dp);
    const auto bb = settle(*inst.bids, inst.config, SolverKind::branch_bound);
    const auto bf = settle(*inst.bids, inst.config, SolverKind::brute_force);
    ASSERT_EQ(dp.winners, bf.winners);
    ASSERT_EQ(bb.winners, bf.winners);
    ASSERT_EQ(dp.payments, bf.payments) << "trial " << t;
    ASSERT_EQ(bb.payments, bf.payments) << "trial " << t;
  }
}

// Payments recomputed from the independent enumeration.
TEST(Settle, PaymentsMatchIndependentRecomputation) {
  VerificationOptions options;
  options.seed = 12;
  for (int t = 0; t < 80; ++t) {
    const Instance inst = verification_instance(options, t);
    const auto& bids = *inst.bids;
    std::vector<testing::PlainBid> plain;
    for (const auto& b : bids) plain.push_back({b.bid, b.semantic_value, b.channel_demand});
    const bool value_aware = inst.config.welfare_mode == WelfareMode::value_aware;
    const auto best = testing::plain_optimum(plain, inst.config.num_channels, value_aware);
    const auto out = settle(bids, inst.config);
    ASSERT_EQ(out.winners, best.winners);
    for (int k : best.winners) {
      const auto without = testing::plain_optimum(plain, inst.config.num_channels, value_aware, k);
      const long double expected =
          best.gain - without.gain + bids[k].semantic_value + bids[k].bid;
      ASSERT_NEAR(out.payments[k], (double)expected, 1e-9) << "trial " << t << " k " << k;
      ASSERT_GE(out.device_utilities[k], -1e-9);
    }
  }
}

TEST(Settle, LiteralAccountingIdentityHolds) {
  VerificationOptions options;
  options.seed = 21;
  for (int t = 0; t < 40; ++t) {
    Instance inst = verification_instance(options, t);
    inst.config.welfare_mode = WelfareMode::literal;
    inst.config.channel_cost = 0.5;
    const auto out = settle(*inst.bids, inst.config);
    double total = out.vsp_utility;
    for (double u : out.device_utilities) total += u;
    ASSERT_NEAR(total, out.social_welfare, 1e-9);
  }
}

}  // namespace
}  // namespace semmarket
