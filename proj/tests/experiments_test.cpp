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


#include "semmarket/experiments.hpp"

#include <gtest/gtest.h>

#include "semmarket/auction/solvers.hpp"
#include "semmarket/semval.hpp"

namespace semmarket {
namespace {

TEST(BudgetRange, ParsesAndExpands) {
  EXPECT_EQ(parse_budget_range("3:21:3").values(),
            (std::vector<std::int32_t>{3, 6, 9, 12, 15, 18, 21}));
  EXPECT_EQ(parse_budget_range("10:12").values(), (std::vector<std::int32_t>{10, 11, 12}));
  EXPECT_TRUE(parse_budget_range("5:4").values().empty());
  EXPECT_THROW(parse_budget_range("5"), std::invalid_argument);
  EXPECT_THROW(parse_budget_range("a:4"), std::invalid_argument);
  EXPECT_THROW(parse_budget_range("1:4:0"), std::invalid_argument);
  EXPECT_THROW(parse_budget_range("-1:4"), std::invalid_argument);
}

TEST(Csv, QuotesOnlyWhenNeeded) {
  EXPECT_EQ(csv_field("1;2"), "1;2");
  EXPECT_EQ(csv_field("a,b"), "\"a,b\"");
  EXPECT_EQ(csv_field("say \"hi\""), "\"say \"\"hi\"\"\"");
  EXPECT_EQ(format_double(0.1), "0.1");
  EXPECT_EQ(format_double(-3.0), "-3");
}

TEST(WinnerList, SevenRowsAndStableCsv) {
  const auto records = winner_list_experiment(parse_budget_range("3:21:3"));
  ASSERT_EQ(records.size(), 7u);
  const std::string csv = to_csv(records);
  EXPECT_EQ(csv, to_csv(winner_list_experiment(parse_budget_range("3:21:3"))));
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "B,winner_count,welfare,winner_ids,winner_tags");
}

TEST(WinnerList, ZeroBudgetHasNoWinners) {
  const auto records = winner_list_experiment({0, 0, 1});
  ASSERT_EQ(records.size(), 1u);
  EXPECT_TRUE(records[0].winners.empty());
}

TEST(WinnerList, TagsNameGroupAndRow) {
  EXPECT_EQ(table1_tag(0), "g1d1");
  EXPECT_EQ(table1_tag(9), "g2d5");
}

TEST(SolverGap, RecordsMatchFreshSolves) {
  const Instance inst = solver_gap_fixture();
  const auto book = make_bid_book<double>(bids_of(inst));
  const auto records = solver_gap_sweep(inst, {0, 40, 1});
  double previous = -1e300;
  for (const auto& r : records) {
    const AuctionParams<double> p{r.budget, inst.config.channel_cost, inst.config.welfare_mode};
    const auto exact = solve_exact_dp(book, p);
    EXPECT_EQ(r.winners_exact, winners_of(exact));
    EXPECT_EQ(r.welfare_exact, social_welfare(exact, book, p));
    EXPECT_EQ(r.winners_greedy, winners_of(solve_greedy(book, p)));
    EXPECT_GE(r.gap, 0.0);
    EXPECT_GE(r.welfare_exact, previous);
    previous = r.welfare_exact;
  }
}

TEST(SolverGap, EmptyBudgetGivesMinusChannelCost) {
  Instance inst = solver_gap_fixture();
  inst.config.channel_cost = 2.5;
  const auto r = solver_gap_sweep(inst, {0, 0, 1}).front();
  EXPECT_EQ(r.welfare_exact, -2.5);
  EXPECT_EQ(r.welfare_greedy, -2.5);
}

TEST(Transmission, SemanticNeverTrailsRaw) {
  const Instance inst = generate_population(20, 42, default_market_config(0));
  const auto records = transmission_compare(inst, {10, 40, 1});
  ASSERT_EQ(records.size(), 31u);
  for (const auto& r : records) {
    EXPECT_GE(r.winners_semantic, r.winners_raw) << "B " << r.budget;
    EXPECT_GE(r.welfare_semantic, r.welfare_raw) << "B " << r.budget;
  }
  EXPECT_EQ(to_csv(records), to_csv(transmission_compare(inst, {10, 40, 1})));
}

}  // namespace
}  // namespace semmarket
