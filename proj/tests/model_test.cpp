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


#include "semmarket/model.hpp"

#include <algorithm>

#include <gtest/gtest.h>

#include "semmarket/instance_io.hpp"
#include "semmarket/scenario.hpp"

namespace semmarket {
namespace {

bool mentions(const ValidationReport& r, const std::string& text) {
  return std::any_of(r.violations.begin(), r.violations.end(),
                     [&](const std::string& v) { return v.find(text) != std::string::npos; });
}

TEST(Validate, WellFormedInstanceHasNoViolations) {
  const Instance inst = generate_population(3, 1, default_market_config(10));
  const auto report = validate_instance(inst);
  EXPECT_TRUE(report.ok()) << report.violations.front();
}

TEST(Validate, ZeroChannelDemand) {
  Instance inst = generate_population(3, 1, default_market_config(10));
  (*inst.bids)[1].channel_demand = 0;
  EXPECT_TRUE(mentions(validate_instance(inst), "channel_demand ≥ 1"));
}

TEST(Validate, WeatherBelowFloor) {
  Instance inst = generate_population(3, 1, default_market_config(10));
  inst.scenes[0].weather = 0.0;
  EXPECT_TRUE(mentions(validate_instance(inst), "weather below w_min"));
}

TEST(Validate, StructuralViolations) {
  Instance inst = generate_population(3, 1, default_market_config(10));
  inst.devices[2].id = 7;
  EXPECT_TRUE(mentions(validate_instance(inst), "ids dense"));

  inst = generate_population(3, 1, default_market_config(10));
  inst.scenes[0].semantic_payload_kb = inst.scenes[0].raw_size_kb * 2;
  EXPECT_TRUE(mentions(validate_instance(inst), "semantic_payload_kb ≤ raw_size_kb"));

  inst = generate_population(3, 1, default_market_config(10));
  (*inst.bids)[0].bid = -1.0;
  EXPECT_TRUE(mentions(validate_instance(inst), "bid > 0"));

  inst = generate_population(3, 1, default_market_config(10));
  inst.bids->pop_back();
  EXPECT_TRUE(mentions(validate_instance(inst), "one bid per device"));

  inst = generate_population(3, 1, default_market_config(10));
  inst.config.num_channels = -1;
  EXPECT_FALSE(validate_instance(inst).ok());
}

TEST(Names, RoundTrip) {
  for (auto a : {Algorithm::mask_rcnn, Algorithm::ramp_cnn_ra, Algorithm::fcn8s_ra,
                 Algorithm::fcn8s_rd, Algorithm::tmva_net, Algorithm::mask_rcnn_tmva_net})
    EXPECT_EQ(parse_algorithm(to_string(a)), a);
  for (auto s : {SolverKind::exact_dp, SolverKind::branch_bound, SolverKind::greedy,
                 SolverKind::brute_force})
    EXPECT_EQ(parse_solver_kind(to_string(s)), s);
  EXPECT_EQ(parse_welfare_mode("literal"), WelfareMode::literal);
  EXPECT_THROW(parse_solver_kind("gurobi"), std::invalid_argument);
}

TEST(InstanceJson, RoundTripIsExact) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    MarketConfig config = default_market_config(static_cast<std::int32_t>(seed % 41));
    config.channel_cost = 0.125 * static_cast<double>(seed % 5);
    if (seed % 3 == 0) config.welfare_mode = WelfareMode::literal;
    const Instance inst =
        generate_population(static_cast<std::int32_t>(1 + seed % 20), seed, config);
    const std::string text = dump_instance(inst);
    const Instance back = parse_instance(text);
    ASSERT_EQ(back, inst) << "seed " << seed;
    ASSERT_EQ(dump_instance(back), text);
  }
}

TEST(InstanceJson, BidsAreOptional) {
  Instance inst = generate_population(4, 2, default_market_config(10));
  inst.bids.reset();
  EXPECT_EQ(parse_instance(dump_instance(inst)), inst);
}

TEST(InstanceJson, RejectsUnknownAndMissingFields) {
  const Instance inst = generate_population(2, 9, default_market_config(10));
  auto j = nlohmann::json::parse(dump_instance(inst));

  auto extra = j;
  extra["devices"][0]["colour"] = "red";
  EXPECT_THROW(instance_from_json(extra), FormatError);

  auto missing = j;
  missing["config"].erase("channel_rate_kbps");
  EXPECT_THROW(instance_from_json(missing), FormatError);

  auto wrong_type = j;
  wrong_type["scenes"][0]["weather"] = "sunny";
  EXPECT_THROW(instance_from_json(wrong_type), FormatError);

  EXPECT_THROW(parse_instance("{not json"), FormatError);
}

TEST(ConfigJson, MergeOverlaysPresentKeysOnly) {
  MarketConfig base = default_market_config(12);
  const auto merged = merge_config(base, nlohmann::json{{"num_channels", 30}});
  EXPECT_EQ(merged.num_channels, 30);
  EXPECT_EQ(merged.channel_rate_kbps, base.channel_rate_kbps);
  EXPECT_THROW(merge_config(base, nlohmann::json{{"budget", 3}}), FormatError);
}

}  // namespace
}  // namespace semmarket
