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


#include "semmarket/semval.hpp"

#include <gtest/gtest.h>

#include "semmarket/rng.hpp"
#include "semmarket/scenario.hpp"

namespace semmarket {
namespace {

ObjectSemantics object_with(int flags, double quality) {
  ObjectSemantics o;
  o.has_speed = flags > 0;
  o.has_size = flags > 1;
  o.has_position = flags > 2;
  o.has_direction = flags > 3;
  o.quality = quality;
  return o;
}

SceneSemantics scene_with(std::vector<ObjectSemantics> objects, double weather) {
  SceneSemantics s;
  s.object_count = static_cast<std::int32_t>(objects.size());
  s.objects = std::move(objects);
  s.weather = weather;
  return s;
}

TEST(SemanticValue, HandExamples) {
  EXPECT_DOUBLE_EQ(semantic_value(scene_with({object_with(4, 0.5)}, 1.0), 1.0), 3.0);
  EXPECT_DOUBLE_EQ(semantic_value(scene_with({}, 1.0), 4.0), 0.25);
  EXPECT_NEAR(semantic_value(scene_with({object_with(3, 0.6), object_with(2, 0.5)}, 0.5), 10.0),
              5.7, 1e-12);
}

TEST(SemanticValue, RejectsNonPositiveSize) {
  const auto s = scene_with({}, 1.0);
  EXPECT_THROW(semantic_value(s, 0.0), DomainError);
  EXPECT_THROW(semantic_value(s, -2.0), DomainError);
}

TEST(SemanticValue, WeatherIsClampedAtFloor) {
  MarketConfig config;
  const auto s = scene_with({object_with(1, 1.0)}, 0.0);
  EXPECT_DOUBLE_EQ(semantic_value(s, 1.0, config), 1.0 / config.w_min + 1.0);
}

TEST(SemanticValue, MonotoneProperties) {
  Rng rng(99);
  for (int t = 0; t < 1000; ++t) {
    std::vector<ObjectSemantics> objects;
    for (int i = 0, n = static_cast<int>(rng.between(0, 4)); i < n; ++i)
      objects.push_back(object_with(static_cast<int>(rng.between(0, 4)), rng.uniform(0, 1)));
    const double w = rng.uniform(0.05, 1.0);
    const double size = rng.uniform(0.5, 100);
    const auto scene = scene_with(objects, w);
    const double v = semantic_value(scene, size);

    // Clearer weather and larger payloads never add value.
    ASSERT_LE(semantic_value(scene_with(objects, std::min(1.0, w + 0.1)), size), v);
    ASSERT_LE(semantic_value(scene, size * 2), v);
    // One more flagged object never removes value.
    auto more = objects;
    more.push_back(object_with(2, rng.uniform(0, 1)));
    ASSERT_GE(semantic_value(scene_with(more, w), size), v);
    ASSERT_GT(v, 0.0);
  }
}

TEST(ChannelDemand, HandExamples) {
  MarketConfig config;  // r = 10 kbps, t_max = 1 s
  EXPECT_EQ(channel_demand(25.0, config), 3);
  EXPECT_EQ(channel_demand(10.0, config), 1);
  EXPECT_EQ(channel_demand(10.1, config), 2);
  EXPECT_EQ(channel_demand(3.0, config), 1);
  EXPECT_EQ(channel_demand(500.0, config), 50);
  EXPECT_THROW(channel_demand(0.0, config), DomainError);
}

TEST(ChannelDemand, SmallestSufficientCount) {
  Rng rng(5);
  MarketConfig config;
  for (int t = 0; t < 1000; ++t) {
    config.channel_rate_kbps = rng.uniform(0.5, 30);
    config.freshness_threshold_s = rng.uniform(0.1, 3);
    const double payload = rng.uniform(0.01, 800);
    const auto c = channel_demand(payload, config);
    const double cap = config.channel_capacity_kb();
    ASSERT_GE(c, 1);
    ASSERT_GE(c * cap, payload);
    if (c > 1) {
      ASSERT_LT((c - 1) * cap, payload * (1 + 1e-12));
    }
  }
}

TEST(MakeBid, SemanticNeverNeedsMoreChannelsThanRaw) {
  const Instance inst = generate_population(30, 11, default_market_config(20));
  for (const auto& d : inst.devices) {
    const auto& scene = inst.scene_of(d);
    const auto s = make_bid(d, scene, inst.config, Transmission::semantic);
    const auto r = make_bid(d, scene, inst.config, Transmission::raw);
    EXPECT_LE(s.channel_demand, r.channel_demand);
    EXPECT_EQ(s.device_id, d.id);
  }
}

TEST(MakeBid, ValueSizeBasisSelectsDenominator) {
  const Instance inst = generate_population(1, 3, default_market_config(20));
  const auto& d = inst.devices[0];
  const auto& scene = inst.scene_of(d);
  MarketConfig config = inst.config;
  config.value_size_basis = ValueSizeBasis::payload;
  EXPECT_DOUBLE_EQ(make_bid(d, scene, config, Transmission::semantic).semantic_value,
                   semantic_value(scene, scene.semantic_payload_kb, config));
  config.value_size_basis = ValueSizeBasis::raw;
  EXPECT_DOUBLE_EQ(make_bid(d, scene, config, Transmission::semantic).semantic_value,
                   semantic_value(scene, scene.raw_size_kb, config));
}

}  // namespace
}  // namespace semmarket
