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


#include "semmarket/scenario.hpp"

#include <algorithm>
#include <filesystem>

#include <gtest/gtest.h>

#include "semmarket/instance_io.hpp"
#include "semmarket/semval.hpp"

namespace semmarket {
namespace {

TEST(Profiles, DefaultTableIsConsistent) {
  const auto table = default_profile_table();
  EXPECT_NO_THROW(check_profile_table(table));
  const double ramp = profile_for(table, Algorithm::ramp_cnn_ra).quality;
  for (const auto& p : table)
    if (p.algorithm != Algorithm::ramp_cnn_ra) {
      EXPECT_GT(p.quality, ramp);
    }
  const auto& combo = profile_for(table, Algorithm::mask_rcnn_tmva_net);
  EXPECT_EQ(combo.sensors.size(), 3u);
}

TEST(Profiles, OrderingViolationIsRejected) {
  auto table = default_profile_table();
  for (auto& p : table)
    if (p.algorithm == Algorithm::ramp_cnn_ra) p.quality = 0.99;
  EXPECT_THROW(check_profile_table(table), ContractViolation);
}

TEST(Profiles, JsonRoundTrip) {
  const auto table = default_profile_table();
  EXPECT_EQ(profile_table_from_json(to_json(table)), table);
  auto j = nlohmann::json(to_json(table));
  j[0]["speed"] = 1;
  EXPECT_THROW(profile_table_from_json(j), FormatError);
}

TEST(Generator, DeterministicBytes) {
  const auto config = default_market_config(20);
  EXPECT_EQ(dump_instance(generate_population(20, 42, config)),
            dump_instance(generate_population(20, 42, config)));
  EXPECT_NE(dump_instance(generate_population(20, 42, config)),
            dump_instance(generate_population(20, 43, config)));
}

TEST(Generator, InstancesValidateAndRespectPayloadBound) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Instance inst = generate_population(25, seed, default_market_config(15));
    const auto report = validate_instance(inst);
    ASSERT_TRUE(report.ok()) << report.violations.front();
    for (const auto& s : inst.scenes) ASSERT_LE(s.semantic_payload_kb, s.raw_size_kb);
    ASSERT_EQ(*inst.bids, derive_bids(inst, Transmission::semantic));
  }
}

TEST(Generator, RampDevicesCarryLowestQuality) {
  const auto table = default_profile_table();
  const double ramp = profile_for(table, Algorithm::ramp_cnn_ra).quality;
  const Instance inst = generate_population(200, 8, default_market_config(15));
  int seen = 0;
  for (const auto& d : inst.devices) {
    if (d.algorithm != Algorithm::ramp_cnn_ra) continue;
    ++seen;
    for (const auto& o : inst.scene_of(d).objects) EXPECT_EQ(o.quality, ramp);
  }
  EXPECT_GT(seen, 0);
}

TEST(Generator, RejectsEmptyPopulation) {
  EXPECT_THROW(generate_population(0, 1, default_market_config(10)), ContractViolation);
}

TEST(Table1Fixture, GroupsAndRows) {
  const Instance inst = table1_fixture(3, 1);
  ASSERT_EQ(inst.devices.size(), 10u);
  EXPECT_TRUE(validate_instance(inst).ok());
  EXPECT_EQ(inst.devices[4].algorithm, Algorithm::mask_rcnn_tmva_net);
  EXPECT_EQ(inst.devices[9].algorithm, Algorithm::mask_rcnn_tmva_net);
  EXPECT_EQ(inst.devices[1].algorithm, Algorithm::ramp_cnn_ra);
  EXPECT_EQ(table1_group(4), 1);
  EXPECT_EQ(table1_group(5), 2);
  EXPECT_EQ(table1_row(9), 5);
  for (const auto& d : inst.devices) {
    const auto& scene = inst.scene_of(d);
    EXPECT_EQ(scene.object_count, table1_group(d.id) == 1 ? 3 : 1);
  }
}

TEST(Table1Fixture, EmptyScenesLeaveOnlySizeTerm) {
  const Instance inst = table1_fixture(0, 0);
  for (const auto& d : inst.devices) {
    const auto& scene = inst.scene_of(d);
    EXPECT_DOUBLE_EQ((*inst.bids)[d.id].semantic_value, 1.0 / scene.raw_size_kb);
  }
}

TEST(Fixtures, ShippedFixturesValidate) {
  EXPECT_TRUE(validate_instance(solver_gap_fixture()).ok());
  EXPECT_TRUE(validate_instance(winner_drop_fixture()).ok());
}

TEST(Fixtures, FilesMatchBuiltIns) {
  const std::filesystem::path dir = SEMMARKET_FIXTURE_DIR;
  EXPECT_EQ(read_instance(dir / "solver_gap.json"), solver_gap_fixture());
  EXPECT_EQ(read_instance(dir / "winner_drop.json"), winner_drop_fixture());
  EXPECT_EQ(read_instance(dir / "table1.json"), table1_fixture());
  EXPECT_TRUE(validate_instance(read_instance(dir / "two_bidders.json")).ok());
}

}  // namespace
}  // namespace semmarket
