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

#include <array>
#include <cstdint>
#include <filesystem>
#include <vector>

#include <json.hpp>

#include "semmarket/model.hpp"

// Seeded synthetic markets and the fixed fixtures used by the experiments.
namespace semmarket {

/// Extraction algorithm as deployed on a device: which sensors it reads,
/// how good its masks are, how long it runs, and which of the four
/// semantic attributes (speed, size, position, direction) it can report.
struct AlgorithmProfile {
  Algorithm algorithm = Algorithm::mask_rcnn;
  std::vector<SensorKind> sensors;
  double quality = 0.0;
  double extraction_time_s = 0.0;
  std::array<bool, 4> capabilities{};

  bool operator==(const AlgorithmProfile&) const = default;
};

using ProfileTable = std::vector<AlgorithmProfile>;

/// Built-in table. Qualities: Mask R-CNN 0.74, TMVA-NET 0.68, FCN-8s 0.55,
/// RAMP-CNN 0.45, Mask R-CNN + TMVA-NET 0.80. Radar reports speed and
/// position, the camera reports size and direction, the fusion all four.
ProfileTable default_profile_table();

/// Throws ContractViolation unless RAMP-CNN has strictly the lowest and the
/// camera+radar fusion strictly the highest quality, qualities lie in
/// [0, 1] and algorithms are unique.
void check_profile_table(const ProfileTable& table);

const AlgorithmProfile& profile_for(const ProfileTable& table, Algorithm algorithm);

nlohmann::ordered_json to_json(const ProfileTable& table);
ProfileTable profile_table_from_json(const nlohmann::json& j);
ProfileTable read_profile_table(const std::filesystem::path& path);

/// Distributions of the synthetic population. Sizes in kilobits.
struct GeneratorParams {
  double camera_raw_kb = 500.0;
  double radar_view_raw_kb = 256.0;
  double mask_payload_min_kb = 2.0;
  double mask_payload_max_kb = 6.0;
  double metadata_max_kb = 1.0;
  std::int32_t max_objects = 4;
  double flag_probability = 0.75;
  double weather_min = 0.3;
  double weather_max = 1.0;
  double compute_cost_min = 0.0005;  // per kilobit
  double compute_cost_max = 0.002;
  double step_cost_min = 0.5;  // per second of extraction
  double step_cost_max = 2.0;
  double tx_cost_min = 0.005;  // per kbps-channel
  double tx_cost_max = 0.02;

  /// Wider mask payloads (1-60 kb) so that channel demands vary between
  /// bidders; used by the property audits.
  static GeneratorParams wide_demand();
};

/// Deterministic population of n devices, one scene each, with truthful
/// semantic-mode bids. Each device draws its profile uniformly from the
/// table. Throws ContractViolation for n < 1 or an invalid config/table.
Instance generate_population(std::int32_t n, std::uint64_t seed, const MarketConfig& config,
                             const ProfileTable& profiles = default_profile_table(),
                             const GeneratorParams& params = {});

/// Market defaults of the experiments: r = 10 kbps, t_max = 1 s.
MarketConfig default_market_config(std::int32_t num_channels = 0);

/// Two identical groups of five devices (ids 0-4 and 5-9), one device per
/// row of the extraction-algorithm table: Mask R-CNN camera, RAMP-CNN (RA),
/// FCN-8s (RA), TMVA-NET (RA+RD), and camera+radar Mask R-CNN + TMVA-NET.
/// Group 1 scenes hold objects_group1 objects, group 2 scenes
/// objects_group2. Every object carries all attributes its profile can
/// report.
Instance table1_fixture(std::int32_t objects_group1 = 3, std::int32_t objects_group2 = 1,
                        const ProfileTable& profiles = default_profile_table(),
                        const MarketConfig& config = default_market_config(15));

inline constexpr DeviceId kTable1GroupSize = 5;

/// 1 or 2 for a device of table1_fixture.
int table1_group(DeviceId id);
/// Row 1..5 of the algorithm table for a device of table1_fixture.
int table1_row(DeviceId id);

/// Four cheap low-value bidders (5 channels each) and three pricier
/// high-value ones (4 channels each). Sorting by bid sends the greedy
/// baseline down the wrong branch until every positive bidder fits
/// (32 channels).
Instance solver_gap_fixture();
inline constexpr std::int32_t kSolverGapSaturation = 32;

/// Five 5-channel bidders and one 15-channel bidder of higher value: at
/// B = 25 all five small ones win, at B = 30 the big one displaces two of
/// them, so the winner count drops by one while welfare rises.
Instance winner_drop_fixture();

}  // namespace semmarket
