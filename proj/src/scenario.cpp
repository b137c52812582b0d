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
#include <set>
#include <string>

#include "semmarket/instance_io.hpp"
#include "semmarket/rng.hpp"
#include "semmarket/semval.hpp"

namespace semmarket {

namespace {

constexpr std::array<bool, 4> kRadarFlags{true, false, true, false};
constexpr std::array<bool, 4> kCameraFlags{false, true, false, true};
constexpr std::array<bool, 4> kAllFlags{true, true, true, true};

double raw_size_for(SensorKind kind, const GeneratorParams& p) {
  return kind == SensorKind::camera ? p.camera_raw_kb : p.radar_view_raw_kb;
}

ObjectSemantics make_object(const std::array<bool, 4>& flags, double quality) {
  return {flags[0], flags[1], flags[2], flags[3], quality};
}

// Fixture device reading every sensor of its profile, with a uniform
// per-kilobit compute cost.
struct FixtureRecipe {
  Algorithm algorithm;
  double compute_cost;
  double step_cost;
  double tx_cost;
  std::int32_t objects;
  double weather;
  double payload_kb;
};

void add_fixture_device(Instance& instance, const ProfileTable& profiles,
                        const FixtureRecipe& recipe) {
  const auto id = static_cast<DeviceId>(instance.devices.size());
  const auto& profile = profile_for(profiles, recipe.algorithm);
  const GeneratorParams sizes;

  Device device;
  device.id = id;
  device.algorithm = recipe.algorithm;
  for (SensorKind kind : profile.sensors)
    device.readings.push_back({kind, raw_size_for(kind, sizes), recipe.compute_cost});
  device.extraction_time_s = profile.extraction_time_s;
  device.per_step_compute_cost = recipe.step_cost;
  device.per_unit_tx_cost = recipe.tx_cost;
  device.scene_id = id;

  SceneSemantics scene;
  scene.id = id;
  scene.object_count = recipe.objects;
  for (std::int32_t j = 0; j < recipe.objects; ++j)
    scene.objects.push_back(make_object(profile.capabilities, profile.quality));
  scene.weather = recipe.weather;
  scene.raw_size_kb = device.raw_size_kb();
  scene.semantic_payload_kb = std::min(recipe.payload_kb, scene.raw_size_kb);

  instance.devices.push_back(std::move(device));
  instance.scenes.push_back(std::move(scene));
}

void attach_semantic_bids(Instance& instance) {
  instance.bids = derive_bids(instance, Transmission::semantic);
}

}  // namespace

ProfileTable default_profile_table() {
  using S = SensorKind;
  return {
      {Algorithm::mask_rcnn, {S::camera}, 0.74, 0.10, kCameraFlags},
      {Algorithm::ramp_cnn_ra, {S::radar_ra}, 0.45, 0.30, kRadarFlags},
      {Algorithm::fcn8s_ra, {S::radar_ra}, 0.55, 0.08, kRadarFlags},
      {Algorithm::fcn8s_rd, {S::radar_rd}, 0.55, 0.08, kRadarFlags},
      {Algorithm::tmva_net, {S::radar_ra, S::radar_rd}, 0.68, 0.20, kRadarFlags},
      {Algorithm::mask_rcnn_tmva_net, {S::camera, S::radar_ra, S::radar_rd}, 0.80, 0.30,
       kAllFlags},
  };
}

void check_profile_table(const ProfileTable& table) {
  if (table.empty()) throw ContractViolation("profile table is empty");
  std::set<Algorithm> seen;
  for (const auto& p : table) {
    if (!seen.insert(p.algorithm).second)
      throw ContractViolation("profile table: duplicate " + to_string(p.algorithm));
    if (!(p.quality >= 0.0 && p.quality <= 1.0))
      throw ContractViolation("profile table: quality of " + to_string(p.algorithm) +
                              " outside [0, 1]");
    if (!(p.extraction_time_s >= 0.0))
      throw ContractViolation("profile table: negative extraction time");
    if (p.sensors.empty())
      throw ContractViolation("profile table: " + to_string(p.algorithm) + " has no sensors");
  }
  for (const auto& p : table) {
    if (p.algorithm != Algorithm::ramp_cnn_ra && seen.contains(Algorithm::ramp_cnn_ra) &&
        !(profile_for(table, Algorithm::ramp_cnn_ra).quality < p.quality))
      throw ContractViolation("profile table: RAMP-CNN must have strictly the lowest quality");
    if (p.algorithm != Algorithm::mask_rcnn_tmva_net &&
        seen.contains(Algorithm::mask_rcnn_tmva_net) &&
        !(profile_for(table, Algorithm::mask_rcnn_tmva_net).quality > p.quality))
      throw ContractViolation(
          "profile table: camera+radar fusion must have strictly the highest quality");
  }
}

const AlgorithmProfile& profile_for(const ProfileTable& table, Algorithm algorithm) {
  for (const auto& p : table) {
    if (p.algorithm == algorithm) return p;
  }
  throw ContractViolation("profile table has no entry for " + to_string(algorithm));
}

nlohmann::ordered_json to_json(const ProfileTable& table) {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (const auto& p : table) {
    nlohmann::ordered_json j;
    j["algorithm"] = to_string(p.algorithm);
    j["sensors"] = nlohmann::ordered_json::array();
    for (auto s : p.sensors) j["sensors"].push_back(to_string(s));
    j["quality"] = p.quality;
    j["extraction_time_s"] = p.extraction_time_s;
    j["capabilities"] = {{"speed", p.capabilities[0]},
                         {"size", p.capabilities[1]},
                         {"position", p.capabilities[2]},
                         {"direction", p.capabilities[3]}};
    out.push_back(std::move(j));
  }
  return out;
}

ProfileTable profile_table_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw FormatError("profile table: expected a JSON array");
  ProfileTable table;
  for (const auto& entry : j) {
    if (!entry.is_object()) throw FormatError("profile table: entries must be objects");
    for (const auto& [key, _] : entry.items()) {
      if (key != "algorithm" && key != "sensors" && key != "quality" &&
          key != "extraction_time_s" && key != "capabilities")
        throw FormatError("profile table: unknown field '" + key + "'");
    }
    try {
      AlgorithmProfile p;
      p.algorithm = parse_algorithm(entry.at("algorithm").get<std::string>());
      for (const auto& s : entry.at("sensors"))
        p.sensors.push_back(parse_sensor_kind(s.get<std::string>()));
      p.quality = entry.at("quality").get<double>();
      p.extraction_time_s = entry.at("extraction_time_s").get<double>();
      const auto& caps = entry.at("capabilities");
      for (const auto& [key, _] : caps.items()) {
        if (key != "speed" && key != "size" && key != "position" && key != "direction")
          throw FormatError("profile table: unknown capability '" + key + "'");
      }
      p.capabilities = {caps.at("speed").get<bool>(), caps.at("size").get<bool>(),
                        caps.at("position").get<bool>(), caps.at("direction").get<bool>()};
      table.push_back(std::move(p));
    } catch (const nlohmann::json::exception& e) {
      throw FormatError(std::string("profile table: ") + e.what());
    } catch (const std::invalid_argument& e) {
      throw FormatError(std::string("profile table: ") + e.what());
    }
  }
  check_profile_table(table);
  return table;
}

ProfileTable read_profile_table(const std::filesystem::path& path) {
  return profile_table_from_json(read_json_file(path));
}

GeneratorParams GeneratorParams::wide_demand() {
  GeneratorParams p;
  p.mask_payload_min_kb = 1.0;
  p.mask_payload_max_kb = 60.0;
  return p;
}

MarketConfig default_market_config(std::int32_t num_channels) {
  MarketConfig config;
  config.num_channels = num_channels;
  config.channel_rate_kbps = 10.0;
  config.freshness_threshold_s = 1.0;
  return config;
}

Instance generate_population(std::int32_t n, std::uint64_t seed, const MarketConfig& config,
                             const ProfileTable& profiles, const GeneratorParams& params) {
  if (n < 1) throw ContractViolation("generate_population: n must be at least 1");
  check_profile_table(profiles);
  {
    Instance probe;
    probe.config = config;
    if (auto report = validate_instance(probe); !report.ok())
      throw ContractViolation("generate_population: invalid config: " +
                              report.violations.front());
  }

  Rng rng(seed);
  Instance instance;
  instance.config = config;
  for (std::int32_t i = 0; i < n; ++i) {
    const auto& profile = profiles[rng.below(profiles.size())];

    Device device;
    device.id = i;
    device.algorithm = profile.algorithm;
    for (SensorKind kind : profile.sensors)
      device.readings.push_back({kind, raw_size_for(kind, params),
                                 rng.uniform(params.compute_cost_min, params.compute_cost_max)});
    device.extraction_time_s = profile.extraction_time_s;
    device.per_step_compute_cost = rng.uniform(params.step_cost_min, params.step_cost_max);
    device.per_unit_tx_cost = rng.uniform(params.tx_cost_min, params.tx_cost_max);
    device.scene_id = i;

    SceneSemantics scene;
    scene.id = i;
    scene.object_count = static_cast<std::int32_t>(rng.between(0, params.max_objects));
    for (std::int32_t j = 0; j < scene.object_count; ++j) {
      std::array<bool, 4> flags{};
      for (std::size_t f = 0; f < flags.size(); ++f)
        flags[f] = profile.capabilities[f] && rng.bernoulli(params.flag_probability);
      scene.objects.push_back(make_object(flags, profile.quality));
    }
    scene.weather =
        clamped_weather(rng.uniform(params.weather_min, params.weather_max), config);
    scene.raw_size_kb = device.raw_size_kb();
    const double mask = rng.uniform(params.mask_payload_min_kb, params.mask_payload_max_kb);
    const double metadata = params.metadata_max_kb * (1.0 - rng.uniform01());
    scene.semantic_payload_kb = std::min(mask + metadata, scene.raw_size_kb);

    instance.devices.push_back(std::move(device));
    instance.scenes.push_back(std::move(scene));
  }
  attach_semantic_bids(instance);
  return instance;
}

int table1_group(DeviceId id) { return id < kTable1GroupSize ? 1 : 2; }
int table1_row(DeviceId id) { return static_cast<int>(id % kTable1GroupSize) + 1; }

Instance table1_fixture(std::int32_t objects_group1, std::int32_t objects_group2,
                        const ProfileTable& profiles, const MarketConfig& config) {
  if (objects_group1 < 0 || objects_group2 < 0)
    throw ContractViolation("table1_fixture: object counts must be non-negative");
  constexpr std::array<Algorithm, kTable1GroupSize> kRows{
      Algorithm::mask_rcnn, Algorithm::ramp_cnn_ra, Algorithm::fcn8s_ra, Algorithm::tmva_net,
      Algorithm::mask_rcnn_tmva_net};
  Instance instance;
  instance.config = config;
  for (std::int32_t objects : {objects_group1, objects_group2}) {
    for (Algorithm algorithm : kRows) {
      // Same hardware costs in both groups; payloads of 22-30 kb need
      // three channels at 10 kb per channel.
      add_fixture_device(instance, profiles,
                         {algorithm, 0.0005, 1.0, 0.005, objects, 1.0,
                          22.0 + 2.0 * std::min(objects, 4)});
    }
  }
  attach_semantic_bids(instance);
  return instance;
}

Instance solver_gap_fixture() {
  const auto profiles = default_profile_table();
  Instance instance;
  instance.config = default_market_config(10);
  // Cheap: bid 0.5, one object, 45 kb -> 5 channels, surplus ~0.98.
  for (int i = 0; i < 4; ++i)
    add_fixture_device(instance, profiles,
                       {Algorithm::mask_rcnn, 0.001, 0.0, 0.0, 1, 1.0, 45.0});
  // Pricey: bid 2.0, three objects in poor weather, 38 kb -> 4 channels,
  // surplus ~5.4.
  for (int i = 0; i < 3; ++i)
    add_fixture_device(instance, profiles,
                       {Algorithm::mask_rcnn, 0.004, 0.0, 0.0, 3, 0.6, 38.0});
  attach_semantic_bids(instance);
  return instance;
}

Instance winner_drop_fixture() {
  const auto profiles = default_profile_table();
  Instance instance;
  instance.config = default_market_config(25);
  // Small: bid 0.5, 5 channels, surplus ~2.98.
  for (int i = 0; i < 5; ++i)
    add_fixture_device(instance, profiles,
                       {Algorithm::mask_rcnn, 0.001, 0.0, 0.0, 2, 0.85, 45.0});
  // Big: camera+radar fusion, bid ~2.02, 15 channels, surplus ~7.98.
  add_fixture_device(instance, profiles,
                     {Algorithm::mask_rcnn_tmva_net, 0.002, 0.0, 0.0, 3, 0.96, 145.0});
  attach_semantic_bids(instance);
  return instance;
}

}  // namespace semmarket
