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

#include "semmarket/instance_io.hpp"

#include <array>
#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string_view>

namespace semmarket {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

void require_object(const json& j, std::string_view what) {
  if (!j.is_object()) throw FormatError(std::string(what) + ": expected a JSON object");
}

template <typename Keys>
void reject_unknown(const json& j, const Keys& known, std::string_view what) {
  for (const auto& [key, _] : j.items()) {
    bool ok = false;
    for (auto k : known) ok = ok || key == k;
    if (!ok) throw FormatError(std::string(what) + ": unknown field '" + key + "'");
  }
}

void reject_unknown(const json& j, std::initializer_list<std::string_view> known,
                    std::string_view what) {
  reject_unknown<std::initializer_list<std::string_view>>(j, known, what);
}

const json& field(const json& j, const char* key, std::string_view what) {
  const auto it = j.find(key);
  if (it == j.end())
    throw FormatError(std::string(what) + ": missing field '" + key + "'");
  return *it;
}

template <typename T>
T get(const json& j, const char* key, std::string_view what) {
  const json& v = field(j, key, what);
  try {
    if constexpr (std::is_same_v<T, double>) {
      if (!v.is_number()) throw FormatError("");
    } else if constexpr (std::is_integral_v<T> && !std::is_same_v<T, bool>) {
      if (!v.is_number_integer()) throw FormatError("");
    } else if constexpr (std::is_same_v<T, bool>) {
      if (!v.is_boolean()) throw FormatError("");
    } else {
      if (!v.is_string()) throw FormatError("");
    }
    return v.get<T>();
  } catch (const std::exception&) {
    throw FormatError(std::string(what) + ": field '" + key + "' has the wrong type");
  }
}

template <typename Parse>
auto get_enum(const json& j, const char* key, std::string_view what, Parse parse) {
  const auto text = get<std::string>(j, key, what);
  try {
    return parse(text);
  } catch (const std::invalid_argument& e) {
    throw FormatError(std::string(what) + ": " + e.what());
  }
}

ordered_json reading_to_json(const SensorReading& r) {
  ordered_json j;
  j["sensor_kind"] = to_string(r.sensor_kind);
  j["raw_size_kb"] = r.raw_size_kb;
  j["per_unit_compute_cost"] = r.per_unit_compute_cost;
  return j;
}

SensorReading reading_from_json(const json& j) {
  constexpr std::string_view what = "sensor reading";
  require_object(j, what);
  reject_unknown(j, {"sensor_kind", "raw_size_kb", "per_unit_compute_cost"}, what);
  SensorReading r;
  r.sensor_kind = get_enum(j, "sensor_kind", what, parse_sensor_kind);
  r.raw_size_kb = get<double>(j, "raw_size_kb", what);
  r.per_unit_compute_cost = get<double>(j, "per_unit_compute_cost", what);
  return r;
}

ordered_json device_to_json(const Device& d) {
  ordered_json j;
  j["id"] = d.id;
  j["readings"] = ordered_json::array();
  for (const auto& r : d.readings) j["readings"].push_back(reading_to_json(r));
  j["algorithm"] = to_string(d.algorithm);
  j["extraction_time_s"] = d.extraction_time_s;
  j["per_step_compute_cost"] = d.per_step_compute_cost;
  j["per_unit_tx_cost"] = d.per_unit_tx_cost;
  j["scene_id"] = d.scene_id;
  return j;
}

Device device_from_json(const json& j) {
  constexpr std::string_view what = "device";
  require_object(j, what);
  reject_unknown(j,
                 {"id", "readings", "algorithm", "extraction_time_s",
                  "per_step_compute_cost", "per_unit_tx_cost", "scene_id"},
                 what);
  Device d;
  d.id = get<DeviceId>(j, "id", what);
  const json& readings = field(j, "readings", what);
  if (!readings.is_array()) throw FormatError("device: 'readings' must be an array");
  for (const auto& r : readings) d.readings.push_back(reading_from_json(r));
  d.algorithm = get_enum(j, "algorithm", what, parse_algorithm);
  d.extraction_time_s = get<double>(j, "extraction_time_s", what);
  d.per_step_compute_cost = get<double>(j, "per_step_compute_cost", what);
  d.per_unit_tx_cost = get<double>(j, "per_unit_tx_cost", what);
  d.scene_id = get<SceneId>(j, "scene_id", what);
  return d;
}

ordered_json object_to_json(const ObjectSemantics& o) {
  ordered_json j;
  j["has_speed"] = o.has_speed;
  j["has_size"] = o.has_size;
  j["has_position"] = o.has_position;
  j["has_direction"] = o.has_direction;
  j["quality"] = o.quality;
  return j;
}

ObjectSemantics object_from_json(const json& j) {
  constexpr std::string_view what = "object";
  require_object(j, what);
  reject_unknown(j, {"has_speed", "has_size", "has_position", "has_direction", "quality"},
                 what);
  ObjectSemantics o;
  o.has_speed = get<bool>(j, "has_speed", what);
  o.has_size = get<bool>(j, "has_size", what);
  o.has_position = get<bool>(j, "has_position", what);
  o.has_direction = get<bool>(j, "has_direction", what);
  o.quality = get<double>(j, "quality", what);
  return o;
}

ordered_json scene_to_json(const SceneSemantics& s) {
  ordered_json j;
  j["id"] = s.id;
  j["object_count"] = s.object_count;
  j["objects"] = ordered_json::array();
  for (const auto& o : s.objects) j["objects"].push_back(object_to_json(o));
  j["weather"] = s.weather;
  j["raw_size_kb"] = s.raw_size_kb;
  j["semantic_payload_kb"] = s.semantic_payload_kb;
  return j;
}

SceneSemantics scene_from_json(const json& j) {
  constexpr std::string_view what = "scene";
  require_object(j, what);
  reject_unknown(j,
                 {"id", "object_count", "objects", "weather", "raw_size_kb",
                  "semantic_payload_kb"},
                 what);
  SceneSemantics s;
  s.id = get<SceneId>(j, "id", what);
  s.object_count = get<std::int32_t>(j, "object_count", what);
  const json& objects = field(j, "objects", what);
  if (!objects.is_array()) throw FormatError("scene: 'objects' must be an array");
  for (const auto& o : objects) s.objects.push_back(object_from_json(o));
  s.weather = get<double>(j, "weather", what);
  s.raw_size_kb = get<double>(j, "raw_size_kb", what);
  s.semantic_payload_kb = get<double>(j, "semantic_payload_kb", what);
  return s;
}

ordered_json bid_to_json(const SealedBid& b) {
  ordered_json j;
  j["device_id"] = b.device_id;
  j["bid"] = b.bid;
  j["semantic_value"] = b.semantic_value;
  j["channel_demand"] = b.channel_demand;
  return j;
}

SealedBid bid_from_json(const json& j) {
  constexpr std::string_view what = "bid";
  require_object(j, what);
  reject_unknown(j, {"device_id", "bid", "semantic_value", "channel_demand"}, what);
  SealedBid b;
  b.device_id = get<DeviceId>(j, "device_id", what);
  b.bid = get<double>(j, "bid", what);
  b.semantic_value = get<double>(j, "semantic_value", what);
  b.channel_demand = get<std::int32_t>(j, "channel_demand", what);
  return b;
}

constexpr std::array<std::string_view, 8> kConfigKeys{
    "num_channels", "channel_rate_kbps", "freshness_threshold_s", "channel_cost",
    "welfare_mode", "w_min",             "value_size_basis",      "tie_break"};

void check_tie_break(const json& j) {
  if (j.contains("tie_break") && j["tie_break"] != "ascending_id")
    throw FormatError("config: tie_break must be \"ascending_id\"");
}

}  // namespace

ordered_json to_json(const MarketConfig& c) {
  ordered_json j;
  j["num_channels"] = c.num_channels;
  j["channel_rate_kbps"] = c.channel_rate_kbps;
  j["freshness_threshold_s"] = c.freshness_threshold_s;
  j["channel_cost"] = c.channel_cost;
  j["welfare_mode"] = to_string(c.welfare_mode);
  j["w_min"] = c.w_min;
  j["value_size_basis"] = to_string(c.value_size_basis);
  j["tie_break"] = "ascending_id";
  return j;
}

MarketConfig config_from_json(const json& j) {
  constexpr std::string_view what = "config";
  require_object(j, what);
  reject_unknown(j, kConfigKeys, what);
  check_tie_break(j);
  MarketConfig c;
  c.num_channels = get<std::int32_t>(j, "num_channels", what);
  c.channel_rate_kbps = get<double>(j, "channel_rate_kbps", what);
  c.freshness_threshold_s = get<double>(j, "freshness_threshold_s", what);
  c.channel_cost = get<double>(j, "channel_cost", what);
  c.welfare_mode = get_enum(j, "welfare_mode", what, parse_welfare_mode);
  c.w_min = get<double>(j, "w_min", what);
  c.value_size_basis = get_enum(j, "value_size_basis", what, parse_value_size_basis);
  return c;
}

MarketConfig merge_config(MarketConfig c, const json& j) {
  constexpr std::string_view what = "config";
  require_object(j, what);
  reject_unknown(j, kConfigKeys, what);
  check_tie_break(j);
  if (j.contains("num_channels")) c.num_channels = get<std::int32_t>(j, "num_channels", what);
  if (j.contains("channel_rate_kbps"))
    c.channel_rate_kbps = get<double>(j, "channel_rate_kbps", what);
  if (j.contains("freshness_threshold_s"))
    c.freshness_threshold_s = get<double>(j, "freshness_threshold_s", what);
  if (j.contains("channel_cost")) c.channel_cost = get<double>(j, "channel_cost", what);
  if (j.contains("welfare_mode"))
    c.welfare_mode = get_enum(j, "welfare_mode", what, parse_welfare_mode);
  if (j.contains("w_min")) c.w_min = get<double>(j, "w_min", what);
  if (j.contains("value_size_basis"))
    c.value_size_basis = get_enum(j, "value_size_basis", what, parse_value_size_basis);
  return c;
}

ordered_json to_json(const Instance& instance) {
  ordered_json j;
  j["config"] = to_json(instance.config);
  j["devices"] = ordered_json::array();
  for (const auto& d : instance.devices) j["devices"].push_back(device_to_json(d));
  j["scenes"] = ordered_json::array();
  for (const auto& s : instance.scenes) j["scenes"].push_back(scene_to_json(s));
  if (instance.bids) {
    j["bids"] = ordered_json::array();
    for (const auto& b : *instance.bids) j["bids"].push_back(bid_to_json(b));
  }
  return j;
}

Instance instance_from_json(const json& j) {
  constexpr std::string_view what = "instance";
  require_object(j, what);
  reject_unknown(j, {"config", "devices", "scenes", "bids"}, what);
  Instance instance;
  instance.config = config_from_json(field(j, "config", what));
  const json& devices = field(j, "devices", what);
  const json& scenes = field(j, "scenes", what);
  if (!devices.is_array() || !scenes.is_array())
    throw FormatError("instance: 'devices' and 'scenes' must be arrays");
  for (const auto& d : devices) instance.devices.push_back(device_from_json(d));
  for (const auto& s : scenes) instance.scenes.push_back(scene_from_json(s));
  if (j.contains("bids")) {
    const json& bids = j["bids"];
    if (!bids.is_array()) throw FormatError("instance: 'bids' must be an array");
    std::vector<SealedBid> out;
    for (const auto& b : bids) out.push_back(bid_from_json(b));
    instance.bids = std::move(out);
  }
  return instance;
}

ordered_json to_json(const AuctionOutcome& o) {
  ordered_json j;
  j["solver"] = to_string(o.solver);
  j["winners"] = o.winners;
  j["allocation"] = o.allocation;
  if (o.has_payments()) {
    j["payments"] = o.payments;
    j["device_utilities"] = o.device_utilities;
    j["vsp_utility"] = o.vsp_utility;
  }
  j["social_welfare"] = o.social_welfare;
  return j;
}

std::string dump_instance(const Instance& instance) {
  return to_json(instance).dump(2) + "\n";
}

Instance parse_instance(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw FormatError(std::string("instance: invalid JSON: ") + e.what());
  }
  return instance_from_json(j);
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
  out << text;
  if (!out) throw std::runtime_error("failed writing '" + path.string() + "'");
}

nlohmann::json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return json::parse(buffer.str());
  } catch (const json::parse_error& e) {
    throw FormatError(path.string() + ": invalid JSON: " + e.what());
  }
}

void write_instance(const Instance& instance, const std::filesystem::path& path) {
  write_text_file(path, dump_instance(instance));
}

Instance read_instance(const std::filesystem::path& path) {
  return instance_from_json(read_json_file(path));
}

}  // namespace semmarket
