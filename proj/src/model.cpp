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
#include <array>
#include <cmath>
#include <set>
#include <string_view>
#include <utility>

namespace semmarket {

namespace {

bool finite_nonneg(double x) { return std::isfinite(x) && x >= 0.0; }

template <typename Enum, std::size_t N>
std::string name_of(Enum value,
                    const std::array<std::pair<Enum, std::string_view>, N>& names) {
  for (const auto& [e, name] : names) {
    if (e == value) return std::string(name);
  }
  return "?";
}

template <typename Enum, std::size_t N>
Enum parse_name(const std::string& text,
                const std::array<std::pair<Enum, std::string_view>, N>& names,
                std::string_view what) {
  for (const auto& [e, name] : names) {
    if (name == text) return e;
  }
  throw std::invalid_argument("unknown " + std::string(what) + " '" + text + "'");
}

constexpr std::array<std::pair<SensorKind, std::string_view>, 3> kSensorNames{{
    {SensorKind::camera, "camera"},
    {SensorKind::radar_ra, "radar_RA"},
    {SensorKind::radar_rd, "radar_RD"},
}};

constexpr std::array<std::pair<Algorithm, std::string_view>, 6> kAlgorithmNames{{
    {Algorithm::mask_rcnn, "MaskRCNN"},
    {Algorithm::ramp_cnn_ra, "RAMP_CNN_RA"},
    {Algorithm::fcn8s_ra, "FCN8s_RA"},
    {Algorithm::fcn8s_rd, "FCN8s_RD"},
    {Algorithm::tmva_net, "TMVA_NET"},
    {Algorithm::mask_rcnn_tmva_net, "MaskRCNN+TMVA_NET"},
}};

constexpr std::array<std::pair<WelfareMode, std::string_view>, 2> kModeNames{{
    {WelfareMode::literal, "literal"},
    {WelfareMode::value_aware, "value_aware"},
}};

constexpr std::array<std::pair<ValueSizeBasis, std::string_view>, 2> kBasisNames{{
    {ValueSizeBasis::raw, "raw"},
    {ValueSizeBasis::payload, "payload"},
}};

constexpr std::array<std::pair<Transmission, std::string_view>, 2> kTransmissionNames{{
    {Transmission::semantic, "semantic"},
    {Transmission::raw, "raw"},
}};

constexpr std::array<std::pair<SolverKind, std::string_view>, 4> kSolverNames{{
    {SolverKind::exact_dp, "exact_dp"},
    {SolverKind::branch_bound, "branch_bound"},
    {SolverKind::greedy, "greedy"},
    {SolverKind::brute_force, "brute_force"},
}};

void check_config(const MarketConfig& c, std::vector<std::string>& out) {
  if (c.num_channels < 0) out.emplace_back("config: num_channels ≥ 0");
  if (!(std::isfinite(c.channel_rate_kbps) && c.channel_rate_kbps > 0.0))
    out.emplace_back("config: channel_rate_kbps > 0");
  if (!(std::isfinite(c.freshness_threshold_s) && c.freshness_threshold_s > 0.0))
    out.emplace_back("config: freshness_threshold_s > 0");
  if (!finite_nonneg(c.channel_cost)) out.emplace_back("config: channel_cost ≥ 0");
  if (!(c.w_min > 0.0 && c.w_min <= 1.0)) out.emplace_back("config: w_min in (0, 1]");
}

void check_scene(const SceneSemantics& s, const MarketConfig& c,
                 std::vector<std::string>& out) {
  const std::string where = "scene " + std::to_string(s.id) + ": ";
  if (s.object_count < 0) out.push_back(where + "object_count ≥ 0");
  if (std::cmp_not_equal(s.objects.size(), std::max(s.object_count, 0)))
    out.push_back(where + "len(objects) == object_count");
  for (std::size_t j = 0; j < s.objects.size(); ++j) {
    const double q = s.objects[j].quality;
    if (!(q >= 0.0 && q <= 1.0))
      out.push_back(where + "object " + std::to_string(j) + " quality in [0, 1]");
  }
  if (!(s.weather >= c.w_min)) out.push_back(where + "weather below w_min");
  if (!(s.weather <= 1.0)) out.push_back(where + "weather above 1");
  if (!(std::isfinite(s.raw_size_kb) && s.raw_size_kb > 0.0))
    out.push_back(where + "raw_size_kb > 0");
  if (!(std::isfinite(s.semantic_payload_kb) && s.semantic_payload_kb > 0.0))
    out.push_back(where + "semantic_payload_kb > 0");
  if (s.semantic_payload_kb > s.raw_size_kb)
    out.push_back(where + "semantic_payload_kb ≤ raw_size_kb");
}

void check_device(const Device& d, std::vector<std::string>& out) {
  const std::string where = "device " + std::to_string(d.id) + ": ";
  if (d.readings.empty()) out.push_back(where + "at least one sensor reading");
  for (std::size_t k = 0; k < d.readings.size(); ++k) {
    const auto& r = d.readings[k];
    if (!finite_nonneg(r.raw_size_kb))
      out.push_back(where + "reading " + std::to_string(k) + " raw_size_kb ≥ 0");
    if (!finite_nonneg(r.per_unit_compute_cost))
      out.push_back(where + "reading " + std::to_string(k) +
                    " per_unit_compute_cost ≥ 0");
  }
  if (!finite_nonneg(d.extraction_time_s)) out.push_back(where + "extraction_time_s ≥ 0");
  if (!finite_nonneg(d.per_step_compute_cost))
    out.push_back(where + "per_step_compute_cost ≥ 0");
  if (!finite_nonneg(d.per_unit_tx_cost)) out.push_back(where + "per_unit_tx_cost ≥ 0");
}

void check_bid(const SealedBid& b, std::vector<std::string>& out) {
  const std::string where = "bid of device " + std::to_string(b.device_id) + ": ";
  if (b.channel_demand < 1) out.push_back(where + "channel_demand ≥ 1");
  if (!std::isfinite(b.bid)) out.push_back(where + "bid finite");
  else if (!(b.bid > 0.0)) out.push_back(where + "bid > 0");
  if (!finite_nonneg(b.semantic_value)) out.push_back(where + "semantic_value ≥ 0");
}

}  // namespace

const SceneSemantics& Instance::scene_of(const Device& device) const {
  for (const auto& s : scenes) {
    if (s.id == device.scene_id) return s;
  }
  throw ContractViolation("device " + std::to_string(device.id) +
                          " references unknown scene " +
                          std::to_string(device.scene_id));
}

double clamped_weather(double weather, const MarketConfig& config) {
  return std::clamp(weather, config.w_min, 1.0);
}

ValidationReport validate_instance(const std::vector<Device>& devices,
                                   const std::vector<SceneSemantics>& scenes,
                                   const std::vector<SealedBid>& bids,
                                   const MarketConfig& config) {
  ValidationReport report;
  auto& out = report.violations;
  check_config(config, out);

  std::set<SceneId> scene_ids;
  for (const auto& s : scenes) {
    if (!scene_ids.insert(s.id).second)
      out.push_back("scene " + std::to_string(s.id) + ": id unique");
    check_scene(s, config, out);
  }

  std::set<DeviceId> device_ids;
  for (std::size_t i = 0; i < devices.size(); ++i) {
    const auto& d = devices[i];
    if (!device_ids.insert(d.id).second)
      out.push_back("device " + std::to_string(d.id) + ": id unique");
    if (std::cmp_not_equal(d.id, i))
      out.push_back("device " + std::to_string(d.id) + ": ids dense 0..N-1 in order");
    check_device(d, out);
    const auto scene = std::find_if(scenes.begin(), scenes.end(),
                                    [&](const auto& s) { return s.id == d.scene_id; });
    if (scene == scenes.end()) {
      out.push_back("device " + std::to_string(d.id) + ": scene_id refers to a scene");
    } else {
      const double total = d.raw_size_kb();
      if (std::abs(total - scene->raw_size_kb) > 1e-9 * std::max(1.0, total))
        out.push_back("device " + std::to_string(d.id) +
                      ": scene raw_size_kb equals sum of reading sizes");
    }
  }

  std::set<DeviceId> bid_ids;
  for (const auto& b : bids) {
    if (!bid_ids.insert(b.device_id).second)
      out.push_back("bid of device " + std::to_string(b.device_id) + ": one bid per device");
    if (!devices.empty() && !device_ids.contains(b.device_id))
      out.push_back("bid of device " + std::to_string(b.device_id) +
                    ": device_id refers to a device");
    check_bid(b, out);
  }
  return report;
}

ValidationReport validate_instance(const Instance& instance) {
  static const std::vector<SealedBid> kNoBids;
  auto report = validate_instance(instance.devices, instance.scenes,
                                  instance.bids ? *instance.bids : kNoBids,
                                  instance.config);
  if (instance.bids && instance.bids->size() != instance.devices.size())
    report.violations.emplace_back("bids: one bid per device");
  return report;
}

std::string to_string(SensorKind kind) { return name_of(kind, kSensorNames); }
std::string to_string(Algorithm algorithm) { return name_of(algorithm, kAlgorithmNames); }
std::string to_string(WelfareMode mode) { return name_of(mode, kModeNames); }
std::string to_string(ValueSizeBasis basis) { return name_of(basis, kBasisNames); }
std::string to_string(Transmission t) { return name_of(t, kTransmissionNames); }
std::string to_string(SolverKind solver) { return name_of(solver, kSolverNames); }

SensorKind parse_sensor_kind(const std::string& name) {
  return parse_name(name, kSensorNames, "sensor kind");
}
Algorithm parse_algorithm(const std::string& name) {
  return parse_name(name, kAlgorithmNames, "algorithm");
}
WelfareMode parse_welfare_mode(const std::string& name) {
  return parse_name(name, kModeNames, "welfare mode");
}
ValueSizeBasis parse_value_size_basis(const std::string& name) {
  return parse_name(name, kBasisNames, "value size basis");
}
Transmission parse_transmission(const std::string& name) {
  return parse_name(name, kTransmissionNames, "transmission");
}
SolverKind parse_solver_kind(const std::string& name) {
  return parse_name(name, kSolverNames, "solver");
}

}  // namespace semmarket
