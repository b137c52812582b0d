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

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

/// Domain types of the semantic-information market.
///
/// Units used throughout: data sizes in kilobits, rates in kbps, times in
/// seconds, and every price or cost in abstract cost-units (64-bit reals).
namespace semmarket {

using DeviceId = std::int32_t;
using SceneId = std::int32_t;

/// Thrown when an argument lies outside a function's mathematical domain.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Thrown when a caller breaks a documented precondition of an operation.
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Thrown when an operation declines a request it could only serve at
/// unreasonable cost (e.g. exhaustive enumeration over too many bidders).
class Refusal : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class SensorKind { camera, radar_ra, radar_rd };

enum class Algorithm {
  mask_rcnn,
  ramp_cnn_ra,
  fcn8s_ra,
  fcn8s_rd,
  tmva_net,
  mask_rcnn_tmva_net,
};

enum class WelfareMode { literal, value_aware };

/// Which size enters the reciprocal term of the semantic value.
enum class ValueSizeBasis { raw, payload };

/// What a device transmits when it wins.
enum class Transmission { semantic, raw };

enum class SolverKind { exact_dp, branch_bound, greedy, brute_force };

struct SensorReading {
  SensorKind sensor_kind = SensorKind::camera;
  double raw_size_kb = 0.0;
  double per_unit_compute_cost = 0.0;

  bool operator==(const SensorReading&) const = default;
};

struct ObjectSemantics {
  bool has_speed = false;
  bool has_size = false;
  bool has_position = false;
  bool has_direction = false;
  double quality = 0.0;

  int flag_count() const {
    return int{has_speed} + int{has_size} + int{has_position} +
           int{has_direction};
  }

  bool operator==(const ObjectSemantics&) const = default;
};

struct SceneSemantics {
  SceneId id = 0;
  std::int32_t object_count = 0;
  std::vector<ObjectSemantics> objects;
  double weather = 1.0;
  double raw_size_kb = 0.0;
  double semantic_payload_kb = 0.0;

  bool operator==(const SceneSemantics&) const = default;
};

struct Device {
  DeviceId id = 0;
  std::vector<SensorReading> readings;
  Algorithm algorithm = Algorithm::mask_rcnn;
  double extraction_time_s = 0.0;
  double per_step_compute_cost = 0.0;
  double per_unit_tx_cost = 0.0;
  SceneId scene_id = 0;

  double raw_size_kb() const {
    double total = 0.0;
    for (const auto& r : readings) total += r.raw_size_kb;
    return total;
  }

  bool operator==(const Device&) const = default;
};

struct SealedBid {
  DeviceId device_id = 0;
  double bid = 0.0;
  double semantic_value = 0.0;
  std::int32_t channel_demand = 1;

  bool operator==(const SealedBid&) const = default;
};

struct MarketConfig {
  std::int32_t num_channels = 0;
  double channel_rate_kbps = 10.0;
  double freshness_threshold_s = 1.0;
  double channel_cost = 0.0;
  WelfareMode welfare_mode = WelfareMode::value_aware;
  double w_min = 0.05;
  ValueSizeBasis value_size_basis = ValueSizeBasis::raw;

  /// Kilobits one channel carries within the freshness threshold.
  double channel_capacity_kb() const {
    return channel_rate_kbps * freshness_threshold_s;
  }

  bool operator==(const MarketConfig&) const = default;
};

struct Instance {
  MarketConfig config;
  std::vector<Device> devices;
  std::vector<SceneSemantics> scenes;
  std::optional<std::vector<SealedBid>> bids;

  const SceneSemantics& scene_of(const Device& device) const;

  bool operator==(const Instance&) const = default;
};

struct AuctionOutcome {
  std::vector<std::uint8_t> allocation;
  /// Empty when the outcome was produced without payments (greedy).
  std::vector<double> payments;
  std::vector<double> device_utilities;
  double vsp_utility = 0.0;
  double social_welfare = 0.0;
  SolverKind solver = SolverKind::exact_dp;
  std::vector<DeviceId> winners;

  bool has_payments() const { return !payments.empty(); }
};

struct ValidationReport {
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
};

/// Lists every violated invariant of an instance, or of a bare bid list
/// against a config. Never throws and never mutates its inputs.
ValidationReport validate_instance(const Instance& instance);
ValidationReport validate_instance(const std::vector<Device>& devices,
                                   const std::vector<SceneSemantics>& scenes,
                                   const std::vector<SealedBid>& bids,
                                   const MarketConfig& config);

/// Weather clamped into [w_min, 1].
double clamped_weather(double weather, const MarketConfig& config);

std::string to_string(SensorKind kind);
std::string to_string(Algorithm algorithm);
std::string to_string(WelfareMode mode);
std::string to_string(ValueSizeBasis basis);
std::string to_string(Transmission transmission);
std::string to_string(SolverKind solver);

/// Inverse of to_string; throw std::invalid_argument on unknown names.
SensorKind parse_sensor_kind(const std::string& name);
Algorithm parse_algorithm(const std::string& name);
WelfareMode parse_welfare_mode(const std::string& name);
ValueSizeBasis parse_value_size_basis(const std::string& name);
Transmission parse_transmission(const std::string& name);
SolverKind parse_solver_kind(const std::string& name);

}  // namespace semmarket
