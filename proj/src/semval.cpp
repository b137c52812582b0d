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

#include <cmath>
#include <limits>

#include "semmarket/cost.hpp"

namespace semmarket {

double semantic_content(const SceneSemantics& scene) {
  double sum = 0.0;
  for (const auto& object : scene.objects)
    sum += static_cast<double>(object.flag_count()) * object.quality;
  return sum;
}

double semantic_value(const SceneSemantics& scene, double size_kb,
                      const MarketConfig& config) {
  if (!(size_kb > 0.0) || !std::isfinite(size_kb))
    throw DomainError("semantic_value: size_kb must be positive and finite");
  const double w = clamped_weather(scene.weather, config);
  return semantic_content(scene) / w + 1.0 / size_kb;
}

std::int32_t channel_demand(double payload_kb, const MarketConfig& config) {
  if (!(payload_kb > 0.0) || !std::isfinite(payload_kb))
    throw DomainError("channel_demand: payload_kb must be positive and finite");
  const double capacity = config.channel_capacity_kb();
  if (!(capacity > 0.0)) throw DomainError("channel_demand: r * t_max must be positive");
  const double ratio = std::ceil(payload_kb / capacity);
  if (ratio >= static_cast<double>(std::numeric_limits<std::int32_t>::max()))
    throw DomainError("channel_demand: payload needs too many channels");
  auto channels = static_cast<std::int32_t>(ratio);
  // The quotient may round down onto an integer; never undershoot the payload.
  while (static_cast<double>(channels) * capacity < payload_kb) ++channels;
  return channels < 1 ? 1 : channels;
}

double transmitted_payload_kb(const SceneSemantics& scene, Transmission mode) {
  return mode == Transmission::semantic ? scene.semantic_payload_kb : scene.raw_size_kb;
}

SealedBid make_bid(const Device& device, const SceneSemantics& scene,
                   const MarketConfig& config, Transmission mode) {
  const double payload = transmitted_payload_kb(scene, mode);
  SealedBid bid;
  bid.device_id = device.id;
  bid.channel_demand = channel_demand(payload, config);
  bid.bid = total_service_cost(device, bid.channel_demand, config, mode);
  const double size =
      config.value_size_basis == ValueSizeBasis::raw ? scene.raw_size_kb : payload;
  bid.semantic_value = semantic_value(scene, size, config);
  return bid;
}

std::vector<SealedBid> derive_bids(const Instance& instance, Transmission mode) {
  std::vector<SealedBid> bids;
  bids.reserve(instance.devices.size());
  for (const auto& device : instance.devices)
    bids.push_back(make_bid(device, instance.scene_of(device), instance.config, mode));
  return bids;
}

std::vector<SealedBid> bids_of(const Instance& instance) {
  if (instance.bids) return *instance.bids;
  return derive_bids(instance, Transmission::semantic);
}

}  // namespace semmarket
