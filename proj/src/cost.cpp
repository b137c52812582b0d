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

#include "semmarket/cost.hpp"

namespace semmarket {

double raw_collection_cost(const Device& device) {
  double cost = 0.0;
  for (const auto& reading : device.readings)
    cost += reading.raw_size_kb * reading.per_unit_compute_cost;
  return cost;
}

double semantic_extraction_cost(const Device& device) {
  return device.extraction_time_s * device.per_step_compute_cost;
}

double communication_cost(const Device& device, std::int32_t channel_demand,
                          const MarketConfig& config) {
  if (channel_demand < 0) throw DomainError("communication_cost: channel_demand < 0");
  return config.channel_rate_kbps * static_cast<double>(channel_demand) *
         device.per_unit_tx_cost;
}

double total_service_cost(const Device& device, std::int32_t channel_demand,
                          const MarketConfig& config, Transmission transmission) {
  const double extraction =
      transmission == Transmission::semantic ? semantic_extraction_cost(device) : 0.0;
  return raw_collection_cost(device) + extraction +
         communication_cost(device, channel_demand, config);
}

}  // namespace semmarket
