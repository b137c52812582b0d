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

#include "semmarket/model.hpp"

// Device-side service cost: raw collection + semantic extraction +
// transmission over the requested channels.
namespace semmarket {

/// Sum over the device's sensors of raw size times per-kilobit compute cost.
double raw_collection_cost(const Device& device);

/// Extraction time times per-second compute cost.
double semantic_extraction_cost(const Device& device);

/// rate * channels * per-unit transmission cost. Requires channel_demand >= 0.
double communication_cost(const Device& device, std::int32_t channel_demand,
                          const MarketConfig& config);

/// raw_collection_cost + semantic_extraction_cost + communication_cost.
///
/// With Transmission::raw the device skips extraction, so the extraction
/// term is dropped.
double total_service_cost(const Device& device, std::int32_t channel_demand,
                          const MarketConfig& config,
                          Transmission transmission = Transmission::semantic);

}  // namespace semmarket
