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
#include <vector>

#include "semmarket/model.hpp"

namespace semmarket {

/// Quality-weighted count of the semantic flags over all detected objects,
/// before the weather scaling.
double semantic_content(const SceneSemantics& scene);

/// Semantic value of a scene:
///
///   (sum_j flags(j) * q(j)) / w + 1 / size_kb
///
/// with w clamped into [config.w_min, 1]. Throws DomainError if
/// size_kb <= 0.
double semantic_value(const SceneSemantics& scene, double size_kb,
                      const MarketConfig& config = {});

/// Number of channels needed to push `payload_kb` within the freshness
/// threshold: the smallest C >= 1 with C * r * t_max >= payload_kb.
std::int32_t channel_demand(double payload_kb, const MarketConfig& config);

/// Kilobits a device uploads when it wins.
double transmitted_payload_kb(const SceneSemantics& scene, Transmission mode);

/// Truthful bid: the bid equals the device's total service cost at the
/// channel demand implied by its payload. The size in the value's
/// reciprocal term follows config.value_size_basis (raw scene size, or the
/// payload actually transmitted in `mode`).
SealedBid make_bid(const Device& device, const SceneSemantics& scene,
                   const MarketConfig& config, Transmission mode);

/// make_bid for every device of the instance, in device order.
std::vector<SealedBid> derive_bids(const Instance& instance, Transmission mode);

/// The instance's stored bids if present, otherwise derive_bids(semantic).
std::vector<SealedBid> bids_of(const Instance& instance);

}  // namespace semmarket
