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
#include <span>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "semmarket/model.hpp"

namespace semmarket {

template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

/// 0/1 indicator per bidder, indexed by device id.
using Allocation = Eigen::VectorXi;

/// Column view of a sealed-bid round: one row per bidder, row index ==
/// device id.
template <typename Scalar>
struct BidBook {
  VectorX<Scalar> bid;
  VectorX<Scalar> value;
  Eigen::VectorXi demand;

  Eigen::Index size() const { return bid.size(); }
};

using BidBookd = BidBook<double>;

/// Auction-side parameters of one round.
template <typename Scalar>
struct AuctionParams {
  std::int32_t budget = 0;
  Scalar channel_cost = Scalar(0);
  WelfareMode mode = WelfareMode::value_aware;
};

template <typename Scalar = double>
AuctionParams<Scalar> params_from(const MarketConfig& config) {
  return {config.num_channels, static_cast<Scalar>(config.channel_cost),
          config.welfare_mode};
}

/// Builds a book from sealed bids. Bids must cover device ids 0..N-1
/// exactly once (any order).
template <typename Scalar = double>
BidBook<Scalar> make_bid_book(std::span<const SealedBid> bids) {
  const auto n = static_cast<Eigen::Index>(bids.size());
  BidBook<Scalar> book{VectorX<Scalar>::Zero(n), VectorX<Scalar>::Zero(n),
                       Eigen::VectorXi::Zero(n)};
  std::vector<bool> seen(bids.size(), false);
  for (const auto& b : bids) {
    if (b.device_id < 0 || b.device_id >= n || seen[static_cast<std::size_t>(b.device_id)])
      throw ContractViolation("bid book: device ids must be dense 0..N-1, got " +
                              std::to_string(b.device_id));
    if (b.channel_demand < 1)
      throw ContractViolation("bid book: channel_demand ≥ 1 violated by device " +
                              std::to_string(b.device_id));
    seen[static_cast<std::size_t>(b.device_id)] = true;
    book.bid(b.device_id) = static_cast<Scalar>(b.bid);
    book.value(b.device_id) = static_cast<Scalar>(b.semantic_value);
    book.demand(b.device_id) = b.channel_demand;
  }
  return book;
}

/// Per-bidder welfare contribution under the active mode: -b in literal
/// mode, R - b in value-aware mode.
template <typename Scalar>
VectorX<Scalar> surplus(const BidBook<Scalar>& book, WelfareMode mode) {
  if (mode == WelfareMode::literal) return -book.bid;
  return book.value - book.bid;
}

inline std::int64_t channels_used(const Allocation& allocation,
                                  const Eigen::VectorXi& demand) {
  return allocation.cast<std::int64_t>().dot(demand.cast<std::int64_t>());
}

template <typename Scalar>
bool is_feasible(const Allocation& allocation, const BidBook<Scalar>& book,
                 std::int32_t budget) {
  if (allocation.size() != book.size()) return false;
  for (Eigen::Index i = 0; i < allocation.size(); ++i) {
    if (allocation(i) != 0 && allocation(i) != 1) return false;
  }
  return channels_used(allocation, book.demand) <= budget;
}

/// Sum of the selected surpluses, folded from the highest id down:
/// w[a1] + (w[a2] + (... + w[ak])). Every solver scores allocations with
/// this exact evaluation order so that welfare values compare bit-for-bit.
template <typename Scalar>
Scalar allocation_gain(const Allocation& allocation, const VectorX<Scalar>& surplus) {
  Scalar acc(0);
  for (Eigen::Index i = allocation.size() - 1; i >= 0; --i) {
    if (allocation(i) != 0) acc = surplus(i) + acc;
  }
  return acc;
}

/// Welfare of an allocation under the active mode, channel cost included.
template <typename Scalar>
Scalar social_welfare(const Allocation& allocation, const BidBook<Scalar>& book,
                      const AuctionParams<Scalar>& params) {
  return allocation_gain(allocation, surplus(book, params.mode)) - params.channel_cost;
}

/// Tie-break between two allocations of equal welfare: prefer the one that
/// contains the smallest device id on which they differ. For strictly
/// positive surpluses this is the lexicographically smallest winner-id list.
inline bool tie_break_prefers(const Allocation& a, const Allocation& b) {
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    if (a(i) != b(i)) return a(i) != 0;
  }
  return false;
}

inline std::vector<DeviceId> winners_of(const Allocation& allocation) {
  std::vector<DeviceId> ids;
  for (Eigen::Index i = 0; i < allocation.size(); ++i) {
    if (allocation(i) != 0) ids.push_back(static_cast<DeviceId>(i));
  }
  return ids;
}

}  // namespace semmarket
