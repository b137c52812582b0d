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

#include "semmarket/auction/vcg.hpp"

namespace semmarket {

AuctionOutcome settle(std::span<const SealedBid> bids, const MarketConfig& config,
                      SolverKind solver) {
  const auto book = make_bid_book<double>(bids);
  return to_outcome(settle(book, params_from<double>(config), solver, is_exact(solver)));
}

}  // namespace semmarket
