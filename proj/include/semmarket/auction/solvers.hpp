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

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "semmarket/auction/bid_book.hpp"

// Winner determination: choose the 0/1 allocation with maximal welfare
// subject to sum(demand) <= budget. This is a 0/1 knapsack over the
// bidders' surpluses.
//
// All exact solvers agree on one optimum:
//  * a bidder with surplus <= 0 never wins (it cannot raise welfare);
//  * welfare is scored with allocation_gain's fixed summation order;
//  * co-optimal allocations are resolved by tie_break_prefers.
//
// `excluded` (a device id, or -1) removes one bidder from the round while
// keeping every other id in place, which is what the VCG re-solves need.
namespace semmarket {

inline constexpr Eigen::Index kNoExclusion = -1;
inline constexpr Eigen::Index kBruteForceMaxBidders = 25;

namespace detail {

template <typename Scalar>
std::vector<Eigen::Index> candidates(const BidBook<Scalar>& book,
                                     const VectorX<Scalar>& surplus,
                                     std::int32_t budget, Eigen::Index excluded) {
  std::vector<Eigen::Index> ids;
  for (Eigen::Index i = 0; i < book.size(); ++i) {
    if (i != excluded && surplus(i) > Scalar(0) && book.demand(i) <= budget)
      ids.push_back(i);
  }
  return ids;
}

}  // namespace detail

/// Exact solver: dynamic programme over (bidder, remaining channels).
///
/// table(i, c) is the best gain reachable with bidders i..N-1 and c free
/// channels. Bidders are folded in from the highest id so that the table
/// entries are exactly allocation_gain values; the allocation is then
/// rebuilt from id 0 upwards, taking a bidder whenever an optimal
/// completion contains it.
template <typename Scalar>
Allocation solve_exact_dp(const BidBook<Scalar>& book, const AuctionParams<Scalar>& params,
                          Eigen::Index excluded = kNoExclusion) {
  const Eigen::Index n = book.size();
  Allocation allocation = Allocation::Zero(n);
  if (params.budget <= 0 || n == 0) return allocation;

  const VectorX<Scalar> gain = surplus(book, params.mode);
  const auto ids = detail::candidates(book, gain, params.budget, excluded);
  if (ids.empty()) return allocation;

  std::int64_t total_demand = 0;
  for (auto i : ids) total_demand += book.demand(i);
  const auto capacity =
      static_cast<Eigen::Index>(std::min<std::int64_t>(params.budget, total_demand));
  const auto m = static_cast<Eigen::Index>(ids.size());

  using Table = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  Table table = Table::Zero(m + 1, capacity + 1);
  for (Eigen::Index row = m - 1; row >= 0; --row) {
    const Eigen::Index id = ids[static_cast<std::size_t>(row)];
    const Eigen::Index need = book.demand(id);
    table.row(row) = table.row(row + 1);
    for (Eigen::Index c = need; c <= capacity; ++c) {
      const Scalar take = gain(id) + table(row + 1, c - need);
      if (take > table(row, c)) table(row, c) = take;
    }
  }

  Eigen::Index c = capacity;
  for (Eigen::Index row = 0; row < m; ++row) {
    const Eigen::Index id = ids[static_cast<std::size_t>(row)];
    const Eigen::Index need = book.demand(id);
    if (need <= c && gain(id) + table(row + 1, c - need) == table(row, c)) {
      allocation(id) = 1;
      c -= need;
    }
  }
  return allocation;
}

/// Exact solver: depth-first branch and bound, include-before-exclude in
/// ascending id order, pruned by the fractional-knapsack relaxation. The
/// include-first order visits co-optimal allocations in tie-break order,
/// so the first optimum found is kept.
template <typename Scalar>
Allocation solve_branch_bound(const BidBook<Scalar>& book,
                              const AuctionParams<Scalar>& params,
                              Eigen::Index excluded = kNoExclusion) {
  const Eigen::Index n = book.size();
  Allocation best = Allocation::Zero(n);
  if (params.budget <= 0 || n == 0) return best;

  const VectorX<Scalar> gain = surplus(book, params.mode);
  const auto ids = detail::candidates(book, gain, params.budget, excluded);
  if (ids.empty()) return best;

  // Positions into `ids`, by decreasing surplus per channel.
  std::vector<std::size_t> by_ratio(ids.size());
  std::iota(by_ratio.begin(), by_ratio.end(), std::size_t{0});
  std::stable_sort(by_ratio.begin(), by_ratio.end(), [&](std::size_t a, std::size_t b) {
    return gain(ids[a]) / static_cast<Scalar>(book.demand(ids[a])) >
           gain(ids[b]) / static_cast<Scalar>(book.demand(ids[b]));
  });

  auto relaxation = [&](std::size_t from, std::int64_t room) {
    Scalar bound(0);
    for (std::size_t pos : by_ratio) {
      if (pos < from || room <= 0) continue;
      const Eigen::Index id = ids[pos];
      if (book.demand(id) <= room) {
        bound += gain(id);
        room -= book.demand(id);
      } else {
        bound += gain(id) * static_cast<Scalar>(room) / static_cast<Scalar>(book.demand(id));
        room = 0;
      }
    }
    return bound;
  };

  Allocation current = Allocation::Zero(n);
  Scalar best_gain = -std::numeric_limits<Scalar>::infinity();

  auto search = [&](auto&& self, std::size_t pos, std::int64_t room,
                    Scalar partial) -> void {
    if (pos == ids.size()) {
      const Scalar value = allocation_gain(current, gain);
      if (value > best_gain) {
        best_gain = value;
        best = current;
      }
      return;
    }
    if (best_gain > -std::numeric_limits<Scalar>::infinity()) {
      using std::abs;
      const Scalar bound = partial + relaxation(pos, room);
      const Scalar slack =
          Scalar(1e-9) * (Scalar(1) + std::max(abs(best_gain), abs(bound)));
      if (bound < best_gain - slack) return;
    }
    const Eigen::Index id = ids[pos];
    if (book.demand(id) <= room) {
      current(id) = 1;
      self(self, pos + 1, room - book.demand(id), partial + gain(id));
      current(id) = 0;
    }
    self(self, pos + 1, room, partial);
  };
  search(search, 0, params.budget, Scalar(0));
  return best;
}

/// Baseline heuristic: scan bidders by ascending bid (ties by id), take a
/// bidder if its channels still fit, skip it if they do not, and stop at
/// the first bidder whose addition would not raise welfare.
template <typename Scalar>
Allocation solve_greedy(const BidBook<Scalar>& book, const AuctionParams<Scalar>& params,
                        Eigen::Index excluded = kNoExclusion) {
  const Eigen::Index n = book.size();
  Allocation allocation = Allocation::Zero(n);
  const VectorX<Scalar> gain = surplus(book, params.mode);

  std::vector<Eigen::Index> order;
  for (Eigen::Index i = 0; i < n; ++i) {
    if (i != excluded) order.push_back(i);
  }
  std::stable_sort(order.begin(), order.end(), [&](Eigen::Index a, Eigen::Index b) {
    return book.bid(a) < book.bid(b);
  });

  std::int64_t room = params.budget;
  for (Eigen::Index id : order) {
    if (!(gain(id) > Scalar(0))) break;
    if (book.demand(id) > room) continue;
    allocation(id) = 1;
    room -= book.demand(id);
  }
  return allocation;
}

/// Test oracle: enumerates every subset of the positive-surplus bidders.
/// Refuses rounds with more than kBruteForceMaxBidders bidders.
template <typename Scalar>
Allocation solve_brute_force(const BidBook<Scalar>& book,
                             const AuctionParams<Scalar>& params,
                             Eigen::Index excluded = kNoExclusion) {
  const Eigen::Index n = book.size();
  if (n > kBruteForceMaxBidders)
    throw Refusal("brute force refuses " + std::to_string(n) + " bidders (limit " +
                  std::to_string(kBruteForceMaxBidders) + ")");
  Allocation best = Allocation::Zero(n);
  if (params.budget <= 0 || n == 0) return best;

  const VectorX<Scalar> gain = surplus(book, params.mode);
  const auto ids = detail::candidates(book, gain, params.budget, excluded);
  const std::uint32_t subsets = std::uint32_t{1} << ids.size();

  Scalar best_gain(0);
  Allocation candidate(n);
  for (std::uint32_t mask = 1; mask < subsets; ++mask) {
    std::int64_t used = 0;
    candidate.setZero();
    for (std::size_t j = 0; j < ids.size(); ++j) {
      if (mask & (std::uint32_t{1} << j)) {
        candidate(ids[j]) = 1;
        used += book.demand(ids[j]);
      }
    }
    if (used > params.budget) continue;
    const Scalar value = allocation_gain(candidate, gain);
    if (value > best_gain || (value == best_gain && tie_break_prefers(candidate, best))) {
      best_gain = value;
      best = candidate;
    }
  }
  return best;
}

template <typename Scalar>
Allocation solve(SolverKind kind, const BidBook<Scalar>& book,
                 const AuctionParams<Scalar>& params,
                 Eigen::Index excluded = kNoExclusion) {
  switch (kind) {
    case SolverKind::exact_dp:
      return solve_exact_dp(book, params, excluded);
    case SolverKind::branch_bound:
      return solve_branch_bound(book, params, excluded);
    case SolverKind::greedy:
      return solve_greedy(book, params, excluded);
    case SolverKind::brute_force:
      return solve_brute_force(book, params, excluded);
  }
  throw ContractViolation("unknown solver");
}

inline bool is_exact(SolverKind kind) { return kind != SolverKind::greedy; }

}  // namespace semmarket
