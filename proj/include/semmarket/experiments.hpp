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
#include <string>
#include <vector>

#include "semmarket/model.hpp"
#include "semmarket/scenario.hpp"

// Channel-budget sweeps. Every B is solved from scratch; records come out
// in ascending B and carry full winner lists.
namespace semmarket {

/// Inclusive range start:stop:step of channel budgets.
struct BudgetRange {
  std::int32_t start = 0;
  std::int32_t stop = 0;
  std::int32_t step = 1;

  std::vector<std::int32_t> values() const;
};

/// Parses "start:stop[:step]"; throws std::invalid_argument.
BudgetRange parse_budget_range(const std::string& text);

struct SolverGapRecord {
  std::int32_t budget = 0;
  double welfare_exact = 0.0;
  double welfare_greedy = 0.0;
  double gap = 0.0;
  std::vector<DeviceId> winners_exact;
  std::vector<DeviceId> winners_greedy;
};

/// Exact vs greedy welfare per budget, on the instance's bids.
std::vector<SolverGapRecord> solver_gap_sweep(const Instance& instance,
                                              const BudgetRange& range);

struct TransmissionRecord {
  std::int32_t budget = 0;
  std::size_t winners_semantic = 0;
  std::size_t winners_raw = 0;
  double welfare_semantic = 0.0;
  double welfare_raw = 0.0;
  std::vector<DeviceId> ids_semantic;
  std::vector<DeviceId> ids_raw;
};

/// Exact auctions on semantic-mode and raw-mode bids derived from the
/// instance's devices and scenes.
std::vector<TransmissionRecord> transmission_compare(const Instance& instance,
                                                     const BudgetRange& range);

struct WinnerListRecord {
  std::int32_t budget = 0;
  double welfare = 0.0;
  std::vector<DeviceId> winners;
  /// Per winner: "g<group>d<row>", e.g. "g2d5".
  std::vector<std::string> tags;
};

std::string table1_tag(DeviceId id);

std::vector<WinnerListRecord> winner_list_experiment(
    const BudgetRange& range, std::int32_t objects_group1 = 3,
    std::int32_t objects_group2 = 1, const ProfileTable& profiles = default_profile_table());

/// CSV renderings (header row, RFC 4180 quoting, '\n' line ends).
std::string to_csv(const std::vector<SolverGapRecord>& records);
std::string to_csv(const std::vector<TransmissionRecord>& records);
std::string to_csv(const std::vector<WinnerListRecord>& records);

/// Shortest decimal text that reads back to the same double.
std::string format_double(double x);
std::string csv_field(const std::string& text);

}  // namespace semmarket
