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

#include "semmarket/experiments.hpp"

#include <charconv>
#include <sstream>
#include <stdexcept>

#include "semmarket/auction/solvers.hpp"
#include "semmarket/semval.hpp"

namespace semmarket {

namespace {

std::int32_t parse_int(const std::string& text) {
  std::int32_t value = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc{} || ptr != end || text.empty())
    throw std::invalid_argument("not an integer: '" + text + "'");
  return value;
}

std::string join_ids(const std::vector<DeviceId>& ids) {
  std::string out;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i) out += ';';
    out += std::to_string(ids[i]);
  }
  return out;
}

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += ';';
    out += parts[i];
  }
  return out;
}

struct Round {
  Allocation allocation;
  double welfare;
};

Round run(const BidBookd& book, MarketConfig config, std::int32_t budget, SolverKind solver) {
  config.num_channels = budget;
  const auto params = params_from<double>(config);
  Round r{solve(solver, book, params), 0.0};
  r.welfare = social_welfare(r.allocation, book, params);
  return r;
}

}  // namespace

std::vector<std::int32_t> BudgetRange::values() const {
  if (step <= 0) throw std::invalid_argument("budget range step must be positive");
  if (start < 0) throw std::invalid_argument("budget range must start at B >= 0");
  std::vector<std::int32_t> out;
  for (std::int64_t b = start; b <= stop; b += step) out.push_back(static_cast<std::int32_t>(b));
  return out;
}

BudgetRange parse_budget_range(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream in(text);
  for (std::string part; std::getline(in, part, ':');) parts.push_back(part);
  if (parts.size() < 2 || parts.size() > 3)
    throw std::invalid_argument("budget range must look like start:stop[:step], got '" +
                                text + "'");
  BudgetRange range{parse_int(parts[0]), parse_int(parts[1]),
                    parts.size() == 3 ? parse_int(parts[2]) : 1};
  range.values();  // validates
  return range;
}

std::vector<SolverGapRecord> solver_gap_sweep(const Instance& instance,
                                              const BudgetRange& range) {
  const auto bids = bids_of(instance);
  const auto book = make_bid_book<double>(bids);
  std::vector<SolverGapRecord> records;
  for (std::int32_t b : range.values()) {
    const Round exact = run(book, instance.config, b, SolverKind::exact_dp);
    const Round greedy = run(book, instance.config, b, SolverKind::greedy);
    records.push_back({b, exact.welfare, greedy.welfare, exact.welfare - greedy.welfare,
                       winners_of(exact.allocation), winners_of(greedy.allocation)});
  }
  return records;
}

std::vector<TransmissionRecord> transmission_compare(const Instance& instance,
                                                     const BudgetRange& range) {
  const auto semantic_bids = derive_bids(instance, Transmission::semantic);
  const auto raw_bids = derive_bids(instance, Transmission::raw);
  const auto semantic = make_bid_book<double>(semantic_bids);
  const auto raw = make_bid_book<double>(raw_bids);
  std::vector<TransmissionRecord> records;
  for (std::int32_t b : range.values()) {
    const Round s = run(semantic, instance.config, b, SolverKind::exact_dp);
    const Round r = run(raw, instance.config, b, SolverKind::exact_dp);
    TransmissionRecord rec;
    rec.budget = b;
    rec.ids_semantic = winners_of(s.allocation);
    rec.ids_raw = winners_of(r.allocation);
    rec.winners_semantic = rec.ids_semantic.size();
    rec.winners_raw = rec.ids_raw.size();
    rec.welfare_semantic = s.welfare;
    rec.welfare_raw = r.welfare;
    records.push_back(std::move(rec));
  }
  return records;
}

std::string table1_tag(DeviceId id) {
  return "g" + std::to_string(table1_group(id)) + "d" + std::to_string(table1_row(id));
}

std::vector<WinnerListRecord> winner_list_experiment(const BudgetRange& range,
                                                     std::int32_t objects_group1,
                                                     std::int32_t objects_group2,
                                                     const ProfileTable& profiles) {
  const Instance instance = table1_fixture(objects_group1, objects_group2, profiles);
  const auto book = make_bid_book<double>(*instance.bids);
  std::vector<WinnerListRecord> records;
  for (std::int32_t b : range.values()) {
    const Round r = run(book, instance.config, b, SolverKind::exact_dp);
    WinnerListRecord rec;
    rec.budget = b;
    rec.welfare = r.welfare;
    rec.winners = winners_of(r.allocation);
    for (DeviceId id : rec.winners) rec.tags.push_back(table1_tag(id));
    records.push_back(std::move(rec));
  }
  return records;
}

std::string format_double(double x) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  if (ec != std::errc{}) throw std::runtime_error("format_double failed");
  return std::string(buf, ptr);
}

std::string csv_field(const std::string& text) {
  if (text.find_first_of(",\"\r\n") == std::string::npos) return text;
  std::string out = "\"";
  for (char c : text) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string to_csv(const std::vector<SolverGapRecord>& records) {
  std::string out = "B,welfare_exact,welfare_greedy,gap,winners_exact,winners_greedy\n";
  for (const auto& r : records) {
    out += std::to_string(r.budget) + ',' + format_double(r.welfare_exact) + ',' +
           format_double(r.welfare_greedy) + ',' + format_double(r.gap) + ',' +
           csv_field(join_ids(r.winners_exact)) + ',' + csv_field(join_ids(r.winners_greedy)) +
           '\n';
  }
  return out;
}

std::string to_csv(const std::vector<TransmissionRecord>& records) {
  std::string out =
      "B,winners_semantic,winners_raw,welfare_semantic,welfare_raw,ids_semantic,ids_raw\n";
  for (const auto& r : records) {
    out += std::to_string(r.budget) + ',' + std::to_string(r.winners_semantic) + ',' +
           std::to_string(r.winners_raw) + ',' + format_double(r.welfare_semantic) + ',' +
           format_double(r.welfare_raw) + ',' + csv_field(join_ids(r.ids_semantic)) + ',' +
           csv_field(join_ids(r.ids_raw)) + '\n';
  }
  return out;
}

std::string to_csv(const std::vector<WinnerListRecord>& records) {
  std::string out = "B,winner_count,welfare,winner_ids,winner_tags\n";
  for (const auto& r : records) {
    out += std::to_string(r.budget) + ',' + std::to_string(r.winners.size()) + ',' +
           format_double(r.welfare) + ',' + csv_field(join_ids(r.winners)) + ',' +
           csv_field(join(r.tags)) + '\n';
  }
  return out;
}

}  // namespace semmarket
