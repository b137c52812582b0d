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

#include <filesystem>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "semmarket/model.hpp"

// JSON instance format. See docs/formats.md for the schema. Readers reject
// unknown keys and missing required keys with FormatError.
namespace semmarket {

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

nlohmann::ordered_json to_json(const MarketConfig& config);
nlohmann::ordered_json to_json(const Instance& instance);
nlohmann::ordered_json to_json(const AuctionOutcome& outcome);

/// Reads a complete config object (every key required).
MarketConfig config_from_json(const nlohmann::json& j);

/// Overlays the keys present in `j` onto `base`; used for config files.
MarketConfig merge_config(MarketConfig base, const nlohmann::json& j);

Instance instance_from_json(const nlohmann::json& j);

std::string dump_instance(const Instance& instance);
Instance parse_instance(const std::string& text);

void write_instance(const Instance& instance, const std::filesystem::path& path);
Instance read_instance(const std::filesystem::path& path);

nlohmann::json read_json_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

}  // namespace semmarket
