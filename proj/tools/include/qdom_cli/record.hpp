// Copyright 2026 The qdom Authors
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

// Line-delimited JSON results ledger. One record per line, appended with a
// single write so a crash never leaves a partial line behind.

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "qdom/solver.hpp"

namespace qdom::cli {

struct ResultRecord {
  int n = 0;
  std::string variant;
  int k = 1;
  std::optional<int> value;
  int lb = 0;
  std::optional<int> ub;
  std::vector<std::pair<int, int>> placement;
  std::string method;
  std::uint64_t nodes = 0;
  double elapsed_ms = 0.0;
  bool proven_optimal = false;
  std::string tool_version;
};

// Record for a finished solve, with lb/ub from the closed-form bounds.
ResultRecord make_record(const SolveRequest& request, const SolveResult& result);

// lb <= value <= ub when the value is proven and ub is present.
bool consistent(const ResultRecord& record);

nlohmann::json to_json(const ResultRecord& record);
ResultRecord record_from_json(const nlohmann::json& j);

void append_record(const std::filesystem::path& ledger, const ResultRecord& record);
// Throws on a malformed line.
std::vector<ResultRecord> read_ledger(const std::filesystem::path& ledger);

const char* tool_version();

}  // namespace qdom::cli
