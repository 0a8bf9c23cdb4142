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

#include "qdom_cli/record.hpp"

#include <fcntl.h>
#include <unistd.h>

#include <cerrno>
#include <cstring>
#include <fstream>
#include <stdexcept>

#include "qdom/bounds.hpp"

#ifndef QDOM_VERSION
#define QDOM_VERSION "0.0.0"
#endif

namespace qdom::cli {

const char* tool_version() { return QDOM_VERSION; }

ResultRecord make_record(const SolveRequest& request, const SolveResult& result) {
  ResultRecord r;
  r.n = request.n;
  r.variant = to_string(request.variant);
  r.k = request.variant == Variant::kcolored ? request.k : 1;
  r.value = result.value;
  r.lb = lower_bound(request.variant, request.n, r.k);
  if (request.variant != Variant::total) r.ub = ub_connected(request.n);
  if (result.witness) {
    for (const Square& q : result.witness->queens()) r.placement.emplace_back(q.x, q.y);
  }
  r.method = to_string(result.method);
  r.nodes = result.nodes_explored;
  r.elapsed_ms = std::chrono::duration<double, std::milli>(result.elapsed).count();
  r.proven_optimal = result.proven_optimal;
  r.tool_version = tool_version();
  return r;
}

bool consistent(const ResultRecord& r) {
  if (!r.proven_optimal || !r.value) return true;
  return r.lb <= *r.value && (!r.ub || *r.value <= *r.ub);
}

nlohmann::json to_json(const ResultRecord& r) {
  nlohmann::json j;
  j["n"] = r.n;
  j["variant"] = r.variant;
  j["k"] = r.k;
  j["value"] = r.value ? nlohmann::json(*r.value) : nlohmann::json(nullptr);
  j["lb"] = r.lb;
  j["ub"] = r.ub ? nlohmann::json(*r.ub) : nlohmann::json(nullptr);
  j["placement"] = nlohmann::json::array();
  for (const auto& [x, y] : r.placement) j["placement"].push_back({x, y});
  j["method"] = r.method;
  j["nodes"] = r.nodes;
  j["elapsed_ms"] = r.elapsed_ms;
  j["proven_optimal"] = r.proven_optimal;
  j["tool_version"] = r.tool_version;
  return j;
}

ResultRecord record_from_json(const nlohmann::json& j) {
  ResultRecord r;
  r.n = j.at("n").get<int>();
  r.variant = j.at("variant").get<std::string>();
  r.k = j.at("k").get<int>();
  if (!j.at("value").is_null()) r.value = j.at("value").get<int>();
  r.lb = j.at("lb").get<int>();
  if (!j.at("ub").is_null()) r.ub = j.at("ub").get<int>();
  for (const auto& sq : j.at("placement")) r.placement.emplace_back(sq.at(0).get<int>(), sq.at(1).get<int>());
  r.method = j.at("method").get<std::string>();
  r.nodes = j.at("nodes").get<std::uint64_t>();
  r.elapsed_ms = j.at("elapsed_ms").get<double>();
  r.proven_optimal = j.at("proven_optimal").get<bool>();
  r.tool_version = j.at("tool_version").get<std::string>();
  return r;
}

void append_record(const std::filesystem::path& ledger, const ResultRecord& record) {
  const std::string line = to_json(record).dump() + "\n";
  const int fd = ::open(ledger.c_str(), O_WRONLY | O_CREAT | O_APPEND, 0644);
  if (fd < 0) throw std::runtime_error("cannot open ledger " + ledger.string() + ": " + std::strerror(errno));
  const ssize_t written = ::write(fd, line.data(), line.size());
  const int saved = errno;
  ::close(fd);
  if (written != static_cast<ssize_t>(line.size())) {
    throw std::runtime_error("short write to ledger " + ledger.string() + ": " + std::strerror(saved));
  }
}

std::vector<ResultRecord> read_ledger(const std::filesystem::path& ledger) {
  std::ifstream in(ledger);
  if (!in) throw std::runtime_error("cannot open ledger " + ledger.string());
  std::vector<ResultRecord> out;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    try {
      out.push_back(record_from_json(nlohmann::json::parse(line)));
    } catch (const nlohmann::json::exception& e) {
      throw std::runtime_error(ledger.string() + ":" + std::to_string(line_no) + ": " + e.what());
    }
  }
  return out;
}

}  // namespace qdom::cli
