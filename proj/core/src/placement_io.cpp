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

#include "qdom/placement_io.hpp"

#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>

#include "qdom/errors.hpp"

namespace qdom {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::optional<int> parse_int(std::string_view s) {
  s = trim(s);
  if (s.empty()) return std::nullopt;
  int value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return value;
}

}  // namespace

Placement parse_placement(std::string_view text) {
  std::optional<Placement> placement;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto end = text.find('\n', pos);
    const std::string_view raw =
        text.substr(pos, end == std::string_view::npos ? std::string_view::npos : end - pos);
    pos = end == std::string_view::npos ? text.size() + 1 : end + 1;
    ++line_no;

    const std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;

    if (!placement) {
      if (line.size() < 2 || line.substr(0, 2) != "N=") {
        throw ParseError(line_no, "expected \"N=<n>\" header, got \"" + std::string(line) + "\"");
      }
      const auto n = parse_int(line.substr(2));
      if (!n || *n < 1) throw ParseError(line_no, "board size must be a positive integer");
      placement.emplace(BoardGeometry(*n));
      continue;
    }

    const auto comma = line.find(',');
    if (comma == std::string_view::npos) {
      throw ParseError(line_no, "expected \"<x>,<y>\", got \"" + std::string(line) + "\"");
    }
    const auto x = parse_int(line.substr(0, comma));
    const auto y = parse_int(line.substr(comma + 1));
    if (!x || !y) {
      throw ParseError(line_no, "expected \"<x>,<y>\", got \"" + std::string(line) + "\"");
    }
    const Square sq{*x, *y};
    if (!placement->geometry().contains(sq)) {
      throw ParseError(line_no, "square (" + to_string(sq) + ") is off the board");
    }
    if (!placement->add(sq)) {
      throw ParseError(line_no, "duplicate queen at (" + to_string(sq) + ")");
    }
  }
  if (!placement) throw ParseError(0, "missing \"N=<n>\" header");
  return *std::move(placement);
}

std::string format_placement(const Placement& placement) {
  std::ostringstream out;
  out << "N=" << placement.n() << '\n';
  for (const Square& q : placement.queens()) out << q.x << ',' << q.y << '\n';
  return out.str();
}

Placement read_placement_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(0, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_placement(buf.str());
}

void write_placement_file(const std::filesystem::path& path, const Placement& placement) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << format_placement(placement);
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

}  // namespace qdom
