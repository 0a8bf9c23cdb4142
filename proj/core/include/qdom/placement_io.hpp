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

// Placement text format:
//
//   # comment lines start with '#'
//   N=8
//   1,1
//   3,5
//
// The first non-comment line gives the board size, then one queen per line
// as "<x>,<y>". Blank lines are ignored. Duplicate squares are an error.

#include <filesystem>
#include <string>
#include <string_view>

#include "qdom/board.hpp"

namespace qdom {

// Throws ParseError naming the offending line.
Placement parse_placement(std::string_view text);

// Queens are written in board index order, so equal placements produce
// byte-identical text.
std::string format_placement(const Placement& placement);

Placement read_placement_file(const std::filesystem::path& path);
void write_placement_file(const std::filesystem::path& path, const Placement& placement);

}  // namespace qdom
