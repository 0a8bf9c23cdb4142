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

#include <stdexcept>
#include <string>

namespace qdom {

// Argument outside an operation's domain (off-board square, bad line index,
// k < 1, empty graph where a vertex is required).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// The sentinel/annulus decomposition is undefined for this placement.
class DegeneratePlacementError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed placement text. line() is 1-based; 0 when not tied to a line.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}

  int line() const noexcept { return line_; }

 private:
  int line_;
};

}  // namespace qdom
