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

// Board geometry, line indexing, coverage and the domination predicate.
//
// Coordinates are 1-based from the bottom-left corner: square (x, y) is in
// column x and row y. Every square lies on exactly four lines:
//   row           index y        in 1..n
//   column        index x        in 1..n
//   diagonal      index x - y    in -(n-1)..n-1   (bottom-left to top-right)
//   anti-diagonal index x + y    in 2..2n         (top-left to bottom-right)

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace qdom {

struct Square {
  int x = 1;
  int y = 1;

  friend constexpr auto operator<=>(const Square&, const Square&) = default;
};

std::string to_string(const Square& sq);

enum class LineKind : std::uint8_t { row, column, diagonal, anti_diagonal };

inline constexpr std::array<LineKind, 4> kAllLineKinds = {
    LineKind::row, LineKind::column, LineKind::diagonal, LineKind::anti_diagonal};

const char* to_string(LineKind kind);

struct LineId {
  LineKind kind = LineKind::row;
  int index = 1;

  friend constexpr auto operator<=>(const LineId&, const LineId&) = default;
};

std::string to_string(const LineId& line);

class BoardGeometry {
 public:
  // Throws DomainError for n < 1.
  explicit BoardGeometry(int n);

  int n() const noexcept { return n_; }
  int square_count() const noexcept { return n_ * n_; }

  bool contains(const Square& sq) const noexcept {
    return sq.x >= 1 && sq.x <= n_ && sq.y >= 1 && sq.y <= n_;
  }
  bool contains(const LineId& line) const noexcept;

  // Row-major from the bottom row: (1,1) -> 0, (2,1) -> 1, ..., (n,n) -> n*n-1.
  int index_of(const Square& sq) const noexcept { return (sq.y - 1) * n_ + (sq.x - 1); }
  Square square_at(int index) const noexcept { return {index % n_ + 1, index / n_ + 1}; }

  int line_count(LineKind kind) const noexcept;
  int min_line_index(LineKind kind) const noexcept;
  int max_line_index(LineKind kind) const noexcept;

  // Throws DomainError for squares off the board.
  void require(const Square& sq) const;

  friend bool operator==(const BoardGeometry&, const BoardGeometry&) = default;

 private:
  int n_;
};

// One line of each kind through the square, in kAllLineKinds order.
std::array<LineId, 4> lines_through(const Square& sq, const BoardGeometry& geometry);

// Squares of the line in increasing x (increasing y for columns).
std::vector<Square> line_squares(const LineId& line, const BoardGeometry& geometry);

// True iff the two squares share a row, column or diagonal (a square shares
// all four lines with itself).
bool share_line(const Square& a, const Square& b) noexcept;

// A set of occupied squares on a board. Queens may attack each other.
class Placement {
 public:
  explicit Placement(BoardGeometry geometry);
  // Throws DomainError for off-board or duplicate squares.
  Placement(BoardGeometry geometry, std::span<const Square> queens);

  const BoardGeometry& geometry() const noexcept { return geometry_; }
  int n() const noexcept { return geometry_.n(); }
  int queen_count() const noexcept { return queen_count_; }
  bool empty() const noexcept { return queen_count_ == 0; }

  bool occupied(const Square& sq) const;

  // Returns false (and leaves the placement unchanged) if already occupied.
  bool add(const Square& sq);
  bool remove(const Square& sq);

  // Queens in board index order (row by row from the bottom).
  std::vector<Square> queens() const;

  friend bool operator==(const Placement&, const Placement&) = default;

 private:
  BoardGeometry geometry_;
  std::vector<bool> occupied_;
  int queen_count_ = 0;
};

enum class SquareStatus : std::uint8_t { occupied, covered, uncovered };

class CoverageMap {
 public:
  CoverageMap(BoardGeometry geometry, std::vector<SquareStatus> statuses);

  const BoardGeometry& geometry() const noexcept { return geometry_; }
  SquareStatus status(const Square& sq) const;

  int occupied_count() const noexcept { return counts_[0]; }
  int covered_count() const noexcept { return counts_[1]; }
  int uncovered_count() const noexcept { return counts_[2]; }

  std::vector<Square> uncovered_squares() const;

 private:
  BoardGeometry geometry_;
  std::vector<SquareStatus> statuses_;
  std::array<int, 3> counts_{};
};

CoverageMap coverage(const Placement& placement);

// Zero uncovered squares. The empty placement never dominates.
bool dominates(const Placement& placement);

struct LineStatus {
  bool empty = true;       // no queen on the line
  bool uncovered = false;  // some square of the line is uncovered
};

LineStatus line_status(const LineId& line, const Placement& placement);

// The eight symmetries of the square board.
enum class Symmetry : std::uint8_t {
  identity,
  rotate90,
  rotate180,
  rotate270,
  flip_x,          // x -> n+1-x
  flip_y,          // y -> n+1-y
  transpose,       // (x, y) -> (y, x)
  anti_transpose,  // (x, y) -> (n+1-y, n+1-x)
};

inline constexpr std::array<Symmetry, 8> kAllSymmetries = {
    Symmetry::identity, Symmetry::rotate90,  Symmetry::rotate180, Symmetry::rotate270,
    Symmetry::flip_x,   Symmetry::flip_y,    Symmetry::transpose, Symmetry::anti_transpose};

Square apply(Symmetry s, const Square& sq, int n) noexcept;
Placement apply(Symmetry s, const Placement& placement);

}  // namespace qdom
