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

#include "qdom/board.hpp"

#include <cstdlib>

#include "qdom/errors.hpp"

namespace qdom {

std::string to_string(const Square& sq) {
  return std::to_string(sq.x) + "," + std::to_string(sq.y);
}

const char* to_string(LineKind kind) {
  switch (kind) {
    case LineKind::row:
      return "row";
    case LineKind::column:
      return "column";
    case LineKind::diagonal:
      return "diagonal";
    case LineKind::anti_diagonal:
      return "anti-diagonal";
  }
  return "?";
}

std::string to_string(const LineId& line) {
  return std::string(to_string(line.kind)) + " " + std::to_string(line.index);
}

BoardGeometry::BoardGeometry(int n) : n_(n) {
  if (n < 1) throw DomainError("board size must be at least 1, got " + std::to_string(n));
}

int BoardGeometry::min_line_index(LineKind kind) const noexcept {
  switch (kind) {
    case LineKind::row:
    case LineKind::column:
      return 1;
    case LineKind::diagonal:
      return -(n_ - 1);
    case LineKind::anti_diagonal:
      return 2;
  }
  return 0;
}

int BoardGeometry::max_line_index(LineKind kind) const noexcept {
  switch (kind) {
    case LineKind::row:
    case LineKind::column:
      return n_;
    case LineKind::diagonal:
      return n_ - 1;
    case LineKind::anti_diagonal:
      return 2 * n_;
  }
  return -1;
}

int BoardGeometry::line_count(LineKind kind) const noexcept {
  return max_line_index(kind) - min_line_index(kind) + 1;
}

bool BoardGeometry::contains(const LineId& line) const noexcept {
  return line.index >= min_line_index(line.kind) && line.index <= max_line_index(line.kind);
}

void BoardGeometry::require(const Square& sq) const {
  if (!contains(sq)) {
    throw DomainError("square (" + to_string(sq) + ") is off the " + std::to_string(n_) + "x" +
                      std::to_string(n_) + " board");
  }
}

std::array<LineId, 4> lines_through(const Square& sq, const BoardGeometry& geometry) {
  geometry.require(sq);
  return {LineId{LineKind::row, sq.y}, LineId{LineKind::column, sq.x},
          LineId{LineKind::diagonal, sq.x - sq.y}, LineId{LineKind::anti_diagonal, sq.x + sq.y}};
}

std::vector<Square> line_squares(const LineId& line, const BoardGeometry& geometry) {
  if (!geometry.contains(line)) {
    throw DomainError(to_string(line) + " is out of range for n=" + std::to_string(geometry.n()));
  }
  const int n = geometry.n();
  std::vector<Square> out;
  switch (line.kind) {
    case LineKind::row:
      for (int x = 1; x <= n; ++x) out.push_back({x, line.index});
      break;
    case LineKind::column:
      for (int y = 1; y <= n; ++y) out.push_back({line.index, y});
      break;
    case LineKind::diagonal:
      for (int x = 1; x <= n; ++x) {
        const int y = x - line.index;
        if (y >= 1 && y <= n) out.push_back({x, y});
      }
      break;
    case LineKind::anti_diagonal:
      for (int x = 1; x <= n; ++x) {
        const int y = line.index - x;
        if (y >= 1 && y <= n) out.push_back({x, y});
      }
      break;
  }
  return out;
}

bool share_line(const Square& a, const Square& b) noexcept {
  return a.x == b.x || a.y == b.y || a.x - a.y == b.x - b.y || a.x + a.y == b.x + b.y;
}

Placement::Placement(BoardGeometry geometry)
    : geometry_(geometry), occupied_(static_cast<std::size_t>(geometry.square_count()), false) {}

Placement::Placement(BoardGeometry geometry, std::span<const Square> queens)
    : Placement(geometry) {
  for (const Square& sq : queens) {
    if (!add(sq)) throw DomainError("duplicate queen at (" + to_string(sq) + ")");
  }
}

bool Placement::occupied(const Square& sq) const {
  geometry_.require(sq);
  return occupied_[static_cast<std::size_t>(geometry_.index_of(sq))];
}

bool Placement::add(const Square& sq) {
  geometry_.require(sq);
  auto ref = occupied_[static_cast<std::size_t>(geometry_.index_of(sq))];
  if (ref) return false;
  ref = true;
  ++queen_count_;
  return true;
}

bool Placement::remove(const Square& sq) {
  geometry_.require(sq);
  auto ref = occupied_[static_cast<std::size_t>(geometry_.index_of(sq))];
  if (!ref) return false;
  ref = false;
  --queen_count_;
  return true;
}

std::vector<Square> Placement::queens() const {
  std::vector<Square> out;
  out.reserve(static_cast<std::size_t>(queen_count_));
  for (int i = 0; i < geometry_.square_count(); ++i) {
    if (occupied_[static_cast<std::size_t>(i)]) out.push_back(geometry_.square_at(i));
  }
  return out;
}

CoverageMap::CoverageMap(BoardGeometry geometry, std::vector<SquareStatus> statuses)
    : geometry_(geometry), statuses_(std::move(statuses)) {
  for (SquareStatus s : statuses_) ++counts_[static_cast<std::size_t>(s)];
}

SquareStatus CoverageMap::status(const Square& sq) const {
  geometry_.require(sq);
  return statuses_[static_cast<std::size_t>(geometry_.index_of(sq))];
}

std::vector<Square> CoverageMap::uncovered_squares() const {
  std::vector<Square> out;
  for (int i = 0; i < geometry_.square_count(); ++i) {
    if (statuses_[static_cast<std::size_t>(i)] == SquareStatus::uncovered) {
      out.push_back(geometry_.square_at(i));
    }
  }
  return out;
}

CoverageMap coverage(const Placement& placement) {
  const BoardGeometry& g = placement.geometry();
  std::vector<SquareStatus> statuses(static_cast<std::size_t>(g.square_count()),
                                     SquareStatus::uncovered);
  for (const Square& q : placement.queens()) {
    for (const LineId& line : lines_through(q, g)) {
      for (const Square& sq : line_squares(line, g)) {
        statuses[static_cast<std::size_t>(g.index_of(sq))] = SquareStatus::covered;
      }
    }
  }
  for (const Square& q : placement.queens()) {
    statuses[static_cast<std::size_t>(g.index_of(q))] = SquareStatus::occupied;
  }
  return CoverageMap(g, std::move(statuses));
}

bool dominates(const Placement& placement) {
  return coverage(placement).uncovered_count() == 0;
}

LineStatus line_status(const LineId& line, const Placement& placement) {
  const auto squares = line_squares(line, placement.geometry());
  const CoverageMap cov = coverage(placement);
  LineStatus status;
  for (const Square& sq : squares) {
    if (placement.occupied(sq)) status.empty = false;
    if (cov.status(sq) == SquareStatus::uncovered) status.uncovered = true;
  }
  return status;
}

Square apply(Symmetry s, const Square& sq, int n) noexcept {
  const int x = sq.x;
  const int y = sq.y;
  const int rx = n + 1 - x;
  const int ry = n + 1 - y;
  switch (s) {
    case Symmetry::identity:
      return {x, y};
    case Symmetry::rotate90:
      return {ry, x};
    case Symmetry::rotate180:
      return {rx, ry};
    case Symmetry::rotate270:
      return {y, rx};
    case Symmetry::flip_x:
      return {rx, y};
    case Symmetry::flip_y:
      return {x, ry};
    case Symmetry::transpose:
      return {y, x};
    case Symmetry::anti_transpose:
      return {ry, rx};
  }
  return sq;
}

Placement apply(Symmetry s, const Placement& placement) {
  Placement out(placement.geometry());
  for (const Square& q : placement.queens()) out.add(apply(s, q, placement.n()));
  return out;
}

}  // namespace qdom
