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

// Sentinel/region decomposition of a placement and the counting inequalities
// built on it.
//
// With x1+1 / n-x2 the smallest / largest empty columns and y1+1 / n-y2 the
// smallest / largest empty rows, the board splits into three column bands
// (left 1..x1, middle, right) and three row bands (bottom 1..y1, middle, top).
//
//        +----+-----------+----+
//   top  | Q1 |    Q5     | Q2 |
//        +----+-----------+----+
//        |    | annulus A |    |
//        | Q8 |  +-----+  | Q6 |
//        |    |  | Q9  |  |    |
//        |    |  +-----+  |    |
//        +----+-----------+----+
//  bottom| Q4 |    Q7     | Q3 |
//        +----+-----------+----+
//
// The annulus is the rectangular frame formed by the extreme empty rows and
// columns clipped to the middle block. Its squares are provably empty.

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "qdom/board.hpp"

namespace qdom {

struct Sentinels {
  int x1 = 0;  // non-empty columns left of the first empty column
  int x2 = 0;  // non-empty columns right of the last empty column
  int y1 = 0;  // non-empty rows below the first empty row
  int y2 = 0;  // non-empty rows above the last empty row

  friend bool operator==(const Sentinels&, const Sentinels&) = default;
};

// Throws DegeneratePlacementError when there is no empty row or no empty
// column.
Sentinels sentinels(const Placement& placement);

enum class Region : std::uint8_t { q1, q2, q3, q4, q5, q6, q7, q8, q9, annulus };

const char* to_string(Region r);

// Maximum number of annulus squares one queen in the region can reach.
int annulus_reach_cap(Region r);

class RegionMap {
 public:
  const BoardGeometry& geometry() const noexcept { return geometry_; }
  const Sentinels& sentinels() const noexcept { return sentinels_; }

  Region region_of(const Square& sq) const;

  // queen_count(1) .. queen_count(9) are the per-region queen counts.
  int queen_count(int region_number) const;
  const std::array<int, 9>& queen_counts() const noexcept { return queen_counts_; }

  // Middle block extent; the frame is a genuine ring when both are >= 2.
  int frame_width() const noexcept { return frame_width_; }
  int frame_height() const noexcept { return frame_height_; }

  // 4n - 4 - 2(x1 + x2 + y1 + y2).
  int annulus_size() const noexcept { return annulus_size_; }
  const std::vector<Square>& annulus_squares() const noexcept { return annulus_squares_; }
  bool on_annulus(const Square& sq) const;

 private:
  friend RegionMap decompose(const Placement& placement);
  explicit RegionMap(BoardGeometry g) : geometry_(g) {}

  BoardGeometry geometry_;
  Sentinels sentinels_;
  std::vector<Region> regions_;
  std::array<int, 9> queen_counts_{};
  int frame_width_ = 0;
  int frame_height_ = 0;
  int annulus_size_ = 0;
  std::vector<Square> annulus_squares_;
};

// Throws DegeneratePlacementError when sentinels are undefined, or when the
// middle block is thinner than 2 in either direction (the frame then folds
// onto itself and the perimeter count no longer describes it).
RegionMap decompose(const Placement& placement);

// Literal intersection of the line's squares with the annulus squares.
bool line_crosses_annulus(const LineId& line, const RegionMap& region_map);

struct CommonalityTally {
  int common_r_I = 0;             // rows crossing the annulus
  int common_c_I = 0;             // columns crossing the annulus
  int common_d_on_annulus = 0;    // diagonals / anti-diagonals crossing
  int common_d_off_annulus = 0;   // diagonals / anti-diagonals missing it
  int common_r_II = 0;            // rows inside the top/bottom bands
  int common_c_II = 0;            // columns inside the left/right bands

  int common_r() const noexcept { return common_r_I + common_r_II; }
  int common_c() const noexcept { return common_c_I + common_c_II; }
  int common_d() const noexcept { return common_d_on_annulus + common_d_off_annulus; }
  int total() const noexcept { return common_r() + common_c() + common_d(); }

  friend bool operator==(const CommonalityTally&, const CommonalityTally&) = default;
};

// Every line holding p >= 2 queens adds p - 1 to exactly one bucket.
CommonalityTally tally_commonality(const Placement& placement, const RegionMap& region_map);

enum class Inequality : std::uint8_t { I, II, III, IV, V };

inline constexpr std::array<Inequality, 5> kAllInequalities = {
    Inequality::I, Inequality::II, Inequality::III, Inequality::IV, Inequality::V};

const char* to_string(Inequality which);

struct InequalityReport {
  Inequality which = Inequality::I;
  long lhs = 0;
  long rhs = 0;
  bool holds = false;
  std::vector<std::pair<std::string, long>> breakdown;  // signed lhs terms
};

// Throws DegeneratePlacementError when the decomposition is undefined.
InequalityReport check_inequality(Inequality which, const Placement& placement);
InequalityReport check_inequality(Inequality which, const Placement& placement,
                                  const RegionMap& region_map);

// Distinct annulus squares each queen reaches along its four lines.
struct QueenReach {
  Square queen;
  Region region = Region::q9;
  int reach = 0;
  int cap = 0;
};

std::vector<QueenReach> annulus_reach(const Placement& placement, const RegionMap& region_map);

}  // namespace qdom
