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

// Three-block diagonal construction of a connected dominating placement.
//
// For n = 3m the columns are split m+1 | m-1 | m and the rows into equal
// thirds. Queens go on the rising diagonal of the bottom-right block,
// (2m+i, i), and on the right-aligned rising diagonal of the top-left block,
// (i+1, 2m+i), for i = 1..m. Together they cover everything except part of
// column 1; one queen in column 1 closes that gap and one queen in column n
// joins the two diagonals. Other n reuse the layout of the next multiple of 3
// clipped to the board and are repaired greedily if needed.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qdom/board.hpp"

namespace qdom {

struct ConstructionOutcome {
  explicit ConstructionOutcome(Placement p) : placement(std::move(p)) {}

  Placement placement;  // final placement, after the minimization pass
  int size = 0;
  bool dominating = false;
  bool connected = false;
  bool repaired = false;
  std::vector<Square> repair_added;
  std::vector<Square> uncovered_before_repair;

  int layout_n = 0;  // multiple of 3 whose layout was used
  std::vector<Square> diagonal_queens;
  std::vector<Square> base_uncovered;  // left uncovered by the two diagonals alone
  std::optional<Square> first_column_queen;
  std::optional<Square> last_column_queen;
  int literal_size = 0;  // before the minimization pass
  std::vector<Square> removed_by_minimization;
  bool from_solver = false;  // n < 4: exact small-board optimum
  std::string alignment;
};

ConstructionOutcome construct_connected(int n);

struct ConstructionReport {
  int n = 0;
  int size = 0;
  bool dominating = false;
  bool connected = false;
  std::vector<Square> uncovered;
  int lb = 0;                       // lb_connected(n)
  std::optional<int> claimed_ub;    // ub_connected(n)
  bool meets_claimed_ub = false;
  int gap_to_lb = 0;
  int literal_bound = 0;            // 2 * ceil(n/3) + 2
  bool within_literal_bound = false;
  bool base_misses_only_first_column = false;
};

ConstructionReport validate_construction(const ConstructionOutcome& outcome);

}  // namespace qdom
