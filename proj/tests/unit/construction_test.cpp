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

#include "qdom/construction.hpp"

#include <gtest/gtest.h>

#include "../support/oracles.hpp"
#include "qdom/bounds.hpp"
#include "qdom/placement_io.hpp"

namespace qdom {
namespace {

void expect_connected_cover(const ConstructionOutcome& o) {
  const auto queens = o.placement.queens();
  EXPECT_TRUE(oracle::uncovered(o.placement.n(), queens).empty());
  EXPECT_EQ(oracle::components(queens), 1);
  EXPECT_TRUE(o.dominating);
  EXPECT_TRUE(o.connected);
  EXPECT_EQ(o.size, o.placement.queen_count());
}

TEST(Construct, SixBoard) {
  const ConstructionOutcome o = construct_connected(6);
  expect_connected_cover(o);
  EXPECT_LE(o.size, 6);
  EXPECT_EQ(o.literal_size, 6);
  EXPECT_FALSE(o.repaired);
  const ConstructionReport r = validate_construction(o);
  EXPECT_EQ(r.lb, 3);
  EXPECT_TRUE(r.base_misses_only_first_column);
}

TEST(Construct, NineBoard) {
  const ConstructionOutcome o = construct_connected(9);
  expect_connected_cover(o);
  EXPECT_LE(o.size, 8);
  // Block diagonals of the 3-3-3 layout with a 4 | 2 | 3 column split.
  const std::vector<Square> diag{{7, 1}, {8, 2}, {9, 3}, {2, 7}, {3, 8}, {4, 9}};
  EXPECT_EQ(o.diagonal_queens, diag);
  const ConstructionReport r = validate_construction(o);
  EXPECT_EQ(r.claimed_ub, 7);
  EXPECT_EQ(r.meets_claimed_ub, o.size <= 7);
}

TEST(Construct, ThirtyBoard) {
  const ConstructionOutcome o = construct_connected(30);
  expect_connected_cover(o);
  EXPECT_LE(o.size, 22);
  EXPECT_EQ(o.literal_size, 22);
}

TEST(Construct, LiteralLayoutMissesOnlyColumnOne) {
  for (int n = 6; n <= 30; n += 3) {
    const ConstructionOutcome o = construct_connected(n);
    EXPECT_FALSE(o.base_uncovered.empty());
    for (const Square& sq : o.base_uncovered) EXPECT_EQ(sq.x, 1) << "n=" << n;
    EXPECT_EQ(o.literal_size, 2 * n / 3 + 2);
    EXPECT_LE(o.size, 2 * n / 3 + 2);
  }
}

TEST(Construct, ResidualAndSmallBoards) {
  for (int n = 1; n <= 20; ++n) {
    const ConstructionOutcome o = construct_connected(n);
    expect_connected_cover(o);
    EXPECT_EQ(o.from_solver, n < 4);
    EXPECT_GE(o.size, lb_connected(n)) << "n=" << n;
  }
}

TEST(Construct, Deterministic) {
  for (int n : {7, 9, 14}) {
    EXPECT_EQ(format_placement(construct_connected(n).placement),
              format_placement(construct_connected(n).placement));
  }
}

TEST(Validate, FlagsUncoveredSquares) {
  ConstructionOutcome o(oracle::make(4, {{1, 1}}));
  const ConstructionReport r = validate_construction(o);
  EXPECT_FALSE(r.dominating);
  EXPECT_FALSE(r.uncovered.empty());
  const auto expected = oracle::uncovered(4, {{1, 1}});
  EXPECT_EQ(std::set<Square>(r.uncovered.begin(), r.uncovered.end()), expected);
}

TEST(Validate, TwelveBoardGap) {
  const ConstructionReport r = validate_construction(construct_connected(12));
  EXPECT_EQ(r.lb, 7);
  EXPECT_GE(r.size, r.lb);
  EXPECT_LE(r.size, r.lb + 3);
  EXPECT_EQ(r.gap_to_lb, r.size - 7);
}

}  // namespace
}  // namespace qdom
