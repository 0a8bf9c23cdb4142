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

#include "qdom/visibility.hpp"

#include <gtest/gtest.h>

#include <random>

#include "../support/oracles.hpp"
#include "qdom/errors.hpp"

namespace qdom {
namespace {

using oracle::make;

std::set<std::pair<Square, Square>> edge_set(const VisibilityGraph& g) {
  std::set<std::pair<Square, Square>> out;
  for (const VisibilityEdge& e : g.edges()) {
    Square a = g.queens()[static_cast<std::size_t>(e.a)];
    Square b = g.queens()[static_cast<std::size_t>(e.b)];
    if (b < a) std::swap(a, b);
    out.emplace(a, b);
  }
  return out;
}

TEST(BuildVisibility, RowOfThreeIsAPath) {
  const auto g = build_visibility(make(3, {{1, 1}, {2, 1}, {3, 1}}));
  EXPECT_EQ(g.edge_count(), 2);
  EXPECT_EQ(edge_set(g), (std::set<std::pair<Square, Square>>{{{1, 1}, {2, 1}}, {{2, 1}, {3, 1}}}));
  EXPECT_EQ(component_count(g), 1);
}

TEST(BuildVisibility, MiddleQueenBlocksDiagonal) {
  const auto g = build_visibility(make(3, {{1, 1}, {2, 2}, {3, 3}}));
  const auto edges = edge_set(g);
  EXPECT_EQ(edges.size(), 2U);
  EXPECT_TRUE(edges.count({{1, 1}, {2, 2}}));
  EXPECT_TRUE(edges.count({{2, 2}, {3, 3}}));
  EXPECT_FALSE(edges.count({{1, 1}, {3, 3}}));
}

TEST(BuildVisibility, SingleQueen) {
  const auto g = build_visibility(make(3, {{1, 1}}));
  EXPECT_EQ(g.edge_count(), 0);
  EXPECT_EQ(component_count(g), 1);
}

TEST(BuildVisibility, LineTalliesCountPMinusOne) {
  const auto g = build_visibility(make(5, {{1, 1}, {3, 1}, {5, 1}, {3, 3}}));
  int sum = 0;
  for (const LineTally& t : g.line_tallies()) {
    EXPECT_EQ(t.edges, t.queens - 1);
    sum += t.edges;
  }
  EXPECT_EQ(sum, g.edge_count());
}

TEST(ComponentCount, Examples) {
  EXPECT_EQ(component_count(build_visibility(make(3, {{1, 1}, {1, 2}}))), 1);
  EXPECT_EQ(component_count(build_visibility(make(3, {{1, 1}, {2, 3}}))), 2);
  EXPECT_EQ(component_count(build_visibility(make(3, {{1, 1}, {3, 3}, {2, 2}}))), 1);
}

TEST(IsConnected, Examples) {
  EXPECT_TRUE(is_connected(build_visibility(make(3, {{2, 2}}))));
  EXPECT_FALSE(is_connected(build_visibility(make(3, {{1, 1}, {2, 3}}))));
  EXPECT_TRUE(is_connected(build_visibility(make(3, {{1, 1}, {2, 1}, {2, 2}}))));
}

TEST(EveryQueenSeesAnother, Examples) {
  EXPECT_TRUE(every_queen_sees_another(build_visibility(make(3, {{1, 1}, {1, 2}}))));
  EXPECT_FALSE(every_queen_sees_another(build_visibility(make(3, {{2, 2}}))));
  // (5,4) would share the diagonal x - y = 1 with (2,1); (4,5) shares no
  // line with either queen.
  EXPECT_TRUE(oracle::attacks({2, 1}, {5, 4}));
  EXPECT_FALSE(oracle::attacks({1, 1}, {4, 5}) || oracle::attacks({2, 1}, {4, 5}));
  EXPECT_FALSE(every_queen_sees_another(build_visibility(make(5, {{1, 1}, {2, 1}, {4, 5}}))));
}

TEST(Queries, EmptyGraphThrows) {
  const auto g = build_visibility(make(4, {}));
  EXPECT_EQ(g.vertex_count(), 0);
  EXPECT_THROW(component_count(g), DomainError);
  EXPECT_THROW(is_connected(g), DomainError);
  EXPECT_THROW(every_queen_sees_another(g), DomainError);
}

class VisibilityProperties : public ::testing::TestWithParam<int> {};

TEST_P(VisibilityProperties, MatchesRayWalkOracle) {
  const int n = GetParam();
  std::mt19937_64 rng(0x5EE + static_cast<unsigned>(n));
  for (int trial = 0; trial < 300; ++trial) {
    const Placement p = oracle::random_placement(n, rng);
    const auto queens = p.queens();
    const auto g = build_visibility(p);
    ASSERT_EQ(edge_set(g), oracle::sight_pairs(queens));

    int per_line = 0;
    for (const LineTally& t : g.line_tallies()) per_line += t.queens - 1;
    ASSERT_EQ(per_line, g.edge_count());

    // Each line's edges form a simple path over its queens.
    std::map<LineId, std::vector<int>> degree_on_line;
    for (const VisibilityEdge& e : g.edges()) {
      auto& d = degree_on_line[e.line];
      d.resize(static_cast<std::size_t>(g.vertex_count()));
      ++d[static_cast<std::size_t>(e.a)];
      ++d[static_cast<std::size_t>(e.b)];
    }
    for (const auto& [line, d] : degree_on_line) {
      int ends = 0;
      for (int v : d) {
        ASSERT_LE(v, 2);
        ends += v == 1 ? 1 : 0;
      }
      ASSERT_EQ(ends, 2);
    }

    for (int v = 0; v < g.vertex_count(); ++v) {
      for (int w : g.neighbors(v)) {
        const auto& back = g.neighbors(w);
        ASSERT_NE(std::find(back.begin(), back.end(), v), back.end());
      }
    }

    if (queens.empty()) continue;
    const int comps = component_count(g);
    ASSERT_EQ(comps, oracle::components(queens));
    ASSERT_GE(comps, 1);
    ASSERT_LE(comps, p.queen_count());
    if (is_connected(g)) {
      ASSERT_GE(g.edge_count(), p.queen_count() - 1);
      if (p.queen_count() >= 2) ASSERT_TRUE(every_queen_sees_another(g));
    }
    for (Symmetry sym : kAllSymmetries) {
      const auto gi = build_visibility(apply(sym, p));
      ASSERT_EQ(gi.edge_count(), g.edge_count());
      ASSERT_EQ(component_count(gi), comps);
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Boards, VisibilityProperties, ::testing::Values(2, 4, 6, 9));

}  // namespace
}  // namespace qdom
