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

#include "qdom/bounds.hpp"

#include <gtest/gtest.h>

#include <algorithm>

#include "../support/oracles.hpp"
#include "qdom/errors.hpp"

namespace qdom {
namespace {

TEST(LbSimple, Examples) {
  EXPECT_EQ(lb_simple(8), 4);
  EXPECT_EQ(lb_simple(1), 1);
  EXPECT_EQ(lb_simple(9), 4);
}

TEST(LbConnected, Examples) {
  EXPECT_EQ(lb_connected(9), 5);
  EXPECT_EQ(lb_connected(8), 5);
  EXPECT_EQ(lb_connected(1), 1);
}

TEST(LbKcolored, Examples) {
  EXPECT_EQ(lb_kcolored(10, 2), 6);
  EXPECT_EQ(lb_kcolored(9, 1), 5);
  EXPECT_EQ(lb_kcolored(6, 10), 1);
  EXPECT_THROW(lb_kcolored(6, 0), DomainError);
}

TEST(UbConnected, Examples) {
  EXPECT_EQ(ub_connected(9), 7);
  EXPECT_EQ(ub_connected(6), 5);
  EXPECT_EQ(ub_connected(12), 9);
  EXPECT_FALSE(ub_connected(3).has_value());
}

TEST(FixpointLb, Examples) {
  EXPECT_EQ(fixpoint_lb(9).value, 4);
  const FixpointResult ten = fixpoint_lb(10);
  EXPECT_EQ(ten.value, 5);
  EXPECT_EQ(ten.iterated, 5);
  // 6 -> 4 -> 5 -> 5
  EXPECT_EQ(ten.iterations, 3);
  const FixpointResult one = fixpoint_lb(1);
  EXPECT_EQ(one.value, 0);
  EXPECT_EQ(one.reported, 1);
}

TEST(Bounds, RejectNonPositiveBoards) {
  EXPECT_THROW(lb_simple(0), DomainError);
  EXPECT_THROW(lb_connected(-1), DomainError);
  EXPECT_THROW(fixpoint_lb(0), DomainError);
}

TEST(Bounds, FormulasAgainstSearchOracle) {
  for (int n = 1; n <= 1000; ++n) {
    EXPECT_EQ(lb_simple(n), std::max(1, n / 2));
    EXPECT_EQ(lb_connected(n), std::max(1, oracle::ceil_ratio(2 * n - 3, 3)));
    for (int k = 1; k <= 6; ++k) {
      EXPECT_EQ(lb_kcolored(n, k), std::max(1, oracle::ceil_ratio(2 * n - k - 2, 3)));
      EXPECT_LE(lb_kcolored(n, k + 1), lb_kcolored(n, k));
    }
    EXPECT_EQ(lb_kcolored(n, 1), lb_connected(n));
    if (n >= 4) EXPECT_EQ(ub_connected(n), oracle::ceil_ratio(2 * n + 3, 3));

    // Smallest L >= 0 with 3L >= 2n - L - 2.
    int smallest = 0;
    while (3 * smallest < 2 * n - smallest - 2) ++smallest;
    const FixpointResult fp = fixpoint_lb(n);
    EXPECT_EQ(fp.value, smallest);
    EXPECT_EQ(fp.value, oracle::ceil_ratio(n - 1, 2) < 0 ? 0 : oracle::ceil_ratio(n - 1, 2));
    EXPECT_EQ(fp.iterated, fp.value);
    EXPECT_LE(fp.iterations, 10);
    EXPECT_GE(fp.value, n / 2 - 1);
  }
}

TEST(BoundReport, Variants) {
  const BoundReport c = bound_report(Variant::connected, 9);
  EXPECT_EQ(c.lb, 5);
  EXPECT_EQ(c.ub, 7);
  const BoundReport k = bound_report(Variant::kcolored, 10, 2);
  EXPECT_EQ(k.lb, 6);
  EXPECT_EQ(k.k, 2);
  EXPECT_FALSE(bound_report(Variant::simple, 8).ub.has_value());
  EXPECT_FALSE(bound_report(Variant::connected, 3).ub.has_value());
  EXPECT_THROW(bound_report(Variant::total, 5), DomainError);
}

}  // namespace
}  // namespace qdom
