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

#include <gtest/gtest.h>

#include <filesystem>
#include <random>

#include "../support/oracles.hpp"
#include "qdom/errors.hpp"

namespace qdom {
namespace {

TEST(PlacementIo, ParsesCommentsAndBlankLines) {
  const Placement p = parse_placement("# center\n\nN=3\n# queen\n2,2\n");
  EXPECT_EQ(p.n(), 3);
  EXPECT_EQ(p.queens(), (std::vector<Square>{{2, 2}}));
}

TEST(PlacementIo, FormatIsCanonical) {
  const Placement p = oracle::make(4, {{3, 3}, {1, 1}});
  EXPECT_EQ(format_placement(p), "N=4\n1,1\n3,3\n");
}

TEST(PlacementIo, ErrorsNameTheLine) {
  auto line_of = [](std::string_view text) {
    try {
      parse_placement(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return -1;
  };
  EXPECT_EQ(line_of("N=3\n1,1\n1,1\n"), 3);    // duplicate
  EXPECT_EQ(line_of("N=3\n4,1\n"), 2);         // off board
  EXPECT_EQ(line_of("# c\nN=x\n"), 2);         // bad header
  EXPECT_EQ(line_of("1,1\n"), 1);              // missing header
  EXPECT_EQ(line_of("N=3\n1;1\n"), 2);         // bad separator
  EXPECT_EQ(line_of("N=3\n1,1,\n"), 2);        // trailing junk
  EXPECT_EQ(line_of("# only a comment\n"), 0);  // no header at all
}

TEST(PlacementIo, FileRoundTripProperty) {
  std::mt19937_64 rng(7);
  const auto path = std::filesystem::temp_directory_path() / "qdom_io_roundtrip.txt";
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 10);
    const Placement p = oracle::random_placement(n, rng);
    write_placement_file(path, p);
    EXPECT_EQ(read_placement_file(path), p);
  }
  std::filesystem::remove(path);
}

}  // namespace
}  // namespace qdom
