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

#include "qdom/annulus.hpp"

#include <algorithm>
#include <map>

#include "qdom/errors.hpp"

namespace qdom {
namespace {

enum class Band { low, middle, high };

Band band(int v, int low_count, int high_count, int n) {
  if (v <= low_count) return Band::low;
  if (v > n - high_count) return Band::high;
  return Band::middle;
}

long sum_regions(const RegionMap& m, int first, int last) {
  long s = 0;
  for (int r = first; r <= last; ++r) s += m.queen_count(r);
  return s;
}

}  // namespace

Sentinels sentinels(const Placement& placement) {
  const int n = placement.n();
  std::vector<int> row_queens(static_cast<std::size_t>(n + 1), 0);
  std::vector<int> col_queens(static_cast<std::size_t>(n + 1), 0);
  for (const Square& q : placement.queens()) {
    ++row_queens[static_cast<std::size_t>(q.y)];
    ++col_queens[static_cast<std::size_t>(q.x)];
  }
  int first_col = 0, last_col = 0, first_row = 0, last_row = 0;
  for (int i = 1; i <= n; ++i) {
    if (col_queens[static_cast<std::size_t>(i)] == 0) {
      if (first_col == 0) first_col = i;
      last_col = i;
    }
    if (row_queens[static_cast<std::size_t>(i)] == 0) {
      if (first_row == 0) first_row = i;
      last_row = i;
    }
  }
  if (first_col == 0 || first_row == 0) {
    throw DegeneratePlacementError(first_col == 0 ? "no empty column" : "no empty row");
  }
  return {first_col - 1, n - last_col, first_row - 1, n - last_row};
}

const char* to_string(Region r) {
  static constexpr const char* kNames[] = {"Q1", "Q2", "Q3", "Q4", "Q5",
                                           "Q6", "Q7", "Q8", "Q9", "annulus"};
  return kNames[static_cast<std::size_t>(r)];
}

int annulus_reach_cap(Region r) {
  switch (r) {
    case Region::q1:
    case Region::q2:
    case Region::q3:
    case Region::q4:
      return 2;
    case Region::q5:
    case Region::q6:
    case Region::q7:
    case Region::q8:
      return 6;
    case Region::q9:
      return 8;
    case Region::annulus:
      return 0;
  }
  return 0;
}

Region RegionMap::region_of(const Square& sq) const {
  geometry_.require(sq);
  return regions_[static_cast<std::size_t>(geometry_.index_of(sq))];
}

int RegionMap::queen_count(int region_number) const {
  if (region_number < 1 || region_number > 9) {
    throw DomainError("region number must be in 1..9, got " + std::to_string(region_number));
  }
  return queen_counts_[static_cast<std::size_t>(region_number - 1)];
}

bool RegionMap::on_annulus(const Square& sq) const { return region_of(sq) == Region::annulus; }

RegionMap decompose(const Placement& placement) {
  const BoardGeometry& g = placement.geometry();
  const int n = g.n();
  RegionMap map(g);
  map.sentinels_ = sentinels(placement);
  const Sentinels& s = map.sentinels_;
  map.frame_width_ = n - s.x1 - s.x2;
  map.frame_height_ = n - s.y1 - s.y2;
  if (map.frame_width_ < 2 || map.frame_height_ < 2) {
    throw DegeneratePlacementError(
        "thin frame: middle block is " + std::to_string(map.frame_width_) + "x" +
        std::to_string(map.frame_height_) + " (a single empty column or row)");
  }
  map.annulus_size_ = 4 * n - 4 - 2 * s.x1 - 2 * s.x2 - 2 * s.y1 - 2 * s.y2;

  const int left = s.x1 + 1, right = n - s.x2;
  const int bottom = s.y1 + 1, top = n - s.y2;
  map.regions_.resize(static_cast<std::size_t>(g.square_count()));
  for (int i = 0; i < g.square_count(); ++i) {
    const Square sq = g.square_at(i);
    const Band cb = band(sq.x, s.x1, s.x2, n);
    const Band rb = band(sq.y, s.y1, s.y2, n);
    Region r = Region::q9;
    if (rb == Band::high) {
      r = cb == Band::low ? Region::q1 : cb == Band::high ? Region::q2 : Region::q5;
    } else if (rb == Band::low) {
      r = cb == Band::low ? Region::q4 : cb == Band::high ? Region::q3 : Region::q7;
    } else if (cb == Band::low) {
      r = Region::q8;
    } else if (cb == Band::high) {
      r = Region::q6;
    } else if (sq.x == left || sq.x == right || sq.y == bottom || sq.y == top) {
      r = Region::annulus;
      map.annulus_squares_.push_back(sq);
    }
    map.regions_[static_cast<std::size_t>(i)] = r;
  }

  for (const Square& q : placement.queens()) {
    const Region r = map.region_of(q);
    if (r == Region::annulus) {
      // Frame lines are empty by construction.
      throw std::logic_error("queen at (" + to_string(q) + ") lies on the annulus");
    }
    ++map.queen_counts_[static_cast<std::size_t>(r)];
  }
  return map;
}

bool line_crosses_annulus(const LineId& line, const RegionMap& region_map) {
  const auto squares = line_squares(line, region_map.geometry());
  return std::any_of(squares.begin(), squares.end(),
                     [&](const Square& sq) { return region_map.on_annulus(sq); });
}

CommonalityTally tally_commonality(const Placement& placement, const RegionMap& region_map) {
  if (!(placement.geometry() == region_map.geometry())) {
    throw DomainError("region map belongs to a different board");
  }
  std::map<LineId, int> per_line;
  for (const Square& q : placement.queens()) {
    for (const LineId& line : lines_through(q, placement.geometry())) ++per_line[line];
  }
  CommonalityTally t;
  for (const auto& [line, p] : per_line) {
    if (p < 2) continue;
    const int c = p - 1;
    const bool crosses = line_crosses_annulus(line, region_map);
    switch (line.kind) {
      case LineKind::row:
        (crosses ? t.common_r_I : t.common_r_II) += c;
        break;
      case LineKind::column:
        (crosses ? t.common_c_I : t.common_c_II) += c;
        break;
      case LineKind::diagonal:
      case LineKind::anti_diagonal:
        (crosses ? t.common_d_on_annulus : t.common_d_off_annulus) += c;
        break;
    }
  }
  return t;
}

const char* to_string(Inequality which) {
  switch (which) {
    case Inequality::I:
      return "I";
    case Inequality::II:
      return "II";
    case Inequality::III:
      return "III";
    case Inequality::IV:
      return "IV";
    case Inequality::V:
      return "V";
  }
  return "?";
}

InequalityReport check_inequality(Inequality which, const Placement& placement) {
  return check_inequality(which, placement, decompose(placement));
}

InequalityReport check_inequality(Inequality which, const Placement& placement,
                                  const RegionMap& m) {
  const int n = placement.n();
  const Sentinels& s = m.sentinels();
  const long corners = sum_regions(m, 1, 4);
  const long strips = sum_regions(m, 5, 8);
  const long interior = m.queen_count(9);
  const long sentinel_sum = s.x1 + s.x2 + s.y1 + s.y2;

  InequalityReport rep;
  rep.which = which;
  auto add = [&rep](std::string name, long value) {
    rep.lhs += value;
    rep.breakdown.emplace_back(std::move(name), value);
  };

  auto annulus_side = [&] {
    add("8*Q9", 8 * interior);
    add("6*(Q5..Q8)", 6 * strips);
    add("4*(Q1..Q4)", 4 * corners);
    rep.rhs = 2L * (2L * n - 2 - sentinel_sum);
  };
  auto band_side = [&] {
    add("2*(Q5..Q8)", 2 * strips);
    add("4*(Q1..Q4)", 4 * corners);
    rep.rhs = 2 * sentinel_sum;
  };

  switch (which) {
    case Inequality::I:
      annulus_side();
      break;
    case Inequality::II:
      band_side();
      break;
    case Inequality::III:
      add("sum Q1..Q9", corners + strips + interior);
      rep.rhs = n / 2;
      break;
    case Inequality::IV: {
      annulus_side();
      const CommonalityTally t = tally_commonality(placement, m);
      add("-2*COMMON-R(I)", -2L * t.common_r_I);
      add("-2*COMMON-C(I)", -2L * t.common_c_I);
      add("-2*COMMON-D(on annulus)", -2L * t.common_d_on_annulus);
      add("-2*COMMON-D(not on annulus)", -2L * t.common_d_off_annulus);
      break;
    }
    case Inequality::V: {
      band_side();
      const CommonalityTally t = tally_commonality(placement, m);
      add("-2*COMMON-R(II)", -2L * t.common_r_II);
      add("-2*COMMON-C(II)", -2L * t.common_c_II);
      break;
    }
  }
  rep.holds = rep.lhs >= rep.rhs;
  return rep;
}

std::vector<QueenReach> annulus_reach(const Placement& placement, const RegionMap& region_map) {
  const BoardGeometry& g = placement.geometry();
  std::vector<QueenReach> out;
  for (const Square& q : placement.queens()) {
    std::vector<bool> hit(static_cast<std::size_t>(g.square_count()), false);
    int reach = 0;
    for (const LineId& line : lines_through(q, g)) {
      for (const Square& sq : line_squares(line, g)) {
        auto h = hit[static_cast<std::size_t>(g.index_of(sq))];
        if (!h && region_map.on_annulus(sq)) {
          h = true;
          ++reach;
        }
      }
    }
    const Region r = region_map.region_of(q);
    out.push_back({q, r, reach, annulus_reach_cap(r)});
  }
  return out;
}

}  // namespace qdom
