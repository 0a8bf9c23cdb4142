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

// Brute-force reference computations used only by tests. Everything here
// works from raw coordinates so it does not share code paths with the
// library's line indexing.

#include <algorithm>
#include <cstdlib>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "qdom/annulus.hpp"
#include "qdom/board.hpp"
#include "qdom/errors.hpp"

namespace qdom::oracle {

inline bool attacks(const Square& q, const Square& s) {
  const int dx = s.x - q.x;
  const int dy = s.y - q.y;
  return dx == 0 || dy == 0 || std::abs(dx) == std::abs(dy);
}

inline std::set<Square> uncovered(int n, const std::vector<Square>& queens) {
  std::set<Square> out;
  for (int x = 1; x <= n; ++x) {
    for (int y = 1; y <= n; ++y) {
      const Square s{x, y};
      if (std::find(queens.begin(), queens.end(), s) != queens.end()) continue;
      if (std::none_of(queens.begin(), queens.end(), [&](const Square& q) { return attacks(q, s); })) {
        out.insert(s);
      }
    }
  }
  return out;
}

// Pairs (i < j) of queens that see each other: collinear with no queen
// strictly between them, found by walking the connecting ray.
inline std::set<std::pair<Square, Square>> sight_pairs(const std::vector<Square>& queens) {
  std::set<Square> occ(queens.begin(), queens.end());
  std::set<std::pair<Square, Square>> out;
  for (const Square& a : queens) {
    for (const Square& b : queens) {
      if (!(a < b) || !attacks(a, b)) continue;
      const int sx = (b.x > a.x) - (b.x < a.x);
      const int sy = (b.y > a.y) - (b.y < a.y);
      bool blocked = false;
      for (Square c{a.x + sx, a.y + sy}; c != b; c = {c.x + sx, c.y + sy}) {
        if (occ.count(c)) blocked = true;
      }
      if (!blocked) out.emplace(a, b);
    }
  }
  return out;
}

inline int components(const std::vector<Square>& queens) {
  std::map<Square, Square> parent;
  for (const Square& q : queens) parent[q] = q;
  auto find = [&](Square s) {
    while (parent[s] != s) s = parent[s];
    return s;
  };
  for (const auto& [a, b] : sight_pairs(queens)) parent[find(a)] = find(b);
  std::set<Square> roots;
  for (const Square& q : queens) roots.insert(find(q));
  return static_cast<int>(roots.size());
}

struct Frame {
  Sentinels s;
  std::set<Square> squares;
};

// Frame squares straight from the definition: boundary of the rectangle
// spanned by the extreme empty columns and rows.
inline std::optional<Frame> frame(int n, const std::vector<Square>& queens) {
  std::vector<int> empty_cols, empty_rows;
  for (int i = 1; i <= n; ++i) {
    if (std::none_of(queens.begin(), queens.end(), [&](const Square& q) { return q.x == i; })) {
      empty_cols.push_back(i);
    }
    if (std::none_of(queens.begin(), queens.end(), [&](const Square& q) { return q.y == i; })) {
      empty_rows.push_back(i);
    }
  }
  if (empty_cols.empty() || empty_rows.empty()) return std::nullopt;
  Frame f;
  const int l = empty_cols.front(), r = empty_cols.back();
  const int b = empty_rows.front(), t = empty_rows.back();
  f.s = {l - 1, n - r, b - 1, n - t};
  for (int x = l; x <= r; ++x) {
    for (int y = b; y <= t; ++y) {
      if (x == l || x == r || y == b || y == t) f.squares.insert({x, y});
    }
  }
  return f;
}

// Smallest integer c with den * c >= num, by search.
inline int ceil_ratio(int num, int den) {
  int c = -1000;
  while (den * c < num) ++c;
  return c;
}

inline Placement make(int n, const std::vector<Square>& queens) {
  return Placement(BoardGeometry(n), queens);
}

// Random dominating placement: add shuffled squares until covered, then
// (half of the time) drop redundant queens in random order.
inline Placement random_dominating(int n, std::mt19937_64& rng) {
  const BoardGeometry g(n);
  std::vector<int> order(static_cast<std::size_t>(n * n));
  for (int i = 0; i < n * n; ++i) order[static_cast<std::size_t>(i)] = i;
  std::shuffle(order.begin(), order.end(), rng);
  Placement p(g);
  for (int i : order) {
    if (dominates(p)) break;
    p.add(g.square_at(i));
  }
  if (rng() % 2 == 0) {
    auto qs = p.queens();
    std::shuffle(qs.begin(), qs.end(), rng);
    for (const Square& q : qs) {
      Placement t = p;
      t.remove(q);
      if (dominates(t)) p = std::move(t);
    }
  }
  return p;
}

inline Placement random_placement(int n, std::mt19937_64& rng) {
  const BoardGeometry g(n);
  Placement p(g);
  std::uniform_int_distribution<int> count(0, n * n / 3);
  std::uniform_int_distribution<int> square(0, n * n - 1);
  const int k = count(rng);
  for (int i = 0; i < k; ++i) p.add(g.square_at(square(rng)));
  return p;
}

inline bool decomposable(const Placement& p) {
  try {
    decompose(p);
    return true;
  } catch (const DegeneratePlacementError&) {
    return false;
  }
}

}  // namespace qdom::oracle
