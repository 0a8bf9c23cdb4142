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

#include <algorithm>
#include <stdexcept>
#include <tuple>

#include "qdom/bounds.hpp"
#include "qdom/errors.hpp"
#include "qdom/solver.hpp"
#include "qdom/visibility.hpp"

namespace qdom {
namespace {

bool connected_cover(const Placement& p) {
  return !p.empty() && dominates(p) && is_connected(build_visibility(p));
}

// Lexicographic distance from a connected cover: uncovered squares first.
std::pair<int, int> defect(const Placement& p) {
  const int uncovered = coverage(p).uncovered_count();
  const int components = p.empty() ? 0 : component_count(build_visibility(p));
  return {uncovered, components};
}

ConstructionOutcome from_solver(int n) {
  SolveRequest req;
  req.n = n;
  req.variant = Variant::connected;
  const SolveResult r = solve_bb(req);
  if (!r.witness) throw std::logic_error("no connected cover found for n=" + std::to_string(n));
  ConstructionOutcome out(*r.witness);
  out.from_solver = true;
  out.layout_n = n;
  out.alignment = "exact optimum from the solver";
  out.literal_size = r.witness->queen_count();
  return out;
}

}  // namespace

ConstructionOutcome construct_connected(int n) {
  if (n < 1) throw DomainError("board size must be at least 1, got " + std::to_string(n));
  ConstructionOutcome out{Placement(BoardGeometry(n))};
  if (n < 4) {
    out = from_solver(n);
  } else {
    const int layout_n = std::max(6, (n + 2) / 3 * 3);
    const int m = layout_n / 3;
    out.layout_n = layout_n;
    out.alignment = "top-left diagonal right-aligned in columns 2.." + std::to_string(m + 1);

    Placement base(BoardGeometry{n});
    const auto place_clipped = [&](Square sq) {
      if (base.geometry().contains(sq) && base.add(sq)) out.diagonal_queens.push_back(sq);
    };
    for (int i = 1; i <= m; ++i) place_clipped({2 * m + i, i});
    for (int i = 1; i <= m; ++i) place_clipped({i + 1, 2 * m + i});
    out.base_uncovered = coverage(base).uncovered_squares();

    // Smallest rows first; otherwise keep the pair closest to a connected
    // cover for the repair step.
    std::optional<std::tuple<std::pair<int, int>, int, int>> fallback;
    for (int a = 1; a <= n && !out.first_column_queen; ++a) {
      if (base.occupied({1, a})) continue;
      for (int b = 1; b <= n; ++b) {
        if (base.occupied({n, b}) || (n == 1 && a == b)) continue;
        Placement trial = base;
        trial.add({1, a});
        trial.add({n, b});
        if (connected_cover(trial)) {
          out.first_column_queen = Square{1, a};
          out.last_column_queen = Square{n, b};
          break;
        }
        const auto d = defect(trial);
        if (!fallback || d < std::get<0>(*fallback)) fallback.emplace(d, a, b);
      }
    }

    Placement current = base;
    if (out.first_column_queen) {
      current.add(*out.first_column_queen);
      current.add(*out.last_column_queen);
    } else {
      if (fallback) {
        out.first_column_queen = Square{1, std::get<1>(*fallback)};
        out.last_column_queen = Square{n, std::get<2>(*fallback)};
        current.add(*out.first_column_queen);
        current.add(*out.last_column_queen);
      }
      out.repaired = true;
      out.uncovered_before_repair = coverage(current).uncovered_squares();
      const int budget = n * n;
      while (!connected_cover(current)) {
        if (static_cast<int>(out.repair_added.size()) >= budget) {
          throw std::logic_error("repair did not converge for n=" + std::to_string(n));
        }
        std::optional<std::pair<std::pair<int, int>, Square>> best;
        for (int i = 0; i < n * n; ++i) {
          const Square sq = current.geometry().square_at(i);
          if (current.occupied(sq)) continue;
          Placement trial = current;
          trial.add(sq);
          const auto d = defect(trial);
          if (!best || d < best->first) best.emplace(d, sq);
        }
        current.add(best->second);
        out.repair_added.push_back(best->second);
      }
    }

    out.literal_size = current.queen_count();
    for (const Square& q : current.queens()) {
      Placement trial = current;
      trial.remove(q);
      if (connected_cover(trial)) {
        current = std::move(trial);
        out.removed_by_minimization.push_back(q);
      }
    }
    out.placement = std::move(current);
  }

  out.size = out.placement.queen_count();
  out.dominating = dominates(out.placement);
  out.connected = !out.placement.empty() && is_connected(build_visibility(out.placement));
  return out;
}

ConstructionReport validate_construction(const ConstructionOutcome& outcome) {
  ConstructionReport rep;
  const Placement& p = outcome.placement;
  rep.n = p.n();
  rep.size = p.queen_count();
  const CoverageMap cov = coverage(p);
  rep.uncovered = cov.uncovered_squares();
  rep.dominating = !p.empty() && rep.uncovered.empty();
  rep.connected = !p.empty() && is_connected(build_visibility(p));
  rep.lb = lb_connected(rep.n);
  rep.claimed_ub = ub_connected(rep.n);
  rep.meets_claimed_ub = rep.claimed_ub && rep.size <= *rep.claimed_ub;
  rep.gap_to_lb = rep.size - rep.lb;
  rep.literal_bound = 2 * ((rep.n + 2) / 3) + 2;
  rep.within_literal_bound = rep.size <= rep.literal_bound;
  rep.base_misses_only_first_column =
      !outcome.from_solver &&
      std::all_of(outcome.base_uncovered.begin(), outcome.base_uncovered.end(),
                  [](const Square& sq) { return sq.x == 1; });
  return rep;
}

}  // namespace qdom
