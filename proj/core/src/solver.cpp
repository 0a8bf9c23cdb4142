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

#include "qdom/solver.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <climits>
#include <thread>
#include <vector>

#include "qdom/bounds.hpp"
#include "qdom/errors.hpp"
#include "qdom/visibility.hpp"

namespace qdom {

const char* to_string(Method m) {
  return m == Method::exhaustive ? "exhaustive" : "bb";
}

std::optional<Method> parse_method(std::string_view s) {
  if (s == "exhaustive") return Method::exhaustive;
  if (s == "bb" || s == "branch_and_bound") return Method::branch_and_bound;
  return std::nullopt;
}

const char* to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::optimal:
      return "optimal";
    case SolveStatus::infeasible:
      return "infeasible";
    case SolveStatus::node_limit:
      return "node_limit";
    case SolveStatus::size_cap:
      return "size_cap";
  }
  return "?";
}

bool feasible(const Placement& placement, Variant variant, int k) {
  if (placement.empty() || !dominates(placement)) return false;
  if (variant == Variant::simple) return true;
  const VisibilityGraph g = build_visibility(placement);
  switch (variant) {
    case Variant::simple:
      return true;
    case Variant::connected:
      return is_connected(g);
    case Variant::total:
      return every_queen_sees_another(g);
    case Variant::kcolored:
      return component_count(g) <= k;
  }
  return false;
}

int min_colors(const Placement& placement) {
  return component_count(build_visibility(placement));
}

namespace {

// Square set over at most 128 squares.
struct Mask {
  std::array<std::uint64_t, 2> w{};

  void set(int i) { w[static_cast<std::size_t>(i >> 6)] |= std::uint64_t{1} << (i & 63); }
  bool test(int i) const {
    return (w[static_cast<std::size_t>(i >> 6)] >> (i & 63)) & 1U;
  }
  Mask with(int i) const {
    Mask m = *this;
    m.set(i);
    return m;
  }
  int count() const { return std::popcount(w[0]) + std::popcount(w[1]); }

  friend Mask operator|(Mask a, const Mask& b) {
    a.w[0] |= b.w[0];
    a.w[1] |= b.w[1];
    return a;
  }
  friend Mask operator&(Mask a, const Mask& b) {
    a.w[0] &= b.w[0];
    a.w[1] &= b.w[1];
    return a;
  }
  Mask minus(const Mask& b) const {
    Mask m = *this;
    m.w[0] &= ~b.w[0];
    m.w[1] &= ~b.w[1];
    return m;
  }
  friend bool operator==(const Mask&, const Mask&) = default;
};

// Calls f(i) for each set bit in ascending order until f returns false.
template <typename F>
bool for_each_bit(const Mask& m, F&& f) {
  for (std::size_t word = 0; word < 2; ++word) {
    std::uint64_t bits = m.w[word];
    while (bits != 0) {
      const int i = static_cast<int>(word * 64) + std::countr_zero(bits);
      bits &= bits - 1;
      if (!f(i)) return false;
    }
  }
  return true;
}

struct BoardTables {
  BoardGeometry geometry;
  int squares = 0;
  Mask full;
  std::vector<Mask> attack;     // squares sharing a line with i, including i
  std::vector<int> orbit_reps;  // lowest index of each symmetry orbit

  explicit BoardTables(int n) : geometry(n), squares(n * n) {
    attack.resize(static_cast<std::size_t>(squares));
    for (int i = 0; i < squares; ++i) {
      full.set(i);
      for (const LineId& line : lines_through(geometry.square_at(i), geometry)) {
        for (const Square& sq : line_squares(line, geometry)) {
          attack[static_cast<std::size_t>(i)].set(geometry.index_of(sq));
        }
      }
    }
    for (int i = 0; i < squares; ++i) {
      int rep = i;
      for (Symmetry s : kAllSymmetries) {
        rep = std::min(rep, geometry.index_of(apply(s, geometry.square_at(i), n)));
      }
      if (rep == i) orbit_reps.push_back(i);
    }
  }
};

struct Shared {
  std::atomic<int> best_task{INT_MAX};
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<bool> aborted{false};
};

struct Verdict {
  bool feasible = false;
  int deficit = 0;        // how far the placement is from the variant's graph condition
  int fix_per_queen = 1;  // most deficit one added queen can remove
};

class TaskSearch {
 public:
  TaskSearch(const BoardTables& t, const SolveRequest& req, Shared& shared, int task, int target)
      : t_(t), req_(req), shared_(shared), task_(task), target_(target) {}

  ~TaskSearch() { flush(); }

  std::optional<std::vector<int>> exhaustive() {
    const int first = t_.orbit_reps[static_cast<std::size_t>(task_)];
    placed_.push_back(first);
    first_ = first;
    if (enumerate(0, target_ - 1, t_.attack[static_cast<std::size_t>(first)])) return placed_;
    return std::nullopt;
  }

  std::optional<std::vector<int>> branch_and_bound() {
    const int first = t_.orbit_reps[static_cast<std::size_t>(task_)];
    // Sets containing an earlier representative were covered by earlier tasks.
    Mask forbidden;
    for (int j = 0; j < task_; ++j) forbidden.set(t_.orbit_reps[static_cast<std::size_t>(j)]);
    placed_.push_back(first);
    Mask placed;
    placed.set(first);
    if (dfs(placed, t_.attack[static_cast<std::size_t>(first)], forbidden)) return placed_;
    return std::nullopt;
  }

 private:
  // Returns true when the search has to stop.
  bool tick() {
    ++local_nodes_;
    if ((local_nodes_ & 1023U) == 0) flush();
    return shared_.aborted.load(std::memory_order_relaxed) ||
           shared_.best_task.load(std::memory_order_relaxed) < task_;
  }

  void flush() {
    if (local_nodes_ == 0) return;
    const auto total = shared_.nodes.fetch_add(local_nodes_) + local_nodes_;
    local_nodes_ = 0;
    if (req_.node_limit && total > *req_.node_limit) shared_.aborted.store(true);
  }

  Verdict judge() const {
    Verdict v;
    if (req_.variant == Variant::simple) {
      v.feasible = true;
      return v;
    }
    Placement p(t_.geometry);
    for (int i : placed_) p.add(t_.geometry.square_at(i));
    const VisibilityGraph g = build_visibility(p);
    switch (req_.variant) {
      case Variant::simple:
        break;
      case Variant::connected:
        v.deficit = component_count(g) - 1;
        v.fix_per_queen = 7;
        break;
      case Variant::kcolored:
        v.deficit = std::max(0, component_count(g) - req_.k);
        v.fix_per_queen = 7;
        break;
      case Variant::total:
        for (int q = 0; q < g.vertex_count(); ++q) v.deficit += g.degree(q) == 0 ? 1 : 0;
        v.fix_per_queen = 8;
        break;
    }
    v.feasible = v.deficit == 0;
    return v;
  }

  bool enumerate(int start, int remaining, const Mask& covered) {
    if (tick()) return false;
    if (remaining == 0) return covered == t_.full && judge().feasible;
    for (int sq = start; sq <= t_.squares - remaining; ++sq) {
      if (sq == first_) continue;
      placed_.push_back(sq);
      const bool ok = enumerate(sq + 1, remaining - 1, covered | t_.attack[static_cast<std::size_t>(sq)]);
      if (ok) return true;
      placed_.pop_back();
    }
    return false;
  }

  bool dfs(const Mask& placed, const Mask& covered, const Mask& forbidden) {
    if (tick()) return false;
    if (covered == t_.full) return extend(placed, forbidden, 0);
    const int remaining = target_ - static_cast<int>(placed_.size());
    if (remaining <= 0) return false;

    // Pairwise line-disjoint uncovered squares need distinct lines of the
    // covering queens, and a queen has four lines.
    const Mask uncovered = t_.full.minus(covered);
    Mask blocked;
    int independent = 0;
    int branch_square = -1;
    int branch_options = INT_MAX;
    const bool alive = for_each_bit(uncovered, [&](int u) {
      const Mask& reach = t_.attack[static_cast<std::size_t>(u)];
      if (!blocked.test(u)) {
        ++independent;
        blocked = blocked | reach;
      }
      const int options = reach.minus(forbidden).count();
      if (options == 0) return false;
      if (options < branch_options) {
        branch_options = options;
        branch_square = u;
      }
      return true;
    });
    if (!alive || independent > 4 * remaining) return false;

    Mask local_forbidden = forbidden;
    const Mask choices = t_.attack[static_cast<std::size_t>(branch_square)].minus(forbidden);
    bool found = false;
    for_each_bit(choices, [&](int c) {
      placed_.push_back(c);
      found = dfs(placed.with(c), covered | t_.attack[static_cast<std::size_t>(c)], local_forbidden);
      if (found) return false;
      placed_.pop_back();
      local_forbidden.set(c);
      return !tick();
    });
    return found;
  }

  // Dominating already; add queens until the graph condition holds. Adding a
  // queen to a dominating placement never breaks connectivity or degree, so
  // supersets are enough.
  bool extend(const Mask& placed, const Mask& forbidden, int start) {
    const Verdict v = judge();
    if (v.feasible) return true;
    const int remaining = target_ - static_cast<int>(placed_.size());
    if (remaining <= 0 || v.deficit > v.fix_per_queen * remaining) return false;
    for (int sq = start; sq < t_.squares; ++sq) {
      if (placed.test(sq) || forbidden.test(sq)) continue;
      if (tick()) return false;
      placed_.push_back(sq);
      if (extend(placed.with(sq), forbidden, sq + 1)) return true;
      placed_.pop_back();
    }
    return false;
  }

  const BoardTables& t_;
  const SolveRequest& req_;
  Shared& shared_;
  int task_;
  int target_;
  int first_ = -1;
  std::uint64_t local_nodes_ = 0;
  std::vector<int> placed_;
};

struct LevelOutcome {
  std::optional<std::vector<int>> witness;
  bool aborted = false;
};

LevelOutcome run_level(const BoardTables& t, const SolveRequest& req, Shared& shared,
                       int target) {
  const int tasks = static_cast<int>(t.orbit_reps.size());
  std::vector<std::optional<std::vector<int>>> results(static_cast<std::size_t>(tasks));
  std::atomic<int> next{0};
  shared.best_task.store(INT_MAX);

  auto work = [&] {
    for (;;) {
      const int task = next.fetch_add(1);
      if (task >= tasks || shared.aborted.load()) return;
      if (task > shared.best_task.load()) continue;
      TaskSearch search(t, req, shared, task, target);
      auto found = req.method == Method::exhaustive ? search.exhaustive()
                                                    : search.branch_and_bound();
      if (found) {
        results[static_cast<std::size_t>(task)] = std::move(found);
        int best = shared.best_task.load();
        while (task < best && !shared.best_task.compare_exchange_weak(best, task)) {
        }
      }
    }
  };

  const int workers = std::min(req.worker_count, tasks);
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int i = 0; i < workers; ++i) pool.emplace_back(work);
  }

  LevelOutcome out;
  for (auto& r : results) {
    if (r) {
      out.witness = std::move(r);
      return out;
    }
  }
  out.aborted = shared.aborted.load();
  return out;
}

void validate(const SolveRequest& req, Method expected) {
  if (req.method != expected) throw DomainError("solve request names a different method");
  const int limit = req.size_limit.value_or(
      expected == Method::exhaustive ? kDefaultExhaustiveLimit : kDefaultBranchAndBoundLimit);
  if (limit > kMaxSolverBoard) {
    throw DomainError("solver size limit cannot exceed " + std::to_string(kMaxSolverBoard));
  }
  if (req.n < 1 || req.n > limit) {
    throw DomainError("n=" + std::to_string(req.n) + " is outside the " + to_string(expected) +
                      " limit 1.." + std::to_string(limit));
  }
  if (req.variant == Variant::kcolored && req.k < 1) {
    throw DomainError("color count k must be at least 1, got " + std::to_string(req.k));
  }
  if (req.worker_count < 1) throw DomainError("worker_count must be at least 1");
  if (req.max_size && *req.max_size < 1) throw DomainError("max_size must be at least 1");
}

SolveResult deepen(const SolveRequest& req, int start) {
  const auto t0 = std::chrono::steady_clock::now();
  const BoardTables tables(req.n);
  Shared shared;
  SolveResult result;
  result.method = req.method;
  result.status = SolveStatus::infeasible;

  const int last = std::min(tables.squares, req.max_size.value_or(tables.squares));
  for (int s = start; s <= last; ++s) {
    LevelOutcome level = run_level(tables, req, shared, s);
    if (level.aborted) {
      result.status = SolveStatus::node_limit;
      break;
    }
    if (level.witness) {
      const int size = static_cast<int>(level.witness->size());
      if (size < start && start > 1) {
        // A set below the starting bound exists; redo the levels below it.
        s = 0;
        start = 1;
        continue;
      }
      Placement witness(tables.geometry);
      for (int i : *level.witness) witness.add(tables.geometry.square_at(i));
      result.value = witness.queen_count();
      result.witness = std::move(witness);
      result.status = SolveStatus::optimal;
      result.proven_optimal = true;
      break;
    }
    if (s == last && last < tables.squares) result.status = SolveStatus::size_cap;
  }

  result.nodes_explored = shared.nodes.load();
  result.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(
      std::chrono::steady_clock::now() - t0);
  return result;
}

}  // namespace

SolveResult solve_exhaustive(const SolveRequest& request) {
  validate(request, Method::exhaustive);
  return deepen(request, 1);
}

SolveResult solve_bb(const SolveRequest& request) {
  validate(request, Method::branch_and_bound);
  const int start =
      request.start_at_lower_bound ? lower_bound(request.variant, request.n, request.k) : 1;
  return deepen(request, start);
}

SolveResult solve(const SolveRequest& request) {
  return request.method == Method::exhaustive ? solve_exhaustive(request) : solve_bb(request);
}

}  // namespace qdom
