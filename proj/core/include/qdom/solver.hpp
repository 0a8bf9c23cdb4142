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

// Exact minimum queen counts for the simple, connected, total and k-colored
// domination variants.
//
// Two independent searches are provided:
//   solve_exhaustive  enumerates every s-subset for s = 1, 2, ... (oracle)
//   solve_bb          iterative deepening with coverage-capacity pruning
//
// Both place the first queen on a representative of its symmetry orbit and
// split the first level across worker threads. The value never depends on
// the worker count; the witness is the one found by the lowest first-level
// branch, so it does not either.

#include <chrono>
#include <cstdint>
#include <optional>

#include "qdom/board.hpp"
#include "qdom/variant.hpp"

namespace qdom {

enum class Method : std::uint8_t { exhaustive, branch_and_bound };

const char* to_string(Method m);
std::optional<Method> parse_method(std::string_view s);

inline constexpr int kDefaultExhaustiveLimit = 7;
inline constexpr int kDefaultBranchAndBoundLimit = 9;
inline constexpr int kMaxSolverBoard = 11;  // 121 squares fit the 128-bit masks

struct SolveRequest {
  int n = 1;
  Variant variant = Variant::simple;
  int k = 1;  // kcolored only
  Method method = Method::branch_and_bound;
  std::optional<int> max_size;
  std::optional<std::uint64_t> node_limit;
  int worker_count = 1;
  // Largest accepted board; defaults per method.
  std::optional<int> size_limit;
  // Branch-and-bound starts deepening at the closed-form lower bound. Turning
  // this off starts at 1, which makes bound checks on the result independent.
  bool start_at_lower_bound = true;
};

enum class SolveStatus : std::uint8_t {
  optimal,     // value is the proven minimum
  infeasible,  // no placement of any size satisfies the variant
  node_limit,  // search aborted; value/witness are absent
  size_cap,    // nothing found up to max_size
};

const char* to_string(SolveStatus s);

struct SolveResult {
  std::optional<int> value;
  std::optional<Placement> witness;
  std::uint64_t nodes_explored = 0;
  std::chrono::nanoseconds elapsed{0};
  Method method = Method::branch_and_bound;
  bool proven_optimal = false;
  SolveStatus status = SolveStatus::optimal;
};

// simple: dominates; connected: dominates and G(Q) connected; total:
// dominates and no isolated queen; kcolored: dominates and G(Q) has at most k
// components. The empty placement is never feasible.
bool feasible(const Placement& placement, Variant variant, int k = 1);

// Minimum number of colors such that every color class is connected in G(Q),
// which is the number of components. Throws DomainError when empty.
int min_colors(const Placement& placement);

// Both throw DomainError on malformed requests (n out of range, k < 1,
// worker_count < 1, method mismatch).
SolveResult solve_exhaustive(const SolveRequest& request);
SolveResult solve_bb(const SolveRequest& request);
SolveResult solve(const SolveRequest& request);

}  // namespace qdom
