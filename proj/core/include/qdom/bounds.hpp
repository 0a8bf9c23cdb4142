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

// Closed-form bounds on the minimum number of queens. Lower bounds are
// clamped to 1 since every board needs at least one queen.

#include <optional>

#include "qdom/variant.hpp"

namespace qdom {

// floor(n / 2).
int lb_simple(int n);
// ceil(2n/3 - 1).
int lb_connected(int n);
// ceil((2n - k - 2) / 3); throws DomainError for k < 1.
int lb_kcolored(int n, int k);

// ceil(2n/3 + 1) for n >= 4. Empty for n < 4, where the exact small-board
// value has to come from the solver.
std::optional<int> ub_connected(int n);

// Lower bound used by the solver to start its search. total is bounded by
// lb_simple; throws DomainError for kcolored with k < 1.
int lower_bound(Variant variant, int n, int k = 1);

struct FixpointResult {
  int value = 0;      // smallest L >= 0 with 3L >= 2n - L - 2, i.e. ceil((n-1)/2)
  int iterated = 0;   // limit of L <- ceil((2n - L - 2)/3) started at lb_connected(n)
  int iterations = 0; // steps until the iteration repeated a value
  int reported = 1;   // value clamped to >= 1
};

FixpointResult fixpoint_lb(int n);

struct BoundReport {
  int n = 1;
  int k = 1;
  Variant variant = Variant::connected;
  int lb = 1;
  std::optional<int> ub;
  bool ub_from_solver = false;  // set by callers that fill ub for n < 4
};

// Throws DomainError for variant total (no closed form is claimed for it).
BoundReport bound_report(Variant variant, int n, int k = 1);

}  // namespace qdom
