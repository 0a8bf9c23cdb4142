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

#include <algorithm>
#include <string>

#include "qdom/errors.hpp"

namespace qdom {
namespace {

// ceil(a / b) for b > 0 and any sign of a.
constexpr int ceil_div(int a, int b) { return a >= 0 ? (a + b - 1) / b : -((-a) / b); }

void require_n(int n) {
  if (n < 1) throw DomainError("board size must be at least 1, got " + std::to_string(n));
}

}  // namespace

int lb_simple(int n) {
  require_n(n);
  return std::max(1, n / 2);
}

int lb_connected(int n) {
  require_n(n);
  // ceil(2n/3 - 1) = ceil((2n - 3) / 3)
  return std::max(1, ceil_div(2 * n - 3, 3));
}

int lb_kcolored(int n, int k) {
  require_n(n);
  if (k < 1) throw DomainError("color count k must be at least 1, got " + std::to_string(k));
  return std::max(1, ceil_div(2 * n - k - 2, 3));
}

std::optional<int> ub_connected(int n) {
  require_n(n);
  if (n < 4) return std::nullopt;
  // ceil(2n/3 + 1) = ceil((2n + 3) / 3)
  return ceil_div(2 * n + 3, 3);
}

int lower_bound(Variant variant, int n, int k) {
  switch (variant) {
    case Variant::simple:
    case Variant::total:
      return lb_simple(n);
    case Variant::connected:
      return lb_connected(n);
    case Variant::kcolored:
      return lb_kcolored(n, k);
  }
  return 1;
}

FixpointResult fixpoint_lb(int n) {
  require_n(n);
  FixpointResult r;
  r.value = std::max(0, ceil_div(n - 1, 2));

  int current = lb_connected(n);
  for (;;) {
    const int next = std::max(0, ceil_div(2 * n - current - 2, 3));
    ++r.iterations;
    if (next == current) break;
    current = next;
    if (r.iterations > 64) break;  // the map contracts by 1/3, never reached
  }
  r.iterated = current;
  r.reported = std::max(1, r.value);
  return r;
}

BoundReport bound_report(Variant variant, int n, int k) {
  BoundReport rep;
  rep.n = n;
  rep.k = variant == Variant::kcolored ? k : 1;
  rep.variant = variant;
  switch (variant) {
    case Variant::simple:
      rep.lb = lb_simple(n);
      break;
    case Variant::connected:
      rep.lb = lb_connected(n);
      rep.ub = ub_connected(n);
      break;
    case Variant::kcolored:
      rep.lb = lb_kcolored(n, k);
      // A connected cover is a valid one-class k-colored cover.
      rep.ub = ub_connected(n);
      break;
    case Variant::total:
      throw DomainError("no closed-form bound for the total variant");
  }
  return rep;
}

}  // namespace qdom
