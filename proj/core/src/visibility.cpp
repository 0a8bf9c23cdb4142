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

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "qdom/errors.hpp"

namespace qdom {
namespace {

// Position along a line; columns are ordered by y, everything else by x.
int along(const LineId& line, const Square& sq) {
  return line.kind == LineKind::column ? sq.y : sq.x;
}

void require_vertices(const VisibilityGraph& graph) {
  if (graph.vertex_count() == 0) throw DomainError("visibility graph has no queens");
}

}  // namespace

VisibilityGraph build_visibility(const Placement& placement) {
  VisibilityGraph graph(placement.geometry());
  graph.queens_ = placement.queens();
  const int nv = graph.vertex_count();
  graph.adjacency_.assign(static_cast<std::size_t>(nv), {});

  // Queens grouped per line; std::map keeps line order deterministic.
  std::map<LineId, std::vector<int>> by_line;
  for (int v = 0; v < nv; ++v) {
    for (const LineId& line : lines_through(graph.queens_[static_cast<std::size_t>(v)],
                                            placement.geometry())) {
      by_line[line].push_back(v);
    }
  }

  std::set<std::pair<int, int>> seen;
  for (auto& [line, members] : by_line) {
    std::sort(members.begin(), members.end(), [&](int a, int b) {
      return along(line, graph.queens_[static_cast<std::size_t>(a)]) <
             along(line, graph.queens_[static_cast<std::size_t>(b)]);
    });
    const int p = static_cast<int>(members.size());
    graph.tallies_.push_back({line, p, p - 1});
    for (int i = 0; i + 1 < p; ++i) {
      const int a = std::min(members[static_cast<std::size_t>(i)], members[static_cast<std::size_t>(i + 1)]);
      const int b = std::max(members[static_cast<std::size_t>(i)], members[static_cast<std::size_t>(i + 1)]);
      // Two distinct squares share at most one line, so a pair can only be
      // produced once. A repeat means the line geometry is broken.
      if (!seen.emplace(a, b).second) {
        throw std::logic_error("queens " + to_string(graph.queens_[static_cast<std::size_t>(a)]) +
                               " and " + to_string(graph.queens_[static_cast<std::size_t>(b)]) +
                               " share more than one line");
      }
      graph.edges_.push_back({a, b, line});
      graph.adjacency_[static_cast<std::size_t>(a)].push_back(b);
      graph.adjacency_[static_cast<std::size_t>(b)].push_back(a);
    }
  }

  // Min-label propagation until stable.
  std::vector<int> label(static_cast<std::size_t>(nv));
  for (int v = 0; v < nv; ++v) label[static_cast<std::size_t>(v)] = v;
  for (bool changed = true; changed;) {
    changed = false;
    for (const VisibilityEdge& e : graph.edges_) {
      int& la = label[static_cast<std::size_t>(e.a)];
      int& lb = label[static_cast<std::size_t>(e.b)];
      if (la != lb) {
        la = lb = std::min(la, lb);
        changed = true;
      }
    }
  }

  std::map<int, int> dense;
  graph.component_ids_.resize(static_cast<std::size_t>(nv));
  for (int v = 0; v < nv; ++v) {
    const auto [it, inserted] =
        dense.emplace(label[static_cast<std::size_t>(v)], static_cast<int>(dense.size()));
    graph.component_ids_[static_cast<std::size_t>(v)] = it->second;
  }
  graph.components_ = static_cast<int>(dense.size());
  return graph;
}

int component_count(const VisibilityGraph& graph) {
  require_vertices(graph);
  return graph.components();
}

bool is_connected(const VisibilityGraph& graph) {
  return component_count(graph) == 1;
}

bool every_queen_sees_another(const VisibilityGraph& graph) {
  require_vertices(graph);
  for (int v = 0; v < graph.vertex_count(); ++v) {
    if (graph.degree(v) == 0) return false;
  }
  return true;
}

}  // namespace qdom
