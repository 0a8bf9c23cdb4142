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

// The queen visibility graph G(Q): one vertex per queen, and an edge between
// two queens that share a line with no queen strictly between them. A line
// carrying p queens therefore contributes a path of p - 1 edges.

#include <utility>
#include <vector>

#include "qdom/board.hpp"

namespace qdom {

struct VisibilityEdge {
  int a = 0;  // vertex indices, a < b
  int b = 0;
  LineId line;
};

struct LineTally {
  LineId line;
  int queens = 0;  // p
  int edges = 0;   // p - 1
};

class VisibilityGraph {
 public:
  const BoardGeometry& geometry() const noexcept { return geometry_; }

  // Vertices in board index order.
  const std::vector<Square>& queens() const noexcept { return queens_; }
  int vertex_count() const noexcept { return static_cast<int>(queens_.size()); }

  const std::vector<VisibilityEdge>& edges() const noexcept { return edges_; }
  int edge_count() const noexcept { return static_cast<int>(edges_.size()); }

  // One entry per queen-bearing line.
  const std::vector<LineTally>& line_tallies() const noexcept { return tallies_; }

  const std::vector<int>& neighbors(int v) const { return adjacency_.at(static_cast<std::size_t>(v)); }
  int degree(int v) const { return static_cast<int>(neighbors(v).size()); }

  // Component label per vertex, labels are 0..components-1 in order of the
  // lowest vertex in each component. Zero components for an empty graph.
  const std::vector<int>& component_ids() const noexcept { return component_ids_; }
  int components() const noexcept { return components_; }

 private:
  friend VisibilityGraph build_visibility(const Placement& placement);
  explicit VisibilityGraph(BoardGeometry g) : geometry_(g) {}

  BoardGeometry geometry_;
  std::vector<Square> queens_;
  std::vector<VisibilityEdge> edges_;
  std::vector<LineTally> tallies_;
  std::vector<std::vector<int>> adjacency_;
  std::vector<int> component_ids_;
  int components_ = 0;
};

VisibilityGraph build_visibility(const Placement& placement);

// The three queries below throw DomainError on a graph with no vertices.
int component_count(const VisibilityGraph& graph);
bool is_connected(const VisibilityGraph& graph);
// Minimum degree >= 1. A lone queen sees nobody.
bool every_queen_sees_another(const VisibilityGraph& graph);

}  // namespace qdom
