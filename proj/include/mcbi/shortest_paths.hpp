// Copyright 2026 The mcbi Authors.
//
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

#include <algorithm>
#include <cstddef>
#include <deque>
#include <limits>
#include <vector>

#include "mcbi/graph.hpp"

namespace mcbi {

/// One BFS tree per root. The parent of v is the smallest-id neighbor one
/// level closer to the root, so path(root, v) is unique and every prefix of
/// it is again a tree path.
class ShortestPathIndex {
 public:
  static constexpr std::size_t unreachable = std::numeric_limits<std::size_t>::max();
  static constexpr EdgeId no_edge = std::numeric_limits<EdgeId>::max();

  explicit ShortestPathIndex(const Graph& g) {
    const std::size_t n = g.vertex_count();
    dist_.assign(n, std::vector<std::size_t>(n, unreachable));
    parent_vertex_.assign(n, std::vector<VertexId>(n, 0));
    parent_edge_.assign(n, std::vector<EdgeId>(n, no_edge));
    std::deque<VertexId> queue;
    for (VertexId root = 0; root < n; ++root) {
      auto& dist = dist_[root];
      dist[root] = 0;
      queue.assign(1, root);
      std::vector<VertexId> order;
      while (!queue.empty()) {
        VertexId x = queue.front();
        queue.pop_front();
        order.push_back(x);
        for (const Neighbor& nb : g.neighbors(x)) {
          if (dist[nb.vertex] == unreachable) {
            dist[nb.vertex] = dist[x] + 1;
            queue.push_back(nb.vertex);
          }
        }
      }
      for (VertexId v : order) {
        if (v == root) continue;
        // adjacency is sorted, so the first neighbor one level up is the smallest
        for (const Neighbor& nb : g.neighbors(v)) {
          if (dist[nb.vertex] + 1 == dist[v]) {
            parent_vertex_[root][v] = nb.vertex;
            parent_edge_[root][v] = nb.edge;
            break;
          }
        }
      }
    }
  }

  std::size_t vertex_count() const noexcept { return dist_.size(); }
  std::size_t distance(VertexId root, VertexId v) const { return dist_.at(root).at(v); }
  bool reachable(VertexId root, VertexId v) const { return distance(root, v) != unreachable; }
  VertexId parent(VertexId root, VertexId v) const { return parent_vertex_.at(root).at(v); }

  /// Edge ids of the tree path, listed from v back to the root. Empty when
  /// v == root or v is unreachable.
  std::vector<EdgeId> path_edges(VertexId root, VertexId v) const {
    std::vector<EdgeId> out;
    if (!reachable(root, v)) return out;
    out.reserve(distance(root, v));
    while (v != root) {
      out.push_back(parent_edge_[root][v]);
      v = parent_vertex_[root][v];
    }
    return out;
  }

  /// Vertex sequence root, ..., v.
  std::vector<VertexId> path_vertices(VertexId root, VertexId v) const {
    std::vector<VertexId> out;
    if (!reachable(root, v)) return out;
    out.push_back(v);
    while (v != root) {
      v = parent_vertex_[root][v];
      out.push_back(v);
    }
    std::reverse(out.begin(), out.end());
    return out;
  }

 private:
  std::vector<std::vector<std::size_t>> dist_;
  std::vector<std::vector<VertexId>> parent_vertex_;
  std::vector<std::vector<EdgeId>> parent_edge_;
};

}  // namespace mcbi
