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

// Small hand-built graphs. Vertices are 1-based here, as in the file format.

#include <initializer_list>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "mcbi/mcbi.hpp"

namespace mcbi {

// gtest printer: edge ids.
inline void PrintTo(const Cycle& c, std::ostream* os) {
  *os << "{";
  for (EdgeId id : c.edge_ids()) *os << ' ' << id;
  *os << " }";
}

}  // namespace mcbi

namespace mcbi::testing {

using EdgeList = std::vector<std::pair<std::size_t, std::size_t>>;

inline std::vector<Edge> to_edges(const EdgeList& list) {
  std::vector<Edge> out;
  for (auto [u, v] : list) out.push_back(make_edge(u - 1, v - 1));
  return out;
}

inline Instance make_instance(std::size_t n, std::initializer_list<EdgeList> graphs) {
  std::vector<std::vector<Edge>> lists;
  for (const EdgeList& g : graphs) lists.push_back(to_edges(g));
  return Instance::from_edge_lists(n, lists);
}

inline Cycle make_cycle(const Instance& in, const EdgeList& list) {
  std::vector<EdgeId> ids;
  for (auto [u, v] : list) ids.push_back(in.universe().id_of(u - 1, v - 1));
  return Cycle::from_edges(in.universe().edge_count(), ids);
}

/// Closed walk through the listed vertices.
inline Cycle ring(const Instance& in, std::initializer_list<std::size_t> vertices) {
  std::vector<std::size_t> vs(vertices);
  EdgeList list;
  for (std::size_t i = 0; i < vs.size(); ++i) list.push_back({vs[i], vs[(i + 1) % vs.size()]});
  return make_cycle(in, list);
}

inline const EdgeList k4{{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}};
inline const EdgeList grid2x3{{1, 2}, {2, 3}, {4, 5}, {5, 6}, {1, 4}, {2, 5}, {3, 6}};

}  // namespace mcbi::testing
