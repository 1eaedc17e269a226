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
#include <string>
#include <vector>

#include "mcbi/graph.hpp"
#include "mcbi/horton.hpp"

namespace mcbi {

struct GraphStats {
  std::string name;
  std::size_t edges = 0;
  std::size_t components = 0;
  std::size_t max_degree = 0;
  std::size_t gamma = 0;  // largest cycle weight in a minimum cycle basis; 0 when acyclic
  std::size_t nu = 0;     // cycle space dimension
  std::size_t mcb_weight = 0;
};

struct InstanceStats {
  std::size_t k = 0;
  std::size_t n = 0;
  std::size_t delta = 0;
  std::size_t gamma = 0;
  std::vector<GraphStats> graphs;
};

inline GraphStats graph_stats(const Graph& g, const MCBResult& mcb) {
  GraphStats s;
  s.edges = g.edge_count();
  s.components = g.component_count();
  s.max_degree = g.max_degree();
  s.nu = g.cycle_space_dimension();
  s.gamma = mcb.max_weight();
  s.mcb_weight = mcb.total_weight;
  return s;
}

/// gamma_i comes from one minimum cycle basis; all of them share the same
/// sorted weight sequence.
inline InstanceStats instance_stats(const Instance& instance) {
  InstanceStats out;
  out.k = instance.graph_count();
  out.n = instance.vertex_count();
  for (std::size_t i = 0; i < instance.graph_count(); ++i) {
    const Graph& g = instance.graph(i);
    GraphStats s = graph_stats(g, minimum_cycle_basis(g));
    s.name = instance.name(i);
    out.delta = std::max(out.delta, s.max_degree);
    out.gamma = std::max(out.gamma, s.gamma);
    out.graphs.push_back(std::move(s));
  }
  return out;
}

}  // namespace mcbi
