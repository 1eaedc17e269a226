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
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "mcbi/bitvec.hpp"

namespace mcbi {

using VertexId = std::size_t;
using EdgeId = std::size_t;

/// Unordered vertex pair stored with u < v.
struct Edge {
  VertexId u = 0;
  VertexId v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

inline Edge make_edge(VertexId a, VertexId b) {
  if (a == b) throw std::invalid_argument("self-loop edge");
  return a < b ? Edge{a, b} : Edge{b, a};
}

/// The instance-wide edge indexing. EdgeId is the position of the pair in the
/// lexicographically sorted edge list, so every cycle of every graph is a bit
/// vector over the same coordinates.
class EdgeUniverse {
 public:
  EdgeUniverse(std::size_t n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
    for (Edge& e : edges_) {
      e = make_edge(e.u, e.v);
      if (e.v >= n_) throw std::invalid_argument("edge endpoint out of range");
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
      throw std::invalid_argument("duplicate edge in universe");
    for (EdgeId id = 0; id < edges_.size(); ++id) index_.emplace(edges_[id], id);
  }

  std::size_t vertex_count() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const Edge& edge(EdgeId id) const { return edges_.at(id); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  std::optional<EdgeId> find(VertexId a, VertexId b) const {
    if (a == b) return std::nullopt;
    auto it = index_.find(make_edge(a, b));
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  EdgeId id_of(VertexId a, VertexId b) const {
    auto id = find(a, b);
    if (!id) throw std::invalid_argument("edge not in universe");
    return *id;
  }

  BitVec empty_set() const { return BitVec(edges_.size()); }

  friend bool operator==(const EdgeUniverse& a, const EdgeUniverse& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  std::size_t n_;
  std::vector<Edge> edges_;
  std::map<Edge, EdgeId> index_;
};

using UniversePtr = std::shared_ptr<const EdgeUniverse>;

struct Neighbor {
  VertexId vertex;
  EdgeId edge;
};

/// A simple graph over a shared universe. Adjacency lists are sorted by
/// neighbor id.
class Graph {
 public:
  Graph(UniversePtr universe, BitVec edges) : universe_(std::move(universe)), edges_(std::move(edges)) {
    if (!universe_) throw std::invalid_argument("Graph: null universe");
    if (edges_.size() != universe_->edge_count()) throw std::invalid_argument("Graph: edge set size mismatch");
    adjacency_.resize(universe_->vertex_count());
    for (EdgeId id = edges_.find_first(); id != BitVec::npos; id = edges_.find_next(id)) {
      const Edge& e = universe_->edge(id);
      adjacency_[e.u].push_back({e.v, id});
      adjacency_[e.v].push_back({e.u, id});
    }
    for (auto& list : adjacency_)
      std::sort(list.begin(), list.end(), [](const Neighbor& a, const Neighbor& b) { return a.vertex < b.vertex; });
  }

  const EdgeUniverse& universe() const noexcept { return *universe_; }
  const UniversePtr& universe_ptr() const noexcept { return universe_; }
  const BitVec& edge_set() const noexcept { return edges_; }

  std::size_t vertex_count() const noexcept { return adjacency_.size(); }
  std::size_t edge_count() const noexcept { return edges_.count(); }
  bool has_edge(EdgeId id) const { return edges_.test(id); }
  const std::vector<Neighbor>& neighbors(VertexId v) const { return adjacency_.at(v); }
  std::size_t degree(VertexId v) const { return adjacency_.at(v).size(); }

  std::size_t max_degree() const noexcept {
    std::size_t d = 0;
    for (const auto& list : adjacency_) d = std::max(d, list.size());
    return d;
  }

  /// Component label per vertex; isolated vertices are their own component.
  std::vector<std::size_t> component_labels() const {
    std::vector<std::size_t> label(vertex_count(), static_cast<std::size_t>(-1));
    std::size_t next = 0;
    std::vector<VertexId> stack;
    for (VertexId s = 0; s < vertex_count(); ++s) {
      if (label[s] != static_cast<std::size_t>(-1)) continue;
      label[s] = next;
      stack.push_back(s);
      while (!stack.empty()) {
        VertexId x = stack.back();
        stack.pop_back();
        for (const Neighbor& nb : adjacency_[x]) {
          if (label[nb.vertex] == static_cast<std::size_t>(-1)) {
            label[nb.vertex] = next;
            stack.push_back(nb.vertex);
          }
        }
      }
      ++next;
    }
    return label;
  }

  std::size_t component_count() const {
    auto labels = component_labels();
    return labels.empty() ? 0 : *std::max_element(labels.begin(), labels.end()) + 1;
  }

  /// Dimension of the cycle space: |E| - |V| + #components.
  std::size_t cycle_space_dimension() const { return edge_count() + component_count() - vertex_count(); }

 private:
  UniversePtr universe_;
  BitVec edges_;
  std::vector<std::vector<Neighbor>> adjacency_;
};

/// k >= 1 graphs over one universe; the universe is exactly the union of the
/// graphs' edges.
class Instance {
 public:
  Instance(UniversePtr universe, std::vector<Graph> graphs, std::vector<std::string> names = {})
      : universe_(std::move(universe)), graphs_(std::move(graphs)), names_(std::move(names)) {
    if (graphs_.empty()) throw std::invalid_argument("Instance: needs at least one graph");
    BitVec all = universe_->empty_set();
    for (const Graph& g : graphs_) {
      if (g.universe_ptr() != universe_ && !(g.universe() == *universe_))
        throw std::invalid_argument("Instance: graphs over different universes");
      all |= g.edge_set();
    }
    if (all.count() != universe_->edge_count())
      throw std::invalid_argument("Instance: universe has edges in no graph");
    names_.resize(graphs_.size());
    for (std::size_t i = 0; i < names_.size(); ++i)
      if (names_[i].empty()) names_[i] = "g" + std::to_string(i + 1);
  }

  /// Builds the universe as the union of the given edge lists.
  static Instance from_edge_lists(std::size_t n, const std::vector<std::vector<Edge>>& lists,
                                  std::vector<std::string> names = {}) {
    std::vector<Edge> all;
    for (const auto& list : lists)
      for (const Edge& e : list) all.push_back(make_edge(e.u, e.v));
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    auto universe = std::make_shared<const EdgeUniverse>(n, std::move(all));
    std::vector<Graph> graphs;
    for (const auto& list : lists) {
      BitVec bits = universe->empty_set();
      for (const Edge& e : list) bits.set(universe->id_of(e.u, e.v));
      graphs.emplace_back(universe, std::move(bits));
    }
    return Instance(universe, std::move(graphs), std::move(names));
  }

  const EdgeUniverse& universe() const noexcept { return *universe_; }
  const UniversePtr& universe_ptr() const noexcept { return universe_; }
  std::size_t graph_count() const noexcept { return graphs_.size(); }
  std::size_t vertex_count() const noexcept { return universe_->vertex_count(); }
  const Graph& graph(std::size_t i) const { return graphs_.at(i); }
  const std::vector<Graph>& graphs() const noexcept { return graphs_; }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const noexcept { return names_; }

  std::size_t max_degree() const {
    std::size_t d = 0;
    for (const Graph& g : graphs_) d = std::max(d, g.max_degree());
    return d;
  }

  friend bool operator==(const Instance& a, const Instance& b) {
    if (!(*a.universe_ == *b.universe_) || a.names_ != b.names_ || a.graphs_.size() != b.graphs_.size())
      return false;
    for (std::size_t i = 0; i < a.graphs_.size(); ++i)
      if (!(a.graphs_[i].edge_set() == b.graphs_[i].edge_set())) return false;
    return true;
  }

 private:
  UniversePtr universe_;
  std::vector<Graph> graphs_;
  std::vector<std::string> names_;
};

/// The graph whose edge set is present in every graph of the instance.
inline Graph intersection_graph(const Instance& instance) {
  BitVec common = instance.graph(0).edge_set();
  for (const Graph& g : instance.graphs()) common &= g.edge_set();
  return Graph(instance.universe_ptr(), std::move(common));
}

}  // namespace mcbi
