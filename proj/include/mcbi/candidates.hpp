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
#include <unordered_set>
#include <utility>
#include <vector>

#include "mcbi/cycle_space.hpp"
#include "mcbi/graph.hpp"
#include "mcbi/shortest_paths.hpp"

namespace mcbi {

/// Where a candidate came from. Odd rule: apex `apex` and edge `first`.
/// Even rule: edges `first` and `second`, joined either a-c/b-d (pairing 0)
/// or a-d/b-c (pairing 1) where first = (a,b), second = (c,d).
struct CandidateOrigin {
  enum class Rule { odd, even };
  Rule rule = Rule::odd;
  VertexId apex = 0;
  EdgeId first = 0;
  EdgeId second = 0;
  int pairing = 0;
};

struct CandidateList {
  std::vector<Cycle> cycles;  // canonical order
  std::vector<CandidateOrigin> origins;
  std::size_t generated = 0;  // before the elementary filter and deduplication

  std::size_t size() const noexcept { return cycles.size(); }
  bool empty() const noexcept { return cycles.empty(); }
};

namespace detail {

class CandidateCollector {
 public:
  explicit CandidateCollector(const EdgeUniverse& universe) : universe_(universe) {}

  void offer(std::vector<EdgeId>& parts, const CandidateOrigin& origin) {
    ++generated_;
    std::sort(parts.begin(), parts.end());
    if (std::adjacent_find(parts.begin(), parts.end()) != parts.end()) return;  // overlapping parts
    Cycle c = Cycle::from_edges(universe_.edge_count(), parts);
    if (!is_elementary(universe_, c)) return;
    if (!seen_.insert(c.edges()).second) return;
    found_.emplace_back(std::move(c), origin);
  }

  CandidateList finish() && {
    std::stable_sort(found_.begin(), found_.end(),
                     [](const auto& a, const auto& b) { return canonical_less(a.first, b.first); });
    CandidateList out;
    out.generated = generated_;
    for (auto& [cycle, origin] : found_) {
      out.cycles.push_back(std::move(cycle));
      out.origins.push_back(origin);
    }
    return out;
  }

 private:
  const EdgeUniverse& universe_;
  std::unordered_set<BitVec, BitVecHash> seen_;
  std::vector<std::pair<Cycle, CandidateOrigin>> found_;
  std::size_t generated_ = 0;
};

inline void append(std::vector<EdgeId>& out, const std::vector<EdgeId>& more) { out.insert(out.end(), more.begin(), more.end()); }

}  // namespace detail

/// Candidate cycles of a graph built from shortest paths:
///  - odd rule: for each vertex u and edge (v,w): (v,w) + SP(u,v) + SP(u,w);
///  - even rule: for each pair of distinct edges (a,b),(c,d): both
///    (a,b) + (c,d) + SP(a,c) + SP(b,d) and (a,b) + (c,d) + SP(a,d) + SP(b,c);
/// keeping only elementary cycles. Pairs in different components are skipped.
inline CandidateList candidates_of_graph(const Graph& g) {
  const EdgeUniverse& universe = g.universe();
  const ShortestPathIndex paths(g);
  const std::vector<EdgeId> edges = g.edge_set().ones();
  detail::CandidateCollector collect(universe);
  std::vector<EdgeId> parts;

  for (VertexId u = 0; u < g.vertex_count(); ++u) {
    for (EdgeId e : edges) {
      const Edge& vw = universe.edge(e);
      if (!paths.reachable(u, vw.u) || !paths.reachable(u, vw.v)) continue;
      parts.assign(1, e);
      detail::append(parts, paths.path_edges(u, vw.u));
      detail::append(parts, paths.path_edges(u, vw.v));
      collect.offer(parts, {CandidateOrigin::Rule::odd, u, e, 0, 0});
    }
  }

  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      const Edge& ab = universe.edge(edges[i]);
      const Edge& cd = universe.edge(edges[j]);
      const std::pair<VertexId, VertexId> joins[2][2] = {{{ab.u, cd.u}, {ab.v, cd.v}}, {{ab.u, cd.v}, {ab.v, cd.u}}};
      for (int pairing = 0; pairing < 2; ++pairing) {
        const auto& [p, q] = joins[pairing];
        if (!paths.reachable(p.first, p.second) || !paths.reachable(q.first, q.second)) continue;
        parts.assign({edges[i], edges[j]});
        detail::append(parts, paths.path_edges(p.first, p.second));
        detail::append(parts, paths.path_edges(q.first, q.second));
        collect.offer(parts, {CandidateOrigin::Rule::even, 0, edges[i], edges[j], pairing});
      }
    }
  }
  return std::move(collect).finish();
}

/// The candidate list of an instance: candidates of its intersection graph.
inline CandidateList candidates_list(const Instance& instance) { return candidates_of_graph(intersection_graph(instance)); }

/// Sublist of weight exactly `weight`, order preserved.
inline CandidateList filter_by_weight(const CandidateList& list, std::size_t weight) {
  CandidateList out;
  out.generated = list.generated;
  for (std::size_t i = 0; i < list.size(); ++i) {
    if (list.cycles[i].weight() != weight) continue;
    out.cycles.push_back(list.cycles[i]);
    out.origins.push_back(list.origins[i]);
  }
  return out;
}

inline std::string describe_origin(const EdgeUniverse& universe, const CandidateOrigin& origin) {
  auto edge_text = [&](EdgeId id) {
    const Edge& e = universe.edge(id);
    return "(" + std::to_string(e.u + 1) + "," + std::to_string(e.v + 1) + ")";
  };
  if (origin.rule == CandidateOrigin::Rule::odd)
    return "odd u=" + std::to_string(origin.apex + 1) + " e=" + edge_text(origin.first);
  return "even e=" + edge_text(origin.first) + " f=" + edge_text(origin.second) +
         " pairing=" + std::to_string(origin.pairing + 1);
}

}  // namespace mcbi
