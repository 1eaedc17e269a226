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

// Minimum cycle bases (Horton) and the independence oracle of the matroid
// whose independent sets are the subsets of some minimum cycle basis.
//
// The oracle runs Horton's greedy on D + candidates, sorted by weight with
// the query cycles of D ahead of candidates of equal weight; D is independent
// iff every member of D is kept.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <span>
#include <stdexcept>
#include <unordered_set>
#include <utility>
#include <vector>

#include "mcbi/cycle_space.hpp"
#include "mcbi/graph.hpp"
#include "mcbi/shortest_paths.hpp"

namespace mcbi {

struct HortonCandidate {
  Cycle cycle;
  VertexId root = 0;
  EdgeId edge = 0;
};

/// Cycles path(v,x) + (x,y) + path(v,y) for every root v and edge (x,y) of the
/// root's component, dropping combinations whose parts share an edge.
/// Deduplicated (first origin kept) and sorted canonically.
inline std::vector<HortonCandidate> horton_candidates(const Graph& g, const ShortestPathIndex& paths) {
  const EdgeUniverse& universe = g.universe();
  const std::size_t dim = universe.edge_count();
  std::vector<HortonCandidate> out;
  std::unordered_set<BitVec, BitVecHash> seen;
  std::vector<EdgeId> parts;
  for (VertexId root = 0; root < g.vertex_count(); ++root) {
    for (EdgeId e = g.edge_set().find_first(); e != BitVec::npos; e = g.edge_set().find_next(e)) {
      const Edge& xy = universe.edge(e);
      if (!paths.reachable(root, xy.u) || !paths.reachable(root, xy.v)) continue;
      parts = paths.path_edges(root, xy.u);
      auto py = paths.path_edges(root, xy.v);
      parts.insert(parts.end(), py.begin(), py.end());
      parts.push_back(e);
      std::sort(parts.begin(), parts.end());
      if (std::adjacent_find(parts.begin(), parts.end()) != parts.end()) continue;
      Cycle c = Cycle::from_edges(dim, parts);
      if (!is_cycle(universe, c.edges())) continue;
      if (!seen.insert(c.edges()).second) continue;
      out.push_back({std::move(c), root, e});
    }
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const HortonCandidate& a, const HortonCandidate& b) { return canonical_less(a.cycle, b.cycle); });
  return out;
}

inline std::vector<HortonCandidate> horton_candidates(const Graph& g) {
  return horton_candidates(g, ShortestPathIndex(g));
}

struct BasisProvenance {
  enum class Kind { candidate, query };
  Kind kind = Kind::candidate;
  VertexId root = 0;           // candidate origin
  EdgeId edge = 0;             // candidate origin
  std::size_t query_index = 0; // position in the query set
};

struct MCBResult {
  std::vector<Cycle> basis;
  std::size_t total_weight = 0;
  std::vector<BasisProvenance> provenance;

  std::size_t size() const noexcept { return basis.size(); }

  /// Weights sorted ascending.
  std::vector<std::size_t> weight_profile() const {
    std::vector<std::size_t> w;
    for (const Cycle& c : basis) w.push_back(c.weight());
    std::sort(w.begin(), w.end());
    return w;
  }

  std::size_t max_weight() const noexcept {
    std::size_t m = 0;
    for (const Cycle& c : basis) m = std::max(m, c.weight());
    return m;
  }
};

struct HortonOptions {
  /// When set, candidates of equal weight are scanned in a seeded random
  /// order instead of canonical order.
  std::optional<std::uint64_t> tie_seed;
};

/// Per-graph Horton machinery: shortest paths and sorted candidates are
/// computed once; each query replays the greedy. Immutable after
/// construction, so concurrent queries are safe.
class MinimumCycleBasisOracle {
 public:
  explicit MinimumCycleBasisOracle(Graph g, HortonOptions options = {})
      : graph_(std::move(g)), candidates_(horton_candidates(graph_)), rank_(graph_.cycle_space_dimension()) {
    if (options.tie_seed) {
      std::mt19937_64 rng(*options.tie_seed);
      auto first = candidates_.begin();
      while (first != candidates_.end()) {
        auto last = std::find_if(first, candidates_.end(), [&](const HortonCandidate& c) {
          return c.cycle.weight() != first->cycle.weight();
        });
        std::shuffle(first, last, rng);
        first = last;
      }
    }
  }

  const Graph& graph() const noexcept { return graph_; }
  const std::vector<HortonCandidate>& candidates() const noexcept { return candidates_; }
  std::size_t cycle_space_dimension() const noexcept { return rank_; }

  MCBResult minimum_cycle_basis() const { return run({}, false).result; }

  /// True iff some minimum cycle basis of the graph contains every cycle of
  /// queries. A repeated query cycle makes the set dependent.
  bool is_independent(std::span<const Cycle> queries) const {
    validate(queries);
    return run(queries, true).all_queries_kept;
  }

  /// A full minimum cycle basis containing queries.
  MCBResult witness_basis(std::span<const Cycle> queries) const {
    validate(queries);
    Outcome out = run(queries, false);
    if (!out.all_queries_kept) throw std::invalid_argument("witness_basis: query set is not contained in any minimum cycle basis");
    return std::move(out.result);
  }

 private:
  struct Outcome {
    MCBResult result;
    bool all_queries_kept = true;
  };

  void validate(std::span<const Cycle> queries) const {
    const EdgeUniverse& universe = graph_.universe();
    for (const Cycle& d : queries) {
      if (d.dimension() != universe.edge_count()) throw std::invalid_argument("query cycle over a different universe");
      if (d.is_zero()) throw std::invalid_argument("query cycle is the zero vector");
      if (!is_cycle(universe, d.edges())) throw std::invalid_argument("query vector is not a cycle");
      if (!d.edges().is_subset_of(graph_.edge_set())) throw std::invalid_argument("query cycle uses an edge outside the graph");
    }
  }

  // The greedy over queries + candidates. With stop_after_queries the scan
  // ends once the verdict on the queries is known, which does not change it.
  Outcome run(std::span<const Cycle> queries, bool stop_after_queries) const {
    std::vector<std::size_t> qorder(queries.size());
    std::iota(qorder.begin(), qorder.end(), std::size_t{0});
    std::stable_sort(qorder.begin(), qorder.end(),
                     [&](std::size_t a, std::size_t b) { return canonical_less(queries[a], queries[b]); });

    Outcome out;
    if (stop_after_queries && queries.empty()) return out;
    GF2Basis basis(graph_.universe().edge_count());
    std::size_t qi = 0, ci = 0;
    while (basis.rank() < rank_ && (qi < qorder.size() || ci < candidates_.size())) {
      const bool take_query =
          qi < qorder.size() &&
          (ci == candidates_.size() || queries[qorder[qi]].weight() <= candidates_[ci].cycle.weight());
      if (take_query) {
        const Cycle& d = queries[qorder[qi]];
        if (basis.insert(d)) {
          out.result.basis.push_back(d);
          out.result.provenance.push_back({BasisProvenance::Kind::query, 0, 0, qorder[qi]});
        } else {
          out.all_queries_kept = false;
          if (stop_after_queries) return out;
        }
        ++qi;
        if (stop_after_queries && qi == qorder.size()) return out;
      } else {
        const HortonCandidate& c = candidates_[ci++];
        if (basis.insert(c.cycle)) {
          out.result.basis.push_back(c.cycle);
          out.result.provenance.push_back({BasisProvenance::Kind::candidate, c.root, c.edge, 0});
        }
      }
    }
    if (qi < qorder.size()) out.all_queries_kept = false;
    for (const Cycle& c : out.result.basis) out.result.total_weight += c.weight();
    return out;
  }

  Graph graph_;
  std::vector<HortonCandidate> candidates_;
  std::size_t rank_;
};

inline MCBResult minimum_cycle_basis(const Graph& g, HortonOptions options = {}) {
  return MinimumCycleBasisOracle(g, options).minimum_cycle_basis();
}

inline bool is_independent_in_mcb(const Graph& g, std::span<const Cycle> queries) {
  return MinimumCycleBasisOracle(g).is_independent(queries);
}

inline MCBResult witness_basis(const Graph& g, std::span<const Cycle> queries) {
  return MinimumCycleBasisOracle(g).witness_basis(queries);
}

}  // namespace mcbi
