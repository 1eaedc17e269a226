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

// Exhaustive reference computations for tiny inputs. Nothing here uses the
// Horton candidate set or shortest paths to enumerate cycles: the cycle space
// is generated from a spanning-forest fundamental basis.

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <memory>
#include <string>
#include <vector>

#include "mcbi/budget.hpp"
#include "mcbi/cycle_space.hpp"
#include "mcbi/errors.hpp"
#include "mcbi/graph.hpp"
#include "mcbi/horton.hpp"
#include "mcbi/instances.hpp"

namespace mcbi {

/// Fundamental cycles of a DFS spanning forest: one per non-tree edge.
inline std::vector<Cycle> fundamental_cycles(const Graph& g) {
  const std::size_t n = g.vertex_count();
  const std::size_t dim = g.universe().edge_count();
  constexpr std::size_t none = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> parent_edge(n, none), parent(n, none), depth(n, none);
  BitVec tree(dim);
  for (VertexId s = 0; s < n; ++s) {
    if (depth[s] != none) continue;
    depth[s] = 0;
    std::vector<VertexId> stack{s};
    while (!stack.empty()) {
      VertexId x = stack.back();
      stack.pop_back();
      for (const Neighbor& nb : g.neighbors(x)) {
        if (depth[nb.vertex] != none) continue;
        depth[nb.vertex] = depth[x] + 1;
        parent[nb.vertex] = x;
        parent_edge[nb.vertex] = nb.edge;
        tree.set(nb.edge);
        stack.push_back(nb.vertex);
      }
    }
  }
  std::vector<Cycle> out;
  for (EdgeId e = g.edge_set().find_first(); e != BitVec::npos; e = g.edge_set().find_next(e)) {
    if (tree.test(e)) continue;
    BitVec bits(dim);
    bits.set(e);
    VertexId a = g.universe().edge(e).u, b = g.universe().edge(e).v;
    while (a != b) {
      if (depth[a] < depth[b]) std::swap(a, b);
      bits.flip(parent_edge[a]);
      a = parent[a];
    }
    out.emplace_back(std::move(bits));
  }
  return out;
}

namespace detail {

inline void require_dimension(const Graph& g, const EnumerationBudget& budget, const char* who) {
  const std::size_t nu = g.cycle_space_dimension();
  if (nu > budget.max_cycle_space_dimension)
    throw BudgetExceeded(std::string(who) + ": cycle space dimension " + std::to_string(nu) + " exceeds the budget of " +
                         std::to_string(budget.max_cycle_space_dimension));
}

}  // namespace detail

/// Every nonzero vector of the cycle space (2^nu - 1 of them), canonical order.
inline std::vector<Cycle> all_cycles(const Graph& g, const EnumerationBudget& budget = {}) {
  detail::require_dimension(g, budget, "all_cycles");
  const auto basis = fundamental_cycles(g);
  const std::size_t dim = g.universe().edge_count();
  std::vector<Cycle> out;
  const std::uint64_t total = std::uint64_t{1} << basis.size();
  for (std::uint64_t mask = 1; mask < total; ++mask) {
    BitVec acc(dim);
    for (std::size_t i = 0; i < basis.size(); ++i)
      if (mask >> i & 1U) acc ^= basis[i].edges();
    out.emplace_back(std::move(acc));
  }
  sort_canonical(out);
  return out;
}

struct MCBEnumeration {
  std::vector<Cycle> cycles;                   // all_cycles(g)
  std::vector<std::vector<std::size_t>> bases; // indices into cycles, each sorted
  std::size_t weight = 0;                      // common minimum weight
};

/// All minimum cycle bases: every linearly independent nu-subset of the cycle
/// space with minimum total weight. Branches are cut when dependent or when
/// they cannot reach the best weight found so far (ties are kept).
inline MCBEnumeration enumerate_mcbs(const Graph& g, const EnumerationBudget& budget = {}) {
  MCBEnumeration out;
  out.cycles = all_cycles(g, budget);
  const std::size_t nu = g.cycle_space_dimension();
  const std::size_t n = out.cycles.size();
  const std::size_t dim = g.universe().edge_count();
  std::size_t best = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> chosen;
  std::function<void(std::size_t, const GF2Basis&, std::size_t)> dfs = [&](std::size_t from, const GF2Basis& basis,
                                                                           std::size_t weight) {
    if (chosen.size() == nu) {
      if (weight < best) {
        best = weight;
        out.bases.clear();
      }
      out.bases.push_back(chosen);
      return;
    }
    const std::size_t need = nu - chosen.size();
    for (std::size_t i = from; i + need <= n; ++i) {
      std::size_t bound = weight;
      for (std::size_t j = i; j < i + need; ++j) bound += out.cycles[j].weight();
      if (bound > best) break;  // cycles are sorted by weight
      GF2Basis next = basis;
      if (!next.insert(out.cycles[i])) continue;
      chosen.push_back(i);
      dfs(i + 1, next, weight + out.cycles[i].weight());
      chosen.pop_back();
    }
  };
  dfs(0, GF2Basis(dim), 0);
  out.weight = nu == 0 ? 0 : best;
  return out;
}

inline std::vector<std::vector<Cycle>> all_mcbs(const Graph& g, const EnumerationBudget& budget = {}) {
  const auto e = enumerate_mcbs(g, budget);
  std::vector<std::vector<Cycle>> out;
  for (const auto& ids : e.bases) {
    std::vector<Cycle> basis;
    for (std::size_t id : ids) basis.push_back(e.cycles[id]);
    out.push_back(std::move(basis));
  }
  return out;
}

struct FullSpaceOptimum {
  std::size_t size = 0;
  std::vector<Cycle> witness;  // lexicographically first optimum in canonical order
};

/// Maximum common-MCB subset over the entire cycle space of the intersection
/// graph (not just the candidate list).
inline FullSpaceOptimum opt_over_full_space(const Instance& instance, const EnumerationBudget& budget = {}) {
  const Graph common = intersection_graph(instance);
  const auto cycles = all_cycles(common, budget);
  std::vector<std::unique_ptr<MinimumCycleBasisOracle>> oracles;
  for (const Graph& g : instance.graphs()) oracles.push_back(std::make_unique<MinimumCycleBasisOracle>(g));

  std::vector<Cycle> prefix;
  auto feasible = [&] {
    for (const auto& o : oracles)
      if (!o->is_independent(prefix)) return false;
    return true;
  };
  FullSpaceOptimum out;
  std::function<bool(std::size_t, std::size_t)> extend = [&](std::size_t from, std::size_t size) -> bool {
    if (prefix.size() == size) {
      out.size = size;
      out.witness = prefix;
      return true;
    }
    for (std::size_t i = from; i + (size - prefix.size()) <= cycles.size(); ++i) {
      prefix.push_back(cycles[i]);
      if (feasible() && extend(i + 1, size)) return true;
      prefix.pop_back();
    }
    return false;
  };
  for (std::size_t size = common.cycle_space_dimension() + 1; size-- > 0;) {
    prefix.clear();
    if (extend(0, size)) break;
  }
  return out;
}

/// Size of a maximum stable set by subset enumeration.
inline std::size_t max_stable_set(const HostGraph& host, const EnumerationBudget& budget = {}) {
  if (host.n > budget.max_host_vertices)
    throw BudgetExceeded("max_stable_set: " + std::to_string(host.n) + " host vertices exceed the budget of " +
                         std::to_string(budget.max_host_vertices));
  std::size_t best = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << host.n); ++mask) {
    bool stable = true;
    for (const Edge& e : host.edges)
      if ((mask >> e.u & 1U) && (mask >> e.v & 1U)) stable = false;
    if (stable) best = std::max<std::size_t>(best, static_cast<std::size_t>(std::popcount(mask)));
  }
  return best;
}

}  // namespace mcbi
