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

// Solvers over the restricted matroids M(G_i)|L, where L is the candidate
// list of the instance. A solution is a set of candidates independent in
// every M(G_i)|L, i.e. contained in some minimum cycle basis of each graph.

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <deque>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <unordered_set>
#include <vector>

#include "mcbi/budget.hpp"
#include "mcbi/cycle_space.hpp"
#include "mcbi/errors.hpp"
#include "mcbi/report.hpp"
#include "mcbi/special_cases.hpp"

namespace mcbi {

/// Called after each augmentation of solve_k2 with the current solution
/// (sorted candidate indices).
using AugmentationObserver = std::function<void(const std::vector<std::size_t>&)>;

/// Maximum common independent set of the two restricted matroids by
/// shortest augmenting paths in the exchange graph.
inline SolveReport solve_k2(const SolveContext& ctx, const AugmentationObserver& observer = {}) {
  const auto started = std::chrono::steady_clock::now();
  if (ctx.graph_count() != 2)
    throw PreconditionError("solve_k2: needs exactly 2 graphs, instance has " + std::to_string(ctx.graph_count()));
  const RestrictedMatroid& m1 = ctx.matroid(0);
  const RestrictedMatroid& m2 = ctx.matroid(1);
  const std::size_t n = ctx.candidates().size();

  std::vector<char> in_b(n, 0);
  std::size_t rounds = 0;
  auto current = [&] {
    std::vector<std::size_t> ids;
    for (std::size_t i = 0; i < n; ++i)
      if (in_b[i]) ids.push_back(i);
    return ids;
  };
  auto exchanged = [](std::vector<std::size_t> ids, std::size_t out, std::size_t in) {
    ids.erase(std::find(ids.begin(), ids.end(), out));
    ids.push_back(in);
    return ids;
  };
  auto added = [](std::vector<std::size_t> ids, std::size_t in) {
    ids.push_back(in);
    return ids;
  };

  while (true) {
    const std::vector<std::size_t> b = current();
    std::vector<char> sink(n, 0);
    constexpr std::size_t none = static_cast<std::size_t>(-1);
    std::vector<std::size_t> parent(n, none);
    std::vector<char> seen(n, 0);
    std::deque<std::size_t> queue;
    for (std::size_t y = 0; y < n; ++y) {
      if (in_b[y]) continue;
      if (m1.independent(added(b, y))) {
        seen[y] = 1;
        queue.push_back(y);
      }
    }
    std::size_t target = none;
    // Sinks are tested when a vertex is reached, so the first hit is nearest.
    auto is_sink = [&](std::size_t y) { return !in_b[y] && m2.independent(added(b, y)); };
    for (std::size_t y : queue)
      if (target == none && is_sink(y)) target = y;
    while (target == none && !queue.empty()) {
      const std::size_t a = queue.front();
      queue.pop_front();
      for (std::size_t z = 0; z < n && target == none; ++z) {
        if (seen[z] || in_b[z] == in_b[a]) continue;
        // x -> y when B - x + y is independent in M1; y -> x when in M2.
        const bool arc = in_b[a] ? m1.independent(exchanged(b, a, z)) : m2.independent(exchanged(b, z, a));
        if (!arc) continue;
        seen[z] = 1;
        parent[z] = a;
        queue.push_back(z);
        if (is_sink(z)) target = z;
      }
    }
    if (target == none) break;
    for (std::size_t v = target; v != none; v = parent[v]) in_b[v] ^= 1;
    ++rounds;
    if (observer) observer(current());
  }

  auto report = detail::make_report(ctx, "k2", detail::pick(ctx.candidates(), current()), started);
  report.augmentations = rounds;
  return report;
}

/// Scan L in canonical order, keeping each candidate that stays independent
/// in every graph. Exact for k = 1, a 1/k approximation in general.
inline SolveReport solve_greedy(const SolveContext& ctx) {
  const auto started = std::chrono::steady_clock::now();
  std::vector<std::size_t> chosen;
  for (std::size_t c = 0; c < ctx.candidates().size(); ++c) {
    chosen.push_back(c);
    if (!ctx.feasible(chosen)) chosen.pop_back();
  }
  auto report = detail::make_report(ctx, "greedy", detail::pick(ctx.candidates(), chosen), started);
  report.approximate = ctx.graph_count() > 1;
  return report;
}

namespace detail {

// Advances ids to the next size-|ids| combination of [0, n) in lexicographic order.
inline bool next_combination(std::vector<std::size_t>& ids, std::size_t n) {
  const std::size_t k = ids.size();
  for (std::size_t i = k; i-- > 0;) {
    if (ids[i] < n - k + i) {
      ++ids[i];
      for (std::size_t j = i + 1; j < k; ++j) ids[j] = ids[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace detail

/// Decision version for a fixed K: the first size-K subset of L (in
/// lexicographic order of indices) independent in every graph, or a negative
/// answer after all C(|L|, K) subsets were rejected.
inline SolveReport solve_xp(const SolveContext& ctx, std::size_t target) {
  const auto started = std::chrono::steady_clock::now();
  const std::size_t n = ctx.candidates().size();
  std::optional<std::vector<std::size_t>> found;
  if (target == 0) {
    found.emplace();
  } else if (target <= n) {
    std::vector<std::size_t> ids(target);
    for (std::size_t i = 0; i < target; ++i) ids[i] = i;
    do {
      if (ctx.feasible(ids)) {
        found = ids;
        break;
      }
    } while (detail::next_combination(ids, n));
  }
  auto report = detail::make_report(ctx, "xp", found ? detail::pick(ctx.candidates(), *found) : std::vector<Cycle>{},
                                    started);
  report.target = target;
  report.answer = found.has_value();
  return report;
}

/// Exact optimum over L by descending-size search. Infeasible prefixes are
/// not extended, which is exhaustive because independence is closed under
/// subsets. Returns the lexicographically first optimum.
inline SolveReport solve_bruteforce(const SolveContext& ctx, const EnumerationBudget& budget = {}) {
  const auto started = std::chrono::steady_clock::now();
  const std::size_t n = ctx.candidates().size();
  if (n > budget.max_candidates)
    throw BudgetExceeded("solve_bruteforce: " + std::to_string(n) + " candidates exceed the budget of " +
                         std::to_string(budget.max_candidates));
  std::size_t bound = std::min(n, rank_of(ctx.candidates().cycles, ctx.instance().universe().edge_count()));
  for (const GraphStats& s : ctx.stats().graphs) bound = std::min(bound, s.nu);

  std::vector<std::size_t> best;
  std::vector<std::size_t> prefix;
  std::function<bool(std::size_t, std::size_t)> extend = [&](std::size_t from, std::size_t size) -> bool {
    if (prefix.size() == size) {
      best = prefix;
      return true;
    }
    for (std::size_t c = from; c + (size - prefix.size()) <= n; ++c) {
      prefix.push_back(c);
      if (ctx.feasible(prefix) && extend(c + 1, size)) return true;
      prefix.pop_back();
    }
    return false;
  };
  for (std::size_t size = bound + 1; size-- > 0;) {
    prefix.clear();
    if (extend(0, size)) break;
  }
  return detail::make_report(ctx, "brute", detail::pick(ctx.candidates(), best), started);
}

/// For maximum degree <= 2 every graph is a disjoint union of cycles and paths
/// with a unique minimum cycle basis; the answer is the cycles shared by all.
inline std::vector<Cycle> component_cycles(const Graph& g) {
  const auto labels = g.component_labels();
  const std::size_t count = labels.empty() ? 0 : *std::max_element(labels.begin(), labels.end()) + 1;
  std::vector<BitVec> edges(count, g.universe().empty_set());
  std::vector<std::size_t> vertices(count, 0), bad(count, 0);
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    ++vertices[labels[v]];
    if (g.degree(v) != 2) ++bad[labels[v]];
    for (const Neighbor& nb : g.neighbors(v)) edges[labels[v]].set(nb.edge);
  }
  std::vector<Cycle> out;
  for (std::size_t c = 0; c < count; ++c)
    if (bad[c] == 0 && vertices[c] >= 3) out.emplace_back(edges[c]);
  sort_canonical(out);
  return out;
}

inline SolveReport solve_max_degree2(const SolveContext& ctx) {
  const auto started = std::chrono::steady_clock::now();
  if (ctx.stats().delta > 2)
    throw PreconditionError("solve_max_degree2: maximum degree " + std::to_string(ctx.stats().delta) + " > 2");
  std::vector<Cycle> common = component_cycles(ctx.instance().graph(0));
  for (std::size_t i = 1; i < ctx.graph_count(); ++i) {
    const auto mine = component_cycles(ctx.instance().graph(i));
    std::erase_if(common, [&](const Cycle& c) { return std::find(mine.begin(), mine.end(), c) == mine.end(); });
  }
  return detail::make_report(ctx, "max-degree-2", std::move(common), started);
}

/// Dispatch on the instance parameters: max degree 2, gamma 3, gamma 4 with
/// max degree 3, k = 2, a given K, and otherwise the greedy approximation.
inline SolveReport solve_auto(const SolveContext& ctx, std::optional<std::size_t> target = std::nullopt) {
  const InstanceStats& s = ctx.stats();
  SolveReport report;
  if (s.delta <= 2)
    report = solve_max_degree2(ctx);
  else if (s.gamma <= 3)
    report = solve_gamma3(ctx);
  else if (s.gamma <= 4 && s.delta <= 3)
    report = solve_gamma4_delta3(ctx);
  else if (s.k == 2)
    report = solve_k2(ctx);
  else if (target)
    return solve_xp(ctx, *target);
  else
    return solve_greedy(ctx);
  if (target) {
    report.target = target;
    report.answer = report.size() >= *target;
  }
  return report;
}

/// solve_gamma3 or solve_gamma4_delta3, whichever applies.
inline SolveReport solve_special(const SolveContext& ctx) {
  return ctx.stats().gamma <= 3 ? solve_gamma3(ctx) : solve_gamma4_delta3(ctx);
}

struct Verdict {
  bool feasible = true;
  std::optional<std::size_t> failing_graph;
  std::string reason;
};

/// Checks that every cycle lies in every graph and that the set is
/// contained in a minimum cycle basis of each graph. Malformed cycles (zero,
/// odd degrees, wrong universe) throw std::invalid_argument.
inline Verdict verify(const Instance& instance, std::span<const Cycle> cycles) {
  const EdgeUniverse& universe = instance.universe();
  for (const Cycle& c : cycles) {
    if (c.dimension() != universe.edge_count()) throw std::invalid_argument("verify: cycle over a different universe");
    if (c.is_zero()) throw std::invalid_argument("verify: empty cycle");
    if (!is_cycle(universe, c.edges())) throw std::invalid_argument("verify: edge set is not a cycle");
  }
  Verdict v;
  std::unordered_set<BitVec, BitVecHash> distinct;
  for (const Cycle& c : cycles) {
    if (!distinct.insert(c.edges()).second) {
      v.feasible = false;
      v.reason = "cycle listed twice";
      return v;
    }
  }
  for (std::size_t i = 0; i < instance.graph_count(); ++i) {
    const Graph& g = instance.graph(i);
    for (std::size_t j = 0; j < cycles.size(); ++j) {
      if (!cycles[j].edges().is_subset_of(g.edge_set())) {
        v.feasible = false;
        v.failing_graph = i;
        v.reason = "cycle " + std::to_string(j + 1) + " uses an edge absent from graph '" + instance.name(i) + "'";
        return v;
      }
    }
    if (!is_independent_in_mcb(g, cycles)) {
      v.feasible = false;
      v.failing_graph = i;
      v.reason = "no minimum cycle basis of graph '" + instance.name(i) + "' contains the cycles";
      return v;
    }
  }
  return v;
}

}  // namespace mcbi
