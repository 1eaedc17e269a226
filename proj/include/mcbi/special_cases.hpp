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

// Exact polynomial solvers for two low-parameter regimes:
//  - every minimum cycle basis is made of triangles (gamma <= 3);
//  - gamma <= 4 with maximum degree 3.
//
// A set of weight-l cycles extends to a minimum cycle basis iff no nonempty
// subset sums into the span of the lighter cycles. For l = 3 the lighter span
// is {0}; for l = 4 it is span(T(G)), the triangles of G. Both tests reduce
// to GF(2) rank updates.

#include <chrono>
#include <cstddef>
#include <string>
#include <vector>

#include "mcbi/candidates.hpp"
#include "mcbi/cycle_space.hpp"
#include "mcbi/errors.hpp"
#include "mcbi/graph.hpp"
#include "mcbi/report.hpp"

namespace mcbi {

/// All triangles of g in canonical order.
inline std::vector<Cycle> triangles_of(const Graph& g) {
  const EdgeUniverse& universe = g.universe();
  std::vector<Cycle> out;
  for (VertexId u = 0; u < g.vertex_count(); ++u) {
    for (const Neighbor& a : g.neighbors(u)) {
      if (a.vertex <= u) continue;
      for (const Neighbor& b : g.neighbors(a.vertex)) {
        if (b.vertex <= a.vertex) continue;
        if (auto closing = universe.find(u, b.vertex); closing && g.has_edge(*closing)) {
          const EdgeId ids[3] = {a.edge, b.edge, *closing};
          out.push_back(Cycle::from_edges(universe.edge_count(), ids));
        }
      }
    }
  }
  sort_canonical(out);
  return out;
}

/// Echelon basis of span(T(G)) for one graph.
class TriangleSpan {
 public:
  explicit TriangleSpan(const Graph& g) : triangles_(triangles_of(g)), basis_(g.universe().edge_count()) {
    for (const Cycle& t : triangles_) basis_.insert(t);
  }

  const std::vector<Cycle>& triangles() const noexcept { return triangles_; }
  const GF2Basis& basis() const noexcept { return basis_; }
  std::size_t rank() const noexcept { return basis_.rank(); }
  bool spans(const Cycle& c) const { return basis_.spans(c); }

 private:
  std::vector<Cycle> triangles_;
  GF2Basis basis_;
};

/// Chosen squares together with, per graph, an echelon basis of
/// span(chosen ∪ T(G_i)). A square is addable iff it lies outside every one
/// of those spans.
class QuotientState {
 public:
  explicit QuotientState(const std::vector<TriangleSpan>& spans) {
    for (const TriangleSpan& s : spans) bases_.push_back(s.basis());
  }

  bool addable(const Cycle& square) const {
    for (const GF2Basis& b : bases_)
      if (b.spans(square)) return false;
    return true;
  }

  void add(const Cycle& square) {
    for (GF2Basis& b : bases_) b.insert(square);
    chosen_.push_back(square);
  }

  const std::vector<Cycle>& chosen() const noexcept { return chosen_; }

 private:
  std::vector<GF2Basis> bases_;
  std::vector<Cycle> chosen_;
};

namespace detail {

inline void require_gamma(const SolveContext& ctx, std::size_t max_gamma, const char* solver) {
  for (const GraphStats& s : ctx.stats().graphs)
    if (s.gamma > max_gamma)
      throw PreconditionError(std::string(solver) + ": graph '" + s.name + "' has gamma " + std::to_string(s.gamma) +
                              " > " + std::to_string(max_gamma));
}

// Linearly independent triangles of the list, scanned in canonical order.
inline std::vector<Cycle> greedy_triangles(const CandidateList& list) {
  std::vector<Cycle> chosen;
  if (list.empty()) return chosen;
  GF2Basis basis(list.cycles.front().dimension());
  for (const Cycle& c : list.cycles)
    if (c.weight() == 3 && basis.insert(c)) chosen.push_back(c);
  return chosen;
}

}  // namespace detail

inline SolveReport solve_gamma3(const SolveContext& ctx) {
  const auto started = std::chrono::steady_clock::now();
  detail::require_gamma(ctx, 3, "solve_gamma3");
  return detail::make_report(ctx, "gamma3", detail::greedy_triangles(ctx.candidates()), started);
}

/// Drops the squares lying in span(T(G_i)) for some graph; other weights are
/// kept untouched.
inline CandidateList remove_triangle_spanned_squares(const CandidateList& list, const std::vector<TriangleSpan>& spans) {
  CandidateList out;
  out.generated = list.generated;
  for (std::size_t i = 0; i < list.size(); ++i) {
    const Cycle& c = list.cycles[i];
    if (c.weight() == 4) {
      bool spanned = false;
      for (const TriangleSpan& s : spans) spanned = spanned || s.spans(c);
      if (spanned) continue;
    }
    out.cycles.push_back(c);
    out.origins.push_back(list.origins[i]);
  }
  return out;
}

inline std::vector<TriangleSpan> triangle_spans(const Instance& instance) {
  std::vector<TriangleSpan> spans;
  for (const Graph& g : instance.graphs()) spans.emplace_back(g);
  return spans;
}

inline CandidateList remove_triangle_spanned_squares(const CandidateList& list, const Instance& instance) {
  return remove_triangle_spanned_squares(list, triangle_spans(instance));
}

/// Triangles as in solve_gamma3, then squares scanned in canonical order and
/// kept while outside span(chosen squares ∪ T(G_i)) for every graph.
inline SolveReport solve_gamma4_delta3(const SolveContext& ctx) {
  const auto started = std::chrono::steady_clock::now();
  for (const GraphStats& s : ctx.stats().graphs)
    if (s.max_degree > 3)
      throw PreconditionError("solve_gamma4_delta3: graph '" + s.name + "' has maximum degree " +
                              std::to_string(s.max_degree) + " > 3");
  detail::require_gamma(ctx, 4, "solve_gamma4_delta3");

  std::vector<Cycle> solution = detail::greedy_triangles(ctx.candidates());
  const auto spans = triangle_spans(ctx.instance());
  const CandidateList squares = remove_triangle_spanned_squares(filter_by_weight(ctx.candidates(), 4), spans);
  QuotientState state(spans);
  for (const Cycle& s : squares.cycles)
    if (state.addable(s)) state.add(s);
  solution.insert(solution.end(), state.chosen().begin(), state.chosen().end());
  return detail::make_report(ctx, "gamma4-delta3", std::move(solution), started);
}

}  // namespace mcbi
