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
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "mcbi/bitvec.hpp"
#include "mcbi/graph.hpp"

namespace mcbi {

/// An element of the GF(2) cycle space: an edge set over the universe with
/// its weight (edge count) cached. The zero vector is a valid value.
class Cycle {
 public:
  Cycle() = default;
  explicit Cycle(BitVec edges) : edges_(std::move(edges)), weight_(edges_.count()) {}

  static Cycle zero(std::size_t dim) { return Cycle(BitVec(dim)); }

  static Cycle from_edges(std::size_t dim, std::span<const EdgeId> ids) {
    BitVec bits(dim);
    for (EdgeId id : ids) bits.flip(id);
    return Cycle(std::move(bits));
  }

  const BitVec& edges() const noexcept { return edges_; }
  std::size_t weight() const noexcept { return weight_; }
  std::size_t dimension() const noexcept { return edges_.size(); }
  bool is_zero() const noexcept { return weight_ == 0; }
  std::vector<EdgeId> edge_ids() const { return edges_.ones(); }

  friend bool operator==(const Cycle& a, const Cycle& b) { return a.edges_ == b.edges_; }

 private:
  BitVec edges_;
  std::size_t weight_ = 0;
};

/// Canonical cycle order: by weight, then lexicographically by edge ids.
inline bool canonical_less(const Cycle& a, const Cycle& b) {
  if (a.weight() != b.weight()) return a.weight() < b.weight();
  return lex_less(a.edges(), b.edges());
}

struct CanonicalLess {
  bool operator()(const Cycle& a, const Cycle& b) const { return canonical_less(a, b); }
};

struct CycleHash {
  std::size_t operator()(const Cycle& c) const noexcept { return c.edges().hash(); }
};

inline void sort_canonical(std::vector<Cycle>& cycles) { std::sort(cycles.begin(), cycles.end(), CanonicalLess{}); }

/// Symmetric difference of two edge sets.
inline Cycle cycle_sum(const Cycle& a, const Cycle& b) { return Cycle(a.edges() ^ b.edges()); }

inline Cycle sum_of(std::span<const Cycle> cycles, std::size_t dim) {
  BitVec acc(dim);
  for (const Cycle& c : cycles) acc ^= c.edges();
  return Cycle(std::move(acc));
}

namespace detail {

inline std::vector<std::size_t> degrees(const EdgeUniverse& universe, const BitVec& edges) {
  if (edges.size() != universe.edge_count()) throw std::invalid_argument("edge vector over a different universe");
  std::vector<std::size_t> deg(universe.vertex_count(), 0);
  for (EdgeId id = edges.find_first(); id != BitVec::npos; id = edges.find_next(id)) {
    const Edge& e = universe.edge(id);
    ++deg[e.u];
    ++deg[e.v];
  }
  return deg;
}

}  // namespace detail

/// True iff every vertex has even degree in the edge set.
inline bool is_cycle(const EdgeUniverse& universe, const BitVec& edges) {
  auto deg = detail::degrees(universe, edges);
  return std::all_of(deg.begin(), deg.end(), [](std::size_t d) { return d % 2 == 0; });
}

/// True iff the edge set is connected and every vertex on it has degree 2.
inline bool is_elementary(const EdgeUniverse& universe, const Cycle& c) {
  if (c.is_zero()) throw std::invalid_argument("is_elementary: zero vector");
  auto deg = detail::degrees(universe, c.edges());
  std::size_t vertices = 0;
  for (std::size_t d : deg) {
    if (d != 0 && d != 2) return false;
    if (d == 2) ++vertices;
  }
  // 2-regular: connected iff one walk covers all edges.
  auto ids = c.edge_ids();
  const Edge& first = universe.edge(ids.front());
  const VertexId start = first.u;
  VertexId cur = first.v;
  std::size_t walked = 1;
  EdgeId came_by = ids.front();
  while (cur != start) {
    EdgeId next = BitVec::npos;
    for (EdgeId id : ids) {
      if (id == came_by) continue;
      const Edge& e = universe.edge(id);
      if (e.u == cur || e.v == cur) {
        next = id;
        break;
      }
    }
    const Edge& e = universe.edge(next);
    cur = (e.u == cur) ? e.v : e.u;
    came_by = next;
    ++walked;
  }
  return walked == ids.size() && walked == vertices;
}

/// Incrementally maintained row-echelon basis over GF(2). Every row remembers
/// which of the inserted (original) vectors it is the sum of, so span queries
/// can report a witness subset of the originals.
class GF2Basis {
 public:
  explicit GF2Basis(std::size_t dim) : dim_(dim) {}

  struct Reduction {
    BitVec residual;
    BitVec combination;  // over original indices
  };

  std::size_t dimension() const noexcept { return dim_; }
  std::size_t rank() const noexcept { return rows_.size(); }
  const std::vector<Cycle>& originals() const noexcept { return originals_; }
  std::size_t pivot(std::size_t row) const { return pivots_.at(row); }
  const BitVec& row(std::size_t r) const { return rows_.at(r); }

  Reduction reduce(const BitVec& v) const {
    if (v.size() != dim_) throw std::invalid_argument("GF2Basis: dimension mismatch");
    Reduction out{v, BitVec(originals_.size())};
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      if (out.residual.test(pivots_[r])) {
        out.residual ^= rows_[r];
        out.combination.xor_grow(combos_[r]);
      }
    }
    return out;
  }

  bool spans(const BitVec& v) const {
    if (v.size() != dim_) throw std::invalid_argument("GF2Basis: dimension mismatch");
    BitVec residual = v;
    for (std::size_t r = 0; r < rows_.size(); ++r)
      if (residual.test(pivots_[r])) residual ^= rows_[r];
    return residual.none();
  }
  bool spans(const Cycle& c) const { return spans(c.edges()); }

  /// Inserts c when it is independent of the current rows; returns whether it
  /// was inserted. The zero vector is never a basis member.
  bool insert(const Cycle& c) {
    if (c.is_zero()) throw std::invalid_argument("GF2Basis: zero vector cannot be a basis member");
    Reduction red = reduce(c.edges());
    if (red.residual.none()) return false;
    red.combination.resize(originals_.size() + 1);
    red.combination.set(originals_.size());
    pivots_.push_back(red.residual.find_first());
    rows_.push_back(std::move(red.residual));
    combos_.push_back(std::move(red.combination));
    originals_.push_back(c);
    return true;
  }

  /// Indices of the originals summing to v, or nullopt when v is not spanned.
  std::optional<std::vector<std::size_t>> witness(const BitVec& v) const {
    Reduction red = reduce(v);
    if (red.residual.any()) return std::nullopt;
    return red.combination.ones();
  }

 private:
  std::size_t dim_;
  std::vector<BitVec> rows_;
  std::vector<std::size_t> pivots_;
  std::vector<BitVec> combos_;
  std::vector<Cycle> originals_;
};

/// Linear independence over GF(2). The empty set is independent; a set
/// containing the zero vector is not.
inline bool independent(std::span<const Cycle> cycles) {
  if (cycles.empty()) return true;
  GF2Basis basis(cycles.front().dimension());
  for (const Cycle& c : cycles) {
    if (c.is_zero() || !basis.insert(c)) return false;
  }
  return true;
}

inline std::size_t rank_of(std::span<const Cycle> cycles, std::size_t dim) {
  GF2Basis basis(dim);
  for (const Cycle& c : cycles)
    if (!c.is_zero()) basis.insert(c);
  return basis.rank();
}

struct SpanMembership {
  bool member = false;
  std::vector<Cycle> witness;  // subset of the basis originals summing to c
};

inline SpanMembership span_contains(const GF2Basis& basis, const Cycle& c) {
  SpanMembership out;
  auto ids = basis.witness(c.edges());
  if (!ids) return out;
  out.member = true;
  for (std::size_t i : *ids) out.witness.push_back(basis.originals()[i]);
  return out;
}

/// Coefficient of basis member c in the unique representation of d over the
/// independent ordered set basis.
inline int lambda(std::span<const Cycle> basis, const Cycle& c, const Cycle& d) {
  if (basis.empty()) throw std::invalid_argument("lambda: empty basis");
  auto pos = std::find(basis.begin(), basis.end(), c);
  if (pos == basis.end()) throw std::invalid_argument("lambda: c is not a member of the basis");
  GF2Basis echelon(basis.front().dimension());
  for (const Cycle& b : basis)
    if (!echelon.insert(b)) throw std::invalid_argument("lambda: basis is not linearly independent");
  auto ids = echelon.witness(d.edges());
  if (!ids) throw std::invalid_argument("lambda: d is not spanned by the basis");
  const auto index = static_cast<std::size_t>(pos - basis.begin());
  return std::binary_search(ids->begin(), ids->end(), index) ? 1 : 0;
}

}  // namespace mcbi
