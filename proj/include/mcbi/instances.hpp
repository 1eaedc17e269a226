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

// Instance generators: the CONN gadget, the stable-set reduction (whose
// optimum equals the maximum stable set of the host graph) and seeded random
// trajectories.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "mcbi/errors.hpp"
#include "mcbi/graph.hpp"
#include "mcbi/io.hpp"

namespace mcbi {

/// Simple, loop-free host graph for the stable-set reduction.
struct HostGraph {
  std::size_t n = 0;
  std::vector<Edge> edges;

  HostGraph() = default;
  HostGraph(std::size_t vertices, std::vector<Edge> list) : n(vertices), edges(std::move(list)) {
    std::set<Edge> seen;
    for (Edge& e : edges) {
      e = make_edge(e.u, e.v);
      if (e.v >= n) throw std::invalid_argument("host edge endpoint out of range");
      if (!seen.insert(e).second) throw std::invalid_argument("duplicate host edge");
    }
  }

  static HostGraph path(std::size_t n) {
    std::vector<Edge> e;
    for (std::size_t i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
    return {n, e};
  }
  static HostGraph cycle(std::size_t n) {
    if (n < 3) throw std::invalid_argument("host cycle needs at least 3 vertices");
    HostGraph h = path(n);
    h.edges.push_back({0, n - 1});
    return h;
  }
  static HostGraph star(std::size_t leaves) {
    std::vector<Edge> e;
    for (std::size_t i = 1; i <= leaves; ++i) e.push_back({0, i});
    return {leaves + 1, e};
  }
};

/// "host <n>" (or DIMACS "p edge <n> <m>") followed by "e <u> <v>" lines.
inline HostGraph parse_host(std::istream& in) {
  auto lines = detail::read_lines(in);
  if (lines.empty()) throw ParseError(ParseError::Kind::malformed_header, 0, "empty host file");
  const detail::Line& header = lines.front();
  std::size_t n = 0;
  if (header.tokens.size() == 2 && header.tokens[0] == "host") {
    n = detail::parse_count(header, 1, ParseError::Kind::malformed_header, "vertex count");
  } else if (header.tokens.size() == 4 && header.tokens[0] == "p" && header.tokens[1] == "edge") {
    n = detail::parse_count(header, 2, ParseError::Kind::malformed_header, "vertex count");
  } else {
    throw ParseError(ParseError::Kind::malformed_header, header.number, "expected 'host <n>' or 'p edge <n> <m>'");
  }
  std::vector<Edge> edges;
  std::set<Edge> seen;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& line = lines[i];
    if (line.tokens.front() != "e")
      throw ParseError(ParseError::Kind::malformed_line, line.number, "unexpected token '" + line.tokens.front() + "'");
    Edge e = detail::parse_edge_line(line, n);
    if (!seen.insert(e).second) throw ParseError(ParseError::Kind::duplicate_edge, line.number, "duplicate host edge");
    edges.push_back(e);
  }
  return {n, edges};
}

/// Connector edges between two disjoint cycles of length l (listed in cycle
/// order): (u_i, v_i) for every i and, when l = 4, also (u_i, v_{i+1}).
inline std::vector<Edge> conn(const std::vector<VertexId>& c1, const std::vector<VertexId>& c2, std::size_t l) {
  if (l != 4 && l != 5) throw std::invalid_argument("conn: cycle length must be 4 or 5");
  if (c1.size() != l || c2.size() != l) throw std::invalid_argument("conn: both cycles must have length l");
  for (VertexId a : c1)
    if (std::find(c2.begin(), c2.end(), a) != c2.end()) throw std::invalid_argument("conn: cycles are not disjoint");
  std::vector<Edge> out;
  for (std::size_t i = 0; i < l; ++i) out.push_back(make_edge(c1[i], c2[i]));
  if (l == 4)
    for (std::size_t i = 0; i < l; ++i) out.push_back(make_edge(c1[i], c2[(i + 1) % l]));
  return out;
}

/// Vertices of the node cycle of host vertex v: the block [v*l, v*l + l).
inline std::vector<VertexId> node_cycle_vertices(std::size_t v, std::size_t l) {
  std::vector<VertexId> out(l);
  for (std::size_t i = 0; i < l; ++i) out[i] = v * l + i;
  return out;
}

inline std::vector<Edge> node_cycle_edges(std::size_t v, std::size_t l) {
  const auto vs = node_cycle_vertices(v, l);
  std::vector<Edge> out;
  for (std::size_t i = 0; i < l; ++i) out.push_back(make_edge(vs[i], vs[(i + 1) % l]));
  return out;
}

enum class Grouping { per_edge, per_matching };

struct ReductionSpec {
  HostGraph host;
  std::size_t l = 4;
  Grouping grouping = Grouping::per_edge;
};

/// Color = smallest index free at both endpoints, edges taken in list order.
/// Each color class is a matching.
inline std::vector<std::vector<Edge>> greedy_matching_cover(const HostGraph& host) {
  std::vector<std::set<std::size_t>> used(host.n);
  std::vector<std::vector<Edge>> classes;
  for (const Edge& e : host.edges) {
    std::size_t color = 0;
    while (used[e.u].count(color) || used[e.v].count(color)) ++color;
    used[e.u].insert(color);
    used[e.v].insert(color);
    if (color == classes.size()) classes.emplace_back();
    classes[color].push_back(e);
  }
  return classes;
}

/// One node cycle per host vertex in every graph; each graph connects the node
/// cycles of its host edges (one edge per graph, or one matching per graph)
/// with conn(). When fewer than two graphs carry connectors, a graph of bare
/// node cycles is added so that the intersection is exactly the node cycles.
inline Instance stable_set_instance(const ReductionSpec& spec) {
  if (spec.l != 4 && spec.l != 5) throw std::invalid_argument("stable_set_instance: l must be 4 or 5");
  const std::size_t l = spec.l;
  std::vector<Edge> base;
  for (std::size_t v = 0; v < spec.host.n; ++v) {
    auto c = node_cycle_edges(v, l);
    base.insert(base.end(), c.begin(), c.end());
  }
  std::vector<std::vector<Edge>> groups;
  std::vector<std::string> names;
  auto edge_name = [](const Edge& e) { return std::to_string(e.u + 1) + "-" + std::to_string(e.v + 1); };
  if (spec.grouping == Grouping::per_edge) {
    for (const Edge& e : spec.host.edges) {
      groups.push_back({e});
      names.push_back("edge-" + edge_name(e));
    }
  } else {
    groups = greedy_matching_cover(spec.host);
    for (std::size_t i = 0; i < groups.size(); ++i) names.push_back("matching-" + std::to_string(i + 1));
  }
  if (groups.size() < 2) {
    groups.emplace_back();
    names.push_back("nodes");
  }
  std::vector<std::vector<Edge>> lists;
  for (const auto& group : groups) {
    std::vector<Edge> edges = base;
    for (const Edge& e : group) {
      auto connectors = conn(node_cycle_vertices(e.u, l), node_cycle_vertices(e.v, l), l);
      edges.insert(edges.end(), connectors.begin(), connectors.end());
    }
    lists.push_back(std::move(edges));
  }
  return Instance::from_edge_lists(spec.host.n * l, lists, std::move(names));
}

/// The single-gadget instance: two l-cycles joined by conn().
inline Instance conn_gadget(std::size_t l) {
  std::vector<Edge> edges = node_cycle_edges(0, l);
  for (auto e : node_cycle_edges(1, l)) edges.push_back(e);
  for (auto e : conn(node_cycle_vertices(0, l), node_cycle_vertices(1, l), l)) edges.push_back(e);
  return Instance::from_edge_lists(2 * l, {edges}, {"conn"});
}

namespace detail {

// Uniform double in [0, 1) from the top 53 bits; identical on every platform.
inline double unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

}  // namespace detail

/// A G(n, p) base graph followed by k frames, each flipping every vertex pair
/// independently with probability `perturbation`. Deterministic per seed.
inline Instance random_instance(std::size_t n, double p, std::size_t k, double perturbation, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("random_instance: edge probability must be in [0, 1]");
  if (!(perturbation >= 0.0 && perturbation <= 1.0))
    throw std::invalid_argument("random_instance: perturbation must be in [0, 1]");
  if (k == 0) throw std::invalid_argument("random_instance: k must be at least 1");
  std::mt19937_64 rng(seed);
  std::vector<std::vector<char>> base(n, std::vector<char>(n, 0));
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) base[u][v] = detail::unit(rng) < p;
  std::vector<std::vector<Edge>> lists(k);
  std::vector<std::string> names;
  for (std::size_t f = 0; f < k; ++f) {
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t v = u + 1; v < n; ++v) {
        const bool flip = perturbation > 0.0 && detail::unit(rng) < perturbation;
        if (base[u][v] != flip) lists[f].push_back({u, v});
      }
    names.push_back("frame" + std::to_string(f + 1));
  }
  return Instance::from_edge_lists(n, lists, std::move(names));
}

}  // namespace mcbi
