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

// Text formats. Vertices are 1-based in files and 0-based in memory; '#'
// starts a comment.
//
//   instance:    mcbi <n> <k>    then k x { graph <name>, e <u> <v>... }
//   trajectory:  traj <n> <frames> then frames x { frame <t>, e <u> <v>... }
//   cycle:       c u1 v1 u2 v2 ...   (edge endpoint pairs, canonical order)

#include <charconv>
#include <cstddef>
#include <istream>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "mcbi/cycle_space.hpp"
#include "mcbi/errors.hpp"
#include "mcbi/graph.hpp"

namespace mcbi {

namespace detail {

struct Line {
  std::size_t number = 0;
  std::vector<std::string> tokens;
  std::string rest;  // text after the first token, trimmed
};

inline std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

/// Non-empty, comment-stripped lines of the stream.
inline std::vector<Line> read_lines(std::istream& in) {
  std::vector<Line> out;
  std::string raw;
  std::size_t number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream ss(raw);
    Line line{number, {}, {}};
    for (std::string tok; ss >> tok;) line.tokens.push_back(tok);
    if (line.tokens.empty()) continue;
    const std::string body = trim(raw);
    line.rest = trim(std::string_view(body).substr(line.tokens.front().size()));
    out.push_back(std::move(line));
  }
  return out;
}

inline std::optional<std::size_t> to_size(const std::string& tok) {
  std::size_t value = 0;
  const char* first = tok.data();
  const char* last = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) return std::nullopt;
  return value;
}

inline std::size_t parse_count(const Line& line, std::size_t index, ParseError::Kind kind, const char* what) {
  if (index >= line.tokens.size()) throw ParseError(kind, line.number, std::string("missing ") + what);
  auto v = to_size(line.tokens[index]);
  if (!v) throw ParseError(kind, line.number, std::string("invalid ") + what + " '" + line.tokens[index] + "'");
  return *v;
}

/// Parses "e u v" into a 0-based edge, checking range and loops.
inline Edge parse_edge_line(const Line& line, std::size_t n) {
  if (line.tokens.size() != 3) throw ParseError(ParseError::Kind::malformed_line, line.number, "expected 'e <u> <v>'");
  const std::size_t u = parse_count(line, 1, ParseError::Kind::malformed_line, "vertex");
  const std::size_t v = parse_count(line, 2, ParseError::Kind::malformed_line, "vertex");
  for (std::size_t x : {u, v})
    if (x < 1 || x > n)
      throw ParseError(ParseError::Kind::vertex_out_of_range, line.number,
                       "vertex " + std::to_string(x) + " outside 1.." + std::to_string(n));
  if (u == v) throw ParseError(ParseError::Kind::self_loop, line.number, "self-loop at vertex " + std::to_string(u));
  return make_edge(u - 1, v - 1);
}

struct Sections {
  std::size_t n = 0;
  std::vector<std::vector<Edge>> edges;
  std::vector<std::string> names;
};

inline Sections read_sections(std::istream& in, const std::string& magic, const std::string& section_word) {
  auto lines = read_lines(in);
  if (lines.empty()) throw ParseError(ParseError::Kind::malformed_header, 0, "empty input, expected '" + magic + "' header");
  const Line& header = lines.front();
  if (header.tokens.size() != 3 || header.tokens[0] != magic)
    throw ParseError(ParseError::Kind::malformed_header, header.number,
                     "expected '" + magic + " <n> <" + (magic == "mcbi" ? "k" : "frames") + ">'");
  Sections out;
  out.n = parse_count(header, 1, ParseError::Kind::malformed_header, "vertex count");
  const std::size_t k = parse_count(header, 2, ParseError::Kind::malformed_header, "section count");
  if (k == 0) throw ParseError(ParseError::Kind::malformed_header, header.number, "at least one " + section_word + " required");

  std::set<Edge> in_section;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& line = lines[i];
    const std::string& head = line.tokens.front();
    if (head == section_word) {
      if (out.edges.size() == k)
        throw ParseError(ParseError::Kind::count_mismatch, line.number,
                         "more than the declared " + std::to_string(k) + " " + section_word + " sections");
      out.edges.emplace_back();
      out.names.push_back(section_word == "frame" ? "frame " + line.rest : line.rest);
      in_section.clear();
    } else if (head == "e") {
      if (out.edges.empty())
        throw ParseError(ParseError::Kind::malformed_line, line.number, "edge before the first " + section_word + " section");
      Edge e = parse_edge_line(line, out.n);
      if (!in_section.insert(e).second)
        throw ParseError(ParseError::Kind::duplicate_edge, line.number,
                         "duplicate edge " + std::to_string(e.u + 1) + " " + std::to_string(e.v + 1));
      out.edges.back().push_back(e);
    } else {
      throw ParseError(ParseError::Kind::malformed_line, line.number, "unexpected token '" + head + "'");
    }
  }
  if (out.edges.size() != k)
    throw ParseError(ParseError::Kind::count_mismatch, lines.back().number,
                     "declared " + std::to_string(k) + " " + section_word + " sections, found " +
                         std::to_string(out.edges.size()));
  return out;
}

}  // namespace detail

inline Instance parse_instance(std::istream& in) {
  auto s = detail::read_sections(in, "mcbi", "graph");
  return Instance::from_edge_lists(s.n, s.edges, std::move(s.names));
}

inline Instance parse_instance_string(const std::string& text) {
  std::istringstream in(text);
  return parse_instance(in);
}

/// Inclusive 1-based frame selection.
struct FrameRange {
  std::size_t first = 1;
  std::size_t last = 1;
};

inline FrameRange parse_frame_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) throw RangeError("frame range must look like a..b, got '" + text + "'");
  auto a = detail::to_size(text.substr(0, dots));
  auto b = detail::to_size(text.substr(dots + 2));
  if (!a || !b) throw RangeError("frame range must look like a..b, got '" + text + "'");
  if (*a == 0) throw RangeError("frames are numbered from 1");
  if (*a > *b) throw RangeError("empty frame range " + text);
  return {*a, *b};
}

/// Reads a trajectory and keeps the selected frames (all when range is empty).
inline Instance parse_trajectory(std::istream& in, std::optional<FrameRange> range = std::nullopt) {
  auto s = detail::read_sections(in, "traj", "frame");
  const std::size_t frames = s.edges.size();
  FrameRange r = range.value_or(FrameRange{1, frames});
  if (r.first > r.last) throw RangeError("empty frame range " + std::to_string(r.first) + ".." + std::to_string(r.last));
  if (r.first < 1 || r.last > frames)
    throw RangeError("frame range " + std::to_string(r.first) + ".." + std::to_string(r.last) + " outside 1.." +
                     std::to_string(frames));
  std::vector<std::vector<Edge>> lists(s.edges.begin() + static_cast<std::ptrdiff_t>(r.first - 1),
                                       s.edges.begin() + static_cast<std::ptrdiff_t>(r.last));
  std::vector<std::string> names(s.names.begin() + static_cast<std::ptrdiff_t>(r.first - 1),
                                 s.names.begin() + static_cast<std::ptrdiff_t>(r.last));
  return Instance::from_edge_lists(s.n, lists, std::move(names));
}

inline void write_instance(std::ostream& out, const Instance& instance) {
  const EdgeUniverse& universe = instance.universe();
  out << "mcbi " << universe.vertex_count() << ' ' << instance.graph_count() << '\n';
  for (std::size_t i = 0; i < instance.graph_count(); ++i) {
    out << "graph " << instance.name(i) << '\n';
    const BitVec& edges = instance.graph(i).edge_set();
    for (EdgeId id = edges.find_first(); id != BitVec::npos; id = edges.find_next(id)) {
      const Edge& e = universe.edge(id);
      out << "e " << e.u + 1 << ' ' << e.v + 1 << '\n';
    }
  }
}

inline std::string instance_to_string(const Instance& instance) {
  std::ostringstream out;
  write_instance(out, instance);
  return out.str();
}

inline std::string format_cycle(const EdgeUniverse& universe, const Cycle& c) {
  std::string out = "c";
  for (EdgeId id : c.edge_ids()) {
    const Edge& e = universe.edge(id);
    out += ' ' + std::to_string(e.u + 1) + ' ' + std::to_string(e.v + 1);
  }
  return out;
}

namespace detail {

inline Cycle parse_cycle_line(const EdgeUniverse& universe, const Line& line) {
  if (line.tokens.front() != "c") throw ParseError(ParseError::Kind::malformed_line, line.number, "expected 'c u1 v1 ...'");
  if (line.tokens.size() % 2 != 1)
    throw ParseError(ParseError::Kind::malformed_line, line.number, "odd number of endpoints in cycle");
  BitVec bits = universe.empty_set();
  for (std::size_t t = 1; t + 1 < line.tokens.size(); t += 2) {
    Line pair{line.number, {"e", line.tokens[t], line.tokens[t + 1]}, {}};
    Edge e = parse_edge_line(pair, universe.vertex_count());
    auto id = universe.find(e.u, e.v);
    if (!id)
      throw ParseError(ParseError::Kind::unknown_edge, line.number,
                       "edge " + std::to_string(e.u + 1) + " " + std::to_string(e.v + 1) + " is in no graph");
    if (bits.test(*id))
      throw ParseError(ParseError::Kind::duplicate_edge, line.number,
                       "edge " + std::to_string(e.u + 1) + " " + std::to_string(e.v + 1) + " repeated in cycle");
    bits.set(*id);
  }
  return Cycle(std::move(bits));
}

}  // namespace detail

inline Cycle parse_cycle(const EdgeUniverse& universe, const std::string& text) {
  std::istringstream in(text);
  auto lines = detail::read_lines(in);
  if (lines.size() != 1) throw ParseError(ParseError::Kind::malformed_line, 1, "expected exactly one cycle line");
  return detail::parse_cycle_line(universe, lines.front());
}

/// One 'c ...' line per cycle; comments and blank lines are ignored.
inline std::vector<Cycle> parse_solution(const EdgeUniverse& universe, std::istream& in) {
  std::vector<Cycle> out;
  for (const auto& line : detail::read_lines(in)) out.push_back(detail::parse_cycle_line(universe, line));
  return out;
}

}  // namespace mcbi
