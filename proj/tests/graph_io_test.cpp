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


#include <gtest/gtest.h>

#include <sstream>

#include "mcbi/mcbi.hpp"
#include "support/fixtures.hpp"

namespace mcbi {
namespace {

using testing::make_instance;

TEST(Edge, NormalisesEndpoints) {
  EXPECT_EQ(make_edge(5, 2), (Edge{2, 5}));
  EXPECT_THROW(make_edge(3, 3), std::invalid_argument);
}

TEST(EdgeUniverse, SortsAndIndexes) {
  EdgeUniverse u(4, {{2, 3}, {0, 1}, {1, 2}});
  EXPECT_EQ(u.edge(0), (Edge{0, 1}));
  EXPECT_EQ(u.id_of(3, 2), 2u);
  EXPECT_FALSE(u.find(0, 3).has_value());
  EXPECT_THROW(EdgeUniverse(3, {{0, 1}, {0, 1}}), std::invalid_argument);
}

TEST(Graph, ComponentsAndDimension) {
  // Two triangles, one isolated vertex.
  const Instance in = make_instance(7, {{{1, 2}, {2, 3}, {1, 3}, {4, 5}, {5, 6}, {4, 6}}});
  const Graph& g = in.graph(0);
  EXPECT_EQ(g.component_count(), 3u);
  EXPECT_EQ(g.cycle_space_dimension(), 2u);
  EXPECT_EQ(g.max_degree(), 2u);
  EXPECT_EQ(g.degree(6), 0u);
}

TEST(Graph, NeighborsAreSorted) {
  const Instance in = make_instance(4, {testing::k4});
  const auto& nb = in.graph(0).neighbors(2);
  ASSERT_EQ(nb.size(), 3u);
  EXPECT_EQ(nb[0].vertex, 0u);
  EXPECT_EQ(nb[2].vertex, 3u);
}

TEST(Instance, IntersectionAndNames) {
  const Instance in = make_instance(4, {{{1, 2}, {2, 3}, {3, 4}}, {{1, 2}, {3, 4}, {1, 4}}});
  EXPECT_EQ(in.name(1), "g2");
  const Graph common = intersection_graph(in);
  EXPECT_EQ(common.edge_count(), 2u);
  EXPECT_TRUE(common.has_edge(in.universe().id_of(0, 1)));
  EXPECT_FALSE(common.has_edge(in.universe().id_of(1, 2)));
  EXPECT_THROW(Instance::from_edge_lists(3, {}), std::invalid_argument);
}

TEST(Parse, RoundTrip) {
  const Instance in = make_instance(5, {testing::k4, {{1, 2}, {2, 5}}});
  const Instance back = parse_instance_string(instance_to_string(in));
  EXPECT_EQ(back, in);
  EXPECT_EQ(instance_to_string(back), instance_to_string(in));
}

TEST(Parse, CommentsAndNames) {
  const Instance in = parse_instance_string(
      "# leading comment\n"
      "mcbi 3 1\n"
      "graph first frame   # trailing\n"
      "\n"
      "e 1 2\n"
      "e 2 3 # ok\n");
  EXPECT_EQ(in.name(0), "first frame");
  EXPECT_EQ(in.graph(0).edge_count(), 2u);
}

struct BadInput {
  const char* text;
  ParseError::Kind kind;
  std::size_t line;
};

class ParseErrors : public ::testing::TestWithParam<BadInput> {};

TEST_P(ParseErrors, ReportKindAndLine) {
  const BadInput& bad = GetParam();
  try {
    parse_instance_string(bad.text);
    FAIL() << "accepted: " << bad.text;
  } catch (const ParseError& e) {
    EXPECT_EQ(e.kind(), bad.kind) << e.what();
    EXPECT_EQ(e.line(), bad.line) << e.what();
  }
}

INSTANTIATE_TEST_SUITE_P(
    Malformed, ParseErrors,
    ::testing::Values(BadInput{"", ParseError::Kind::malformed_header, 0},
                      BadInput{"graph x\n", ParseError::Kind::malformed_header, 1},
                      BadInput{"mcbi 3\n", ParseError::Kind::malformed_header, 1},
                      BadInput{"mcbi three 1\n", ParseError::Kind::malformed_header, 1},
                      BadInput{"mcbi 3 0\n", ParseError::Kind::malformed_header, 1},
                      BadInput{"mcbi 3 1\ne 1 2\n", ParseError::Kind::malformed_line, 2},
                      BadInput{"mcbi 3 1\ngraph a\ne 1 4\n", ParseError::Kind::vertex_out_of_range, 3},
                      BadInput{"mcbi 3 1\ngraph a\ne 0 1\n", ParseError::Kind::vertex_out_of_range, 3},
                      BadInput{"mcbi 3 1\ngraph a\ne 2 2\n", ParseError::Kind::self_loop, 3},
                      BadInput{"mcbi 3 1\ngraph a\ne 1 2\n# c\ne 2 1\n", ParseError::Kind::duplicate_edge, 5},
                      BadInput{"mcbi 3 2\ngraph a\ne 1 2\n", ParseError::Kind::count_mismatch, 3},
                      BadInput{"mcbi 3 1\ngraph a\ngraph b\n", ParseError::Kind::count_mismatch, 3},
                      BadInput{"mcbi 3 1\ngraph a\ne 1 2 3\n", ParseError::Kind::malformed_line, 3},
                      BadInput{"mcbi 3 1\ngraph a\nx 1 2\n", ParseError::Kind::malformed_line, 3}));

TEST(Trajectory, FramesAndRanges) {
  const std::string text =
      "traj 3 3\n"
      "frame 1\ne 1 2\ne 2 3\n"
      "frame 2\ne 1 2\n"
      "frame 3\ne 1 3\n";
  std::istringstream all(text);
  const Instance in = parse_trajectory(all);
  EXPECT_EQ(in.graph_count(), 3u);
  EXPECT_EQ(in.name(0), "frame 1");

  std::istringstream part(text);
  const Instance mid = parse_trajectory(part, parse_frame_range("2..3"));
  EXPECT_EQ(mid.graph_count(), 2u);
  EXPECT_EQ(mid.name(0), "frame 2");
  EXPECT_EQ(mid.universe().edge_count(), 2u);

  std::istringstream again(text);
  EXPECT_THROW(parse_trajectory(again, FrameRange{2, 4}), RangeError);
  EXPECT_THROW(parse_frame_range("3..2"), RangeError);
  EXPECT_THROW(parse_frame_range("0..2"), RangeError);
  EXPECT_THROW(parse_frame_range("2-3"), RangeError);
  EXPECT_THROW(parse_instance_string(text), ParseError);
}

TEST(Solution, ParseAndFormat) {
  const Instance in = make_instance(4, {testing::k4});
  const Cycle tri = testing::ring(in, {1, 2, 3});
  EXPECT_EQ(format_cycle(in.universe(), tri), "c 1 2 1 3 2 3");
  EXPECT_EQ(parse_cycle(in.universe(), "c 2 3 1 2 3 1"), tri);

  std::istringstream sol("# method: x\nc 1 2 2 3 1 3\n\nc 1 2 2 4 1 4\n");
  EXPECT_EQ(parse_solution(in.universe(), sol).size(), 2u);
}

TEST(Solution, Errors) {
  const Instance in = make_instance(5, {testing::k4});
  auto kind_of = [&](const std::string& text) {
    try {
      parse_cycle(in.universe(), text);
    } catch (const ParseError& e) {
      return e.kind();
    }
    return ParseError::Kind::malformed_header;  // sentinel: no error
  };
  EXPECT_EQ(kind_of("c 1 5 1 2"), ParseError::Kind::unknown_edge);
  EXPECT_EQ(kind_of("c 1 2 2 1"), ParseError::Kind::duplicate_edge);
  EXPECT_EQ(kind_of("c 1 2 3"), ParseError::Kind::malformed_line);
  EXPECT_EQ(kind_of("e 1 2"), ParseError::Kind::malformed_line);
  EXPECT_EQ(kind_of("c 1 9 1 2"), ParseError::Kind::vertex_out_of_range);
}

}  // namespace
}  // namespace mcbi
