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

#include "mcbi/mcbi.hpp"
#include "support/fixtures.hpp"
#include "support/generators.hpp"

namespace mcbi {
namespace {

using testing::make_instance;
using testing::ring;

Instance grid_pair() {
  auto with_diagonal = testing::grid2x3;
  with_diagonal.push_back({2, 6});
  return make_instance(6, {testing::grid2x3, with_diagonal});
}

TEST(SolveK2, GridWithDiagonal) {
  const Instance in = grid_pair();
  const SolveContext ctx(in);
  std::size_t calls = 0;
  const SolveReport r = solve_k2(ctx, [&](const std::vector<std::size_t>&) { ++calls; });
  ASSERT_EQ(r.size(), 1u);
  EXPECT_EQ(r.solution[0], ring(in, {1, 2, 5, 4}));
  EXPECT_EQ(r.method, "k2");
  EXPECT_FALSE(r.approximate);
  EXPECT_EQ(r.augmentations, 1u);
  EXPECT_EQ(calls, 1u);
  EXPECT_GT(r.oracle_calls, 0u);
  ASSERT_EQ(r.witnesses.size(), 2u);
  EXPECT_EQ(r.witnesses[0].total_weight, 8u);
  EXPECT_EQ(r.witnesses[1].total_weight, 10u);
  const auto& w = r.witnesses[1].basis;
  EXPECT_NE(std::find(w.begin(), w.end(), r.solution[0]), w.end());
}

TEST(SolveK2, NeedsTwoGraphs) {
  const Instance in = make_instance(4, {testing::k4});
  const SolveContext ctx(in);
  EXPECT_THROW(solve_k2(ctx), PreconditionError);
}

TEST(SolveGreedy, SingleGraphIsExact) {
  const Instance in = make_instance(4, {testing::k4});
  const SolveContext ctx(in);
  const SolveReport r = solve_greedy(ctx);
  EXPECT_EQ(r.size(), 3u);
  EXPECT_FALSE(r.approximate);
  EXPECT_TRUE(solve_greedy(SolveContext(grid_pair())).approximate);
}

TEST(SolveXp, Thresholds) {
  const Instance in = grid_pair();
  const SolveContext ctx(in);
  const SolveReport zero = solve_xp(ctx, 0);
  EXPECT_TRUE(zero.answer);
  EXPECT_EQ(zero.size(), 0u);
  const SolveReport one = solve_xp(ctx, 1);
  EXPECT_TRUE(one.answer);
  EXPECT_EQ(one.size(), 1u);
  EXPECT_EQ(one.target, std::optional<std::size_t>{1});
  const SolveReport two = solve_xp(ctx, 2);
  EXPECT_FALSE(two.answer);
  EXPECT_EQ(two.size(), 0u);
  EXPECT_FALSE(solve_xp(ctx, 99).answer);
}

TEST(SolveBruteforce, Budget) {
  const Instance in = grid_pair();
  const SolveContext ctx(in);
  EXPECT_EQ(solve_bruteforce(ctx).size(), 1u);
  EXPECT_THROW(solve_bruteforce(ctx, EnumerationBudget{5, 2, 7}), BudgetExceeded);
}

TEST(SolveMaxDegree2, SharedComponents) {
  // Graph 1: triangle 1-2-3 and square 4-5-6-7. Graph 2: same triangle, square
  // replaced by the path 4-5-6-7, plus a triangle elsewhere.
  const Instance in = make_instance(10, {{{1, 2}, {2, 3}, {1, 3}, {4, 5}, {5, 6}, {6, 7}, {4, 7}},
                                         {{1, 2}, {2, 3}, {1, 3}, {4, 5}, {5, 6}, {6, 7}, {8, 9}, {9, 10}, {8, 10}}});
  const SolveContext ctx(in);
  const SolveReport r = solve_max_degree2(ctx);
  ASSERT_EQ(r.size(), 1u);
  EXPECT_EQ(r.solution[0], ring(in, {1, 2, 3}));
  EXPECT_EQ(solve_auto(ctx).method, "max-degree-2");
  EXPECT_THROW(solve_max_degree2(SolveContext(grid_pair())), PreconditionError);
}

TEST(SolveAuto, Dispatch) {
  EXPECT_EQ(solve_auto(SolveContext(make_instance(4, {testing::k4}))).method, "gamma3");
  EXPECT_EQ(solve_auto(SolveContext(make_instance(6, {testing::grid2x3}))).method, "gamma4-delta3");
  const Instance wide = stable_set_instance({HostGraph::path(3), 4, Grouping::per_edge});
  EXPECT_EQ(solve_auto(SolveContext(wide)).method, "k2");
  const Instance three = stable_set_instance({HostGraph::star(3), 4, Grouping::per_edge});
  const SolveContext ctx(three);
  const SolveReport g = solve_auto(ctx);
  EXPECT_EQ(g.method, "greedy");
  EXPECT_TRUE(g.approximate);
  const SolveReport yes = solve_auto(ctx, 3);
  EXPECT_EQ(yes.method, "xp");
  EXPECT_TRUE(yes.answer);
  EXPECT_FALSE(solve_auto(ctx, 4).answer);
  const SolveReport k2 = solve_auto(SolveContext(wide), 3);
  EXPECT_EQ(k2.method, "k2");
  EXPECT_FALSE(k2.answer);
  EXPECT_EQ(k2.size(), 2u);
}

TEST(Verify, Verdicts) {
  const Instance in = grid_pair();
  const Cycle left = ring(in, {1, 2, 5, 4}), right = ring(in, {2, 3, 6, 5});
  EXPECT_TRUE(verify(in, std::vector<Cycle>{left}).feasible);
  EXPECT_TRUE(verify(in, std::vector<Cycle>{}).feasible);
  const Verdict dup = verify(in, std::vector<Cycle>{left, left});
  EXPECT_FALSE(dup.feasible);
  EXPECT_FALSE(dup.failing_graph.has_value());
  const Verdict spanned = verify(in, std::vector<Cycle>{right});
  EXPECT_FALSE(spanned.feasible);
  EXPECT_EQ(spanned.failing_graph, std::optional<std::size_t>{1});
  const Verdict absent = verify(in, std::vector<Cycle>{ring(in, {2, 3, 6})});
  EXPECT_FALSE(absent.feasible);
  EXPECT_EQ(absent.failing_graph, std::optional<std::size_t>{0});
  EXPECT_THROW(verify(in, std::vector<Cycle>{Cycle::zero(in.universe().edge_count())}), std::invalid_argument);
}

TEST(Solvers, AgreeWithBruteForce) {
  mcbi::testing::Rng rng(2024);
  for (int i = 0; i < 80; ++i) {
    const Instance in = i % 2 ? mcbi::testing::small_multi_instance(rng, 2, 12, 5)
                              : mcbi::testing::planted_conflict_instance(rng, 2, 12);
    const SolveContext ctx(in);
    const std::size_t opt = solve_bruteforce(ctx).size();
    const SolveReport k2 = solve_k2(ctx);
    EXPECT_EQ(k2.size(), opt) << instance_to_string(in);
    EXPECT_TRUE(verify(in, k2.solution).feasible);
    EXPECT_GE(2 * solve_greedy(ctx).size(), opt);
    EXPECT_TRUE(solve_xp(ctx, opt).answer);
    EXPECT_FALSE(solve_xp(ctx, opt + 1).answer);
    for (std::size_t g = 0; g < 2; ++g)
      for (const Cycle& c : k2.solution)
        EXPECT_NE(std::find(k2.witnesses[g].basis.begin(), k2.witnesses[g].basis.end(), c), k2.witnesses[g].basis.end());
  }
}

}  // namespace
}  // namespace mcbi
