#include <gtest/gtest.h>

#include "fixtures.h"
#include "nodesep/bench/generators.h"
#include "nodesep/coarsening/hierarchy.h"
#include "nodesep/errors.h"
#include "nodesep/multilevel/multilevel.h"
#include "oracles.h"

namespace nodesep {
namespace {
TEST(Multilevel, CoarseningThreshold) {
  MultilevelConfig config;
  EXPECT_EQ(coarsening_threshold(config, 2), 1000);
  EXPECT_EQ(coarsening_threshold(config, 64), 1920);
  config.coarsest_nodes = 50;
  EXPECT_EQ(coarsening_threshold(config, 64), 50);
}

TEST(Multilevel, GrowBisectionReachesTarget) {
  Random rng(4);
  const Graph graph = gen::grid(10, 10);
  const std::vector<BlockID> sides = grow_bisection(graph, 50.0, rng);
  NodeWeight side0 = 0;
  for (NodeID u = 0; u < graph.n(); ++u) {
    side0 += sides[u] == 0 ? graph.node_weight(u) : 0;
  }
  EXPECT_GE(side0, 50);
  EXPECT_LT(side0, 60);
}

TEST(InitialSeparator, SingleBlock) {
  Random rng(1);
  const Graph graph = gen::grid(3, 3);
  const SeparatorSolution solution = initial_separator(graph, 1, 0.03, rng);
  EXPECT_EQ(solution.separator_weight(), 0);
  EXPECT_TRUE(is_feasible(graph, solution));
}

TEST(InitialSeparator, SmallExamples) {
  Random rng(1);
  EXPECT_EQ(initial_separator(gen::path(3), 2, 0.03, rng).separator_weight(), 1);
  const Graph grid = gen::grid(4, 4);
  const SeparatorSolution solution = initial_separator(grid, 2, 0.03, rng);
  EXPECT_TRUE(is_feasible(grid, solution));
  EXPECT_EQ(solution.separator_weight(), oracle::min_separator_weight(grid, 2, 0.03));
  EXPECT_EQ(solution.separator_weight(), 4);
}

TEST(InitialSeparator, InvalidBlockCounts) {
  Random rng(1);
  EXPECT_THROW((void)initial_separator(gen::path(3), 4, 0.03, rng), InfeasibleError);
  EXPECT_THROW((void)initial_separator(gen::path(3), 0, 0.03, rng), InvalidArgument);
}

TEST(Solve, PathOfNine) {
  Random rng(1);
  const Graph graph = gen::path(9);
  const SeparatorSolution solution = solve(graph, 3, 0.03, {}, rng);
  EXPECT_TRUE(is_feasible(graph, solution));
  EXPECT_EQ(solution.separator_weight(), 2);
}

TEST(Solve, FeasibleOnCorpus) {
  Random rng(41);
  for (int trial = 0; trial < 40; ++trial) {
    const Graph graph = fixture::random_small_graph(rng, 400);
    const BlockID k = 2 + static_cast<BlockID>(rng() % 7);
    MultilevelConfig config;
    config.coarsest_nodes = 40;
    SeparatorSolution solution;
    try {
      solution = solve(graph, k, 0.03, config, rng);
    } catch (const InfeasibleError &) {
      continue;
    }
    EXPECT_TRUE(is_feasible(graph, solution));
  }
}

TEST(Solve, DeterministicUnderSeed) {
  Random seed_rng(5);
  const Graph graph = gen::random_geometric(2000, 0.04, seed_rng);
  Random a(11);
  Random b(11);
  EXPECT_EQ(solve(graph, 4, 0.03, {}, a), solve(graph, 4, 0.03, {}, b));
}

TEST(VCycle, OptimalInputKeepsWeight) {
  Random rng(1);
  const Graph graph = gen::path(3);
  const SeparatorSolution solution(graph, 2, 0.03, {0, 2, 1});
  EXPECT_EQ(vcycle(graph, solution, {}, rng).separator_weight(), 1);
}

TEST(VCycle, RejectsInfeasibleInput) {
  Random rng(1);
  const Graph graph = gen::path(3);
  EXPECT_THROW((void)vcycle(graph, SeparatorSolution(graph, 2, 0.03, {0, 1, 1}), {}, rng), InvalidArgument);
}

TEST(VCycle, NeverWorse) {
  Random rng(42);
  for (int trial = 0; trial < 40; ++trial) {
    const Graph graph = fixture::random_small_graph(rng, 400);
    const BlockID k = 2 + static_cast<BlockID>(rng() % 4);
    SeparatorSolution solution;
    try {
      solution = fixture::random_feasible_solution(graph, k, 0.03, rng);
    } catch (const InfeasibleError &) {
      continue;
    }
    MultilevelConfig config;
    config.coarsest_nodes = 20;
    const SeparatorSolution result = vcycle(graph, solution, config, rng);
    EXPECT_TRUE(is_feasible(graph, result));
    EXPECT_LE(result.separator_weight(), solution.separator_weight());
  }
}

TEST(VCycle, BlockedHierarchyCarriesSolution) {
  Random rng(43);
  for (int trial = 0; trial < 30; ++trial) {
    const Graph graph = fixture::random_small_graph(rng, 300);
    const SeparatorSolution solution = fixture::random_valid_solution(graph, 3, 0.03, rng);
    const Hierarchy hierarchy =
        build_hierarchy(graph, cut_edge_flags(graph, solution.assignment()), CoarseningStop::node_threshold(10),
                        EdgeRatingFunction::kExpansionStar2, rng);
    const SeparatorSolution coarse = hierarchy.restrict_to_coarsest(solution);
    EXPECT_TRUE(check_solution(hierarchy.coarsest(), coarse).valid);
    EXPECT_EQ(coarse.separator_weight(), solution.separator_weight());
  }
}
} // namespace
} // namespace nodesep
