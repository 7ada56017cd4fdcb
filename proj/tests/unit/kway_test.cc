#include <algorithm>

#include <gtest/gtest.h>

#include "fixtures.h"
#include "nodesep/bench/generators.h"
#include "nodesep/errors.h"
#include "nodesep/kway/kway_refinement.h"
#include "nodesep/quotient_graph.h"
#include "oracles.h"

namespace nodesep {
namespace {
bool separator_subset(const SeparatorSolution &smaller, const SeparatorSolution &larger) {
  for (NodeID u = 0; u < smaller.n(); ++u) {
    if (smaller.in_separator(u) && !larger.in_separator(u)) {
      return false;
    }
  }
  return true;
}

TEST(Preprocess, DirectlySeparatingSeparatorIsFixedPoint) {
  const Graph graph = gen::path(3);
  const SeparatorSolution solution(graph, 2, 0.03, {0, 2, 1});
  EXPECT_EQ(preprocess(graph, solution), solution);
}

TEST(Preprocess, NodeTouchingOneBlockJoinsIt) {
  const Graph graph = gen::path(5);
  const SeparatorSolution solution(graph, 2, 0.5, {0, 2, 2, 1, 1});
  const SeparatorSolution result = preprocess(graph, solution);
  EXPECT_EQ(std::vector<BlockID>(result.assignment().begin(), result.assignment().end()),
            (std::vector<BlockID>{0, 0, 2, 1, 1}));
}

TEST(Preprocess, IsolatedNodeJoinsLightestBlock) {
  const std::vector<WeightedEdge> edges = {{0, 1}, {1, 2}, {2, 3}};
  const Graph graph = Graph::from_edges(5, edges);
  const SeparatorSolution solution(graph, 2, 0.5, {0, 0, 2, 1, 2});
  const SeparatorSolution result = preprocess(graph, solution);
  EXPECT_EQ(result.block(4), 1);
  EXPECT_EQ(result.block(2), 2);
}

TEST(Preprocess, OnlyRemovesSeparatorNodes) {
  Random rng(31);
  for (int trial = 0; trial < 150; ++trial) {
    const Graph graph = fixture::random_small_graph(rng, 150);
    const BlockID k = 2 + static_cast<BlockID>(rng() % 4);
    const SeparatorSolution solution = fixture::random_valid_solution(graph, k, 0.03, rng, 0.2);
    const SeparatorSolution result = preprocess(graph, solution);
    EXPECT_TRUE(check_solution(graph, result).valid);
    EXPECT_TRUE(separator_subset(result, solution));
    for (const NodeID u : result.separator_nodes()) {
      EXPECT_GE(adjacent_blocks(graph, result, u).size(), 2U);
    }
  }
}

TEST(AdjointPairs, TwoBlocks) {
  const Graph graph = gen::path(3);
  const SeparatorSolution solution(graph, 2, 0.03, {0, 2, 1});
  EXPECT_EQ(adjoint_pairs(graph, solution), (std::vector<std::pair<BlockID, BlockID>>{{0, 1}}));
}

TEST(AdjointPairs, ChainOfThreeBlocks) {
  const Graph graph = gen::path(7);
  const SeparatorSolution solution(graph, 3, 0.5, {0, 0, 3, 1, 3, 2, 2});
  EXPECT_EQ(adjoint_pairs(graph, solution), (std::vector<std::pair<BlockID, BlockID>>{{0, 1}, {1, 2}}));
}

TEST(AdjointPairs, MatchQuotientEdges) {
  Random rng(32);
  for (int trial = 0; trial < 50; ++trial) {
    const Graph graph = fixture::random_small_graph(rng, 150);
    const SeparatorSolution solution =
        preprocess(graph, fixture::random_valid_solution(graph, 4, 0.03, rng));
    std::vector<std::pair<BlockID, BlockID>> quotient_pairs;
    const QuotientGraph quotient = quotient_graph(graph, solution);
    for (const QuotientEdge &edge : quotient.edges()) {
      quotient_pairs.emplace_back(edge.a, edge.b);
    }
    EXPECT_EQ(adjoint_pairs(graph, solution), quotient_pairs);
  }
}

TEST(Pairwise, RoundsCapZeroReturnsInput) {
  const Graph graph = gen::grid(4, 4);
  const SeparatorSolution solution(graph, 2, 0.03, {0, 2, 2, 1, 0, 2, 2, 1, 0, 2, 1, 1, 0, 2, 1, 1});
  Random rng(1);
  PairwiseConfig config;
  config.rounds_cap = 0;
  EXPECT_EQ(pairwise_local_search(graph, solution, rng, config), solution);
}

TEST(Pairwise, GridZigZag) {
  const Graph graph = gen::grid(4, 4);
  const SeparatorSolution solution(graph, 2, 0.03, {0, 2, 2, 1, 0, 2, 2, 1, 0, 2, 1, 1, 0, 2, 1, 1});
  Random rng(1);
  const SeparatorSolution result = pairwise_local_search(graph, preprocess(graph, solution), rng);
  EXPECT_TRUE(is_feasible(graph, result));
  EXPECT_EQ(result.separator_weight(), oracle::min_separator_weight(graph, 2, 0.03));
}

TEST(Pairwise, PathOfNineThreeBlocks) {
  const Graph graph = gen::path(9);
  const SeparatorSolution solution(graph, 3, 0.03, {0, 0, 3, 3, 1, 3, 3, 2, 2});
  ASSERT_TRUE(is_feasible(graph, solution));
  ASSERT_EQ(solution.separator_weight(), 4);
  Random rng(2);
  const SeparatorSolution result = pairwise_local_search(graph, balance(graph, preprocess(graph, solution)), rng);
  EXPECT_TRUE(is_feasible(graph, result));
  EXPECT_EQ(result.separator_weight(), oracle::min_separator_weight(graph, 3, 0.03));
  EXPECT_EQ(result.separator_weight(), 2);
}

TEST(Pairwise, NeverWorseOnRandomInputs) {
  Random rng(33);
  for (int trial = 0; trial < 100; ++trial) {
    const Graph graph = fixture::random_small_graph(rng, 200);
    const BlockID k = 2 + static_cast<BlockID>(rng() % 4);
    SeparatorSolution solution;
    try {
      solution = balance(graph, preprocess(graph, fixture::random_valid_solution(graph, k, 0.03, rng, 0.1)));
    } catch (const InfeasibleError &) {
      continue;
    }
    const SeparatorSolution result = pairwise_local_search(graph, solution, rng);
    EXPECT_TRUE(is_feasible(graph, result));
    EXPECT_LE(result.separator_weight(), solution.separator_weight());
  }
}

TEST(Balance, BalancedInputIsFixedPoint) {
  const Graph graph = gen::path(3);
  const SeparatorSolution solution(graph, 2, 0.03, {0, 2, 1});
  EXPECT_EQ(balance(graph, solution), solution);
}

TEST(Balance, MovesWeightAlongQuotientPath) {
  const Graph graph = gen::path(12);
  const SeparatorSolution solution(graph, 3, 0.0, {0, 0, 0, 0, 0, 0, 0, 3, 1, 1, 3, 2});
  ASSERT_FALSE(solution.is_balanced());
  const SeparatorSolution result = balance(graph, solution);
  EXPECT_TRUE(is_feasible(graph, result));
  EXPECT_EQ(result.total_weight(), solution.total_weight());
}

TEST(Balance, DirectMoveBetweenComponents) {
  const Graph graph = gen::disjoint_union({gen::path(6), gen::path(2)});
  const SeparatorSolution solution(graph, 2, 0.0, {0, 0, 0, 0, 0, 0, 1, 1});
  ASSERT_FALSE(solution.is_balanced());
  const SeparatorSolution result = balance(graph, solution);
  EXPECT_TRUE(is_feasible(graph, result));
  EXPECT_EQ(result.separator_weight(), 1);
}

TEST(Balance, UnbalanceableInstances) {
  const std::vector<WeightedEdge> edges = {{0, 1}, {1, 2}};
  const Graph heavy = Graph::from_edges(3, edges, {10, 1, 1});
  EXPECT_THROW((void)balance(heavy, SeparatorSolution(heavy, 2, 0.03, {0, 2, 1})), InfeasibleError);
  const Graph small = gen::path(2);
  EXPECT_THROW((void)balance(small, SeparatorSolution(small, 3, 0.03, {0, 1})), InfeasibleError);
}

TEST(Balance, RandomInputsBecomeFeasible) {
  Random rng(34);
  int balanced = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const Graph graph = fixture::random_small_graph(rng, 150);
    const BlockID k = 2 + static_cast<BlockID>(rng() % 7);
    const SeparatorSolution solution = fixture::random_valid_solution(graph, k, 0.03, rng);
    SeparatorSolution result;
    try {
      result = balance(graph, solution);
    } catch (const InfeasibleError &) {
      continue;
    }
    ++balanced;
    EXPECT_TRUE(is_feasible(graph, result));
    EXPECT_EQ(result.total_weight(), solution.total_weight());
  }
  EXPECT_GT(balanced, 100);
}
} // namespace
} // namespace nodesep
