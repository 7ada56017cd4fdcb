#include <array>

#include <gtest/gtest.h>

#include "fixtures.h"
#include "nodesep/bench/generators.h"
#include "nodesep/coarsening/hierarchy.h"
#include "nodesep/errors.h"
#include "nodesep/evolution/evolution.h"
#include "nodesep/multilevel/multilevel.h"
#include "oracles.h"
#include "stub_operators.h"

namespace nodesep {
namespace {
const Graph &edgeless() {
  static const Graph graph = Graph::from_edges(12, {});
  return graph;
}

Individual with_separator(const std::vector<NodeID> &separator) {
  return fixture::individual_with_separator(edgeless(), separator);
}

EvolutionConfig small_config() {
  EvolutionConfig config;
  config.multilevel.coarsest_nodes = 30;
  return config;
}

TEST(PopulationSize, Examples) {
  EXPECT_EQ(estimate_population_size(2.0, 120.0, 10.0), 6U);
  EXPECT_EQ(estimate_population_size(1e9, 120.0, 10.0), 3U);
  EXPECT_EQ(estimate_population_size(60.0, 60.0, 1.0), 3U);
  EXPECT_EQ(estimate_population_size(0.1, 100.0, 10.0), 100U);
}

TEST(Tournament, PrefersFitterIndividual) {
  Population population(2);
  population.add(with_separator({0, 1, 2, 3, 4}));
  population.add(with_separator({0, 1, 2, 3, 4, 5, 6, 7, 8}));
  Random rng(1);
  for (int trial = 0; trial < 20; ++trial) {
    EXPECT_EQ(tournament_select(population, rng).fitness, 5);
  }
}

TEST(Tournament, SingletonAndEmpty) {
  Population population(1);
  Random rng(1);
  EXPECT_THROW((void)tournament_select(population, rng), InvalidArgument);
  population.add(with_separator({3}));
  EXPECT_EQ(tournament_select(population, rng).fitness, 1);
}

TEST(Tournament, SelectionFrequencies) {
  Population population(3);
  population.add(with_separator({0}));
  population.add(with_separator({0, 1}));
  population.add(with_separator({0, 1, 2}));
  Random rng(2);
  std::array<int, 4> count{};
  constexpr int kTrials = 10000;
  for (int trial = 0; trial < kTrials; ++trial) {
    ++count[tournament_select(population, rng).fitness];
  }
  EXPECT_GT(count[1], count[3]);
  EXPECT_NEAR(count[1] / static_cast<double>(kTrials), 2.0 / 3.0, 0.03);
}

TEST(Tournament, TiesAreRandom) {
  Population population(2);
  population.add(with_separator({0}));
  population.add(with_separator({1}));
  Random rng(3);
  int first = 0;
  for (int trial = 0; trial < 2000; ++trial) {
    first += tournament_select(population, rng).separator[0] == 0;
  }
  EXPECT_NEAR(first / 2000.0, 0.5, 0.05);
}

TEST(Similarity, Examples) {
  const std::vector<NodeID> a = {1, 2, 3};
  const std::vector<NodeID> b = {2, 3, 4};
  EXPECT_EQ(similarity(a, b), 2);
  EXPECT_EQ(similarity(a, a), 0);
  EXPECT_EQ(similarity(a, {}), 3);
}

TEST(Similarity, IsAMetric) {
  Random rng(4);
  auto random_set = [&] {
    std::vector<NodeID> set;
    for (NodeID u = 0; u < 20; ++u) {
      if (rng() % 2 == 0) {
        set.push_back(u);
      }
    }
    return set;
  };
  for (int trial = 0; trial < 500; ++trial) {
    const auto x = random_set();
    const auto y = random_set();
    const auto z = random_set();
    EXPECT_EQ(similarity(x, y), similarity(y, x));
    EXPECT_EQ(similarity(x, y) == 0, x == y);
    EXPECT_LE(similarity(x, z), similarity(x, y) + similarity(y, z));
  }
}

TEST(Eviction, BelowCapacityInserts) {
  Population population(2);
  Random rng(1);
  EXPECT_TRUE(insert_with_eviction(population, with_separator({0, 1, 2}), rng));
  EXPECT_EQ(population.size(), 1U);
}

TEST(Eviction, WorseOffspringIsDiscarded) {
  Population population(2);
  population.add(with_separator({0}));
  population.add(with_separator({1, 2}));
  Random rng(1);
  EXPECT_FALSE(insert_with_eviction(population, with_separator({0, 1, 2, 3}), rng));
  EXPECT_EQ(population[0].fitness, 1);
  EXPECT_EQ(population[1].fitness, 2);
}

TEST(Eviction, DuplicateIsReplaced) {
  Population population(2);
  population.add(with_separator({0, 1}));
  population.add(with_separator({2, 3}));
  Random rng(1);
  EXPECT_TRUE(insert_with_eviction(population, with_separator({2, 3}), rng));
  EXPECT_EQ(population[0].separator, (std::vector<NodeID>{0, 1}));
  EXPECT_EQ(population[1].separator, (std::vector<NodeID>{2, 3}));
}

TEST(Eviction, MostSimilarCandidate) {
  Population population(3);
  population.add(with_separator({2, 3}));          // similarity 4
  population.add(with_separator({0, 2}));          // similarity 2
  population.add(with_separator({2, 3, 4, 5, 6})); // similarity 7
  Random rng(1);
  EXPECT_TRUE(insert_with_eviction(population, with_separator({0, 1}), rng));
  EXPECT_EQ(population[0].separator, (std::vector<NodeID>{2, 3}));
  EXPECT_EQ(population[1].separator, (std::vector<NodeID>{0, 1}));
  EXPECT_EQ(population[2].fitness, 5);
}

TEST(Eviction, SimilarityTieEvictsWorse) {
  Population population(2);
  population.add(with_separator({0, 1}));       // similarity 2
  population.add(with_separator({0, 1, 2, 3})); // similarity 2
  Random rng(1);
  EXPECT_TRUE(insert_with_eviction(population, with_separator({0, 1, 2}), rng));
  EXPECT_EQ(population[1].fitness, 3);
  EXPECT_EQ(population[0].fitness, 2);
}

class EvolutionOperators : public ::testing::Test {
protected:
  void SetUp() override {
    Random rng(51);
    graph = gen::random_geometric(600, 0.07, rng);
  }

  Graph graph;
};

TEST_F(EvolutionOperators, CombineNeverWorseThanBetterParent) {
  Random rng(52);
  const EvolutionConfig config = small_config();
  for (int trial = 0; trial < 10; ++trial) {
    const Individual p(solve(graph, 4, 0.03, config.multilevel, rng));
    const Individual c(solve(graph, 4, 0.03, config.multilevel, rng));
    const Individual &fitter = p.fitness <= c.fitness ? p : c;
    const Individual &other = p.fitness <= c.fitness ? c : p;
    bool fell_back = false;
    const Individual offspring = combine(graph, fitter, other, config, rng, &fell_back);
    EXPECT_TRUE(is_feasible(graph, offspring.solution));
    EXPECT_LE(offspring.fitness, std::min(p.fitness, c.fitness));
    EXPECT_EQ(offspring.fitness, offspring.solution.separator_weight());
  }
}

TEST_F(EvolutionOperators, SelfCombine) {
  Random rng(53);
  const EvolutionConfig config = small_config();
  const Individual p(solve(graph, 2, 0.03, config.multilevel, rng));
  EXPECT_LE(combine(graph, p, p, config, rng).fitness, p.fitness);
}

TEST_F(EvolutionOperators, MutateIsFeasibleAndDeterministic) {
  Random rng(54);
  const EvolutionConfig config = small_config();
  const Individual p(solve(graph, 4, 0.03, config.multilevel, rng));
  for (int trial = 0; trial < 5; ++trial) {
    EXPECT_TRUE(is_feasible(graph, mutate(graph, p, config, rng).solution));
  }
  Random a(7);
  Random b(7);
  EXPECT_EQ(mutate(graph, p, config, a).solution, mutate(graph, p, config, b).solution);
}

TEST_F(EvolutionOperators, ParentSurvivesBlockedCoarsening) {
  Random rng(55);
  const EvolutionConfig config = small_config();
  const Individual p(solve(graph, 4, 0.03, config.multilevel, rng));
  const Hierarchy hierarchy = build_hierarchy(graph, cut_edge_flags(graph, p.solution.assignment()),
                                              CoarseningStop::no_contractible_edge(),
                                              EdgeRatingFunction::kExpansionStar2, rng);
  const SeparatorSolution coarse = hierarchy.restrict_to_coarsest(p.solution);
  EXPECT_TRUE(is_feasible(hierarchy.coarsest(), coarse));
  EXPECT_EQ(coarse.separator_weight(), p.fitness);
}

TEST(Combine, TwoComponentsInheritBetterHalves) {
  // Two paths of five nodes; each parent is thin on one path, thick on the other.
  const Graph graph = gen::disjoint_union({gen::path(5), gen::path(5)});
  const Individual p(SeparatorSolution(graph, 4, 0.03, {0, 0, 4, 1, 1, 2, 4, 4, 4, 3}));
  const Individual c(SeparatorSolution(graph, 4, 0.03, {0, 4, 4, 4, 1, 2, 2, 4, 3, 3}));
  ASSERT_TRUE(is_feasible(graph, p.solution));
  ASSERT_TRUE(is_feasible(graph, c.solution));
  ASSERT_EQ(p.fitness, 4);
  ASSERT_EQ(c.fitness, 4);
  Random rng(6);
  const Individual offspring = combine(graph, p, c, small_config(), rng);
  EXPECT_TRUE(is_feasible(graph, offspring.solution));
  EXPECT_EQ(offspring.fitness, oracle::min_separator_weight(graph, 4, 0.03));
}
} // namespace
} // namespace nodesep
