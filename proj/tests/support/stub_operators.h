/*******************************************************************************
 * @file:   stub_operators.h
 * @brief:  Operators without evolution for protocol tests.
 ******************************************************************************/
#pragma once

#include <vector>

#include "nodesep/island/island.h"

namespace nodesep::fixture {
/// Individual on an edgeless graph whose separator is exactly `separator`.
Individual individual_with_separator(const Graph &edgeless, const std::vector<NodeID> &separator);

/// create() hands out individuals of a fixed fitness, combine() and mutate()
/// return the fitter parent unchanged.
class StubOperators : public Operators {
public:
  StubOperators(NodeID n, NodeWeight create_fitness);

  Individual create(Random &rng) override;
  Individual combine(const Individual &p, const Individual &c, Random &rng) override;
  Individual mutate(const Individual &p, Random &rng) override;
  [[nodiscard]] bool feasible(const Individual &individual) const override;

  [[nodiscard]] const Graph &graph() const { return _graph; }
  [[nodiscard]] Individual with_fitness(NodeWeight fitness) const;

private:
  Graph _graph;
  NodeWeight _create_fitness;
};
} // namespace nodesep::fixture
