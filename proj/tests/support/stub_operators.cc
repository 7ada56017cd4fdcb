/*******************************************************************************
 * @file:   stub_operators.cc
 * @brief:  Operators without evolution for protocol tests.
 ******************************************************************************/
#include "stub_operators.h"

namespace nodesep::fixture {
Individual individual_with_separator(const Graph &edgeless, const std::vector<NodeID> &separator) {
  std::vector<BlockID> labels(edgeless.n(), 0);
  for (const NodeID u : separator) {
    labels[u] = 2;
  }
  return Individual(SeparatorSolution(edgeless, 2, 10.0, std::move(labels)));
}

StubOperators::StubOperators(const NodeID n, const NodeWeight create_fitness)
    : _graph(Graph::from_edges(n, {})),
      _create_fitness(create_fitness) {}

Individual StubOperators::with_fitness(const NodeWeight fitness) const {
  std::vector<NodeID> separator;
  for (NodeID u = 0; u < fitness; ++u) {
    separator.push_back(u);
  }
  return individual_with_separator(_graph, separator);
}

Individual StubOperators::create(Random &) {
  return with_fitness(_create_fitness);
}

Individual StubOperators::combine(const Individual &p, const Individual &c, Random &) {
  return p.fitness <= c.fitness ? p : c;
}

Individual StubOperators::mutate(const Individual &p, Random &) {
  return p;
}

bool StubOperators::feasible(const Individual &individual) const {
  return individual.solution.n() == _graph.n() && check_solution(_graph, individual.solution).valid;
}
} // namespace nodesep::fixture
