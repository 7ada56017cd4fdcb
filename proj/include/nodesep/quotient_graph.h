/*******************************************************************************
 * @file:   quotient_graph.h
 * @brief:  Graph on blocks whose edges connect adjoint blocks.
 ******************************************************************************/
#pragma once

#include <vector>

#include "nodesep/graph.h"
#include "nodesep/separator_solution.h"

namespace nodesep {
struct QuotientEdge {
  BlockID a; // a < b
  BlockID b;
  /// Separator nodes with non-separator neighbours in both a and b.
  std::vector<NodeID> witnesses;
};

class QuotientGraph {
public:
  QuotientGraph(BlockID k, std::vector<QuotientEdge> edges);

  [[nodiscard]] BlockID k() const { return _k; }
  /// Sorted by (a, b).
  [[nodiscard]] const std::vector<QuotientEdge> &edges() const { return _edges; }
  [[nodiscard]] const std::vector<BlockID> &neighbors(BlockID b) const { return _adjacent[b]; }
  [[nodiscard]] bool adjoint(BlockID a, BlockID b) const;

  /// Shortest (hop count) path from `from` to `to`, both inclusive; ties are
  /// broken towards smaller block ids. Empty if `to` is unreachable.
  [[nodiscard]] std::vector<BlockID> shortest_path(BlockID from, BlockID to) const;

private:
  BlockID _k;
  std::vector<QuotientEdge> _edges;
  std::vector<std::vector<BlockID>> _adjacent;
};

QuotientGraph quotient_graph(const Graph &graph, const SeparatorSolution &solution);

/// Distinct non-separator blocks adjacent to `u`, in ascending order.
std::vector<BlockID> adjacent_blocks(const Graph &graph, const SeparatorSolution &solution, NodeID u);
} // namespace nodesep
