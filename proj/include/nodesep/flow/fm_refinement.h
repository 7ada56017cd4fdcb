/*******************************************************************************
 * @file:   fm_refinement.h
 * @brief:  Localized FM search moving separator nodes into blocks.
 ******************************************************************************/
#pragma once

#include <span>
#include <vector>

#include "nodesep/separator_solution.h"

namespace nodesep {
struct SeparatorMove {
  BlockID target = -1;
  /// c(v) minus the weight of the neighbours that must join the separator.
  NodeWeight gain = 0;
};

/// Best move of separator node `u` whose target stays within `limits`; target
/// is -1 if no block can take `u`. Ties prefer the lighter block.
SeparatorMove best_separator_move(const Graph &graph, const SeparatorSolution &solution, NodeID u,
                                  std::span<const NodeWeight> limits);

/// Moves `u` into `target` and pushes its non-separator neighbours outside
/// `target` into the separator. Appends every relabelled node to `moved`.
void move_into_block(const Graph &graph, SeparatorSolution &solution, NodeID u, BlockID target,
                     std::vector<NodeID> *moved = nullptr);

/// Starts from `start_nodes` (separator nodes) and repeatedly performs the best
/// move of the queue; every node leaves the separator at most once, nodes that
/// join the separator become eligible. Stops after `max_unsuccessful_moves`
/// moves without a new best and rolls back to the best state seen. A
/// non-positive limit selects 25 * |start_nodes|.
SeparatorSolution fm_local_search(const Graph &graph, const SeparatorSolution &solution,
                                  std::span<const NodeID> start_nodes, Random &rng,
                                  int max_unsuccessful_moves = 0);
} // namespace nodesep
