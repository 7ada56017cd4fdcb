/*******************************************************************************
 * @file:   fixtures.h
 * @brief:  Random instances and solutions for property tests.
 ******************************************************************************/
#pragma once

#include <vector>

#include "nodesep/graph.h"
#include "nodesep/separator_solution.h"

namespace nodesep::fixture {
/// Valid solution: k regions grown by a randomized multi-source BFS, one
/// endpoint of every conflicting edge moved into the separator, plus each
/// remaining node moved into the separator with probability `thickening`.
SeparatorSolution random_valid_solution(const Graph &graph, BlockID k, double epsilon, Random &rng,
                                        double thickening = 0.05);

/// random_valid_solution() followed by balancing.
SeparatorSolution random_feasible_solution(const Graph &graph, BlockID k, double epsilon, Random &rng,
                                           double thickening = 0.05);

/// Mixed corpus of small random graphs (geometric, gnm, grids, trees), some
/// with random weights and several components.
Graph random_small_graph(Random &rng, NodeID max_n);
} // namespace nodesep::fixture
