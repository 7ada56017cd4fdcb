/*******************************************************************************
 * @file:   vertex_cover.h
 * @brief:  Node separators from edge separators via minimum weight vertex
 *          covers of the bipartite cut-edge graph.
 ******************************************************************************/
#pragma once

#include <span>
#include <vector>

#include "nodesep/separator_solution.h"

namespace nodesep {
/// Minimum weight vertex cover of the bipartite graph formed by the edges
/// between nodes labelled `a` and nodes labelled `b`, computed as a minimum
/// node cut of the corresponding flow problem.
std::vector<NodeID> min_weight_cut_cover(const Graph &graph, std::span<const BlockID> labels, BlockID a,
                                         BlockID b);

/// `two_blocks` assigns every node to side 0 or 1. The separator is a minimum
/// weight vertex cover of the cut edges; the remaining nodes keep their side.
SeparatorSolution separator_from_boundary(const Graph &graph, std::span<const BlockID> two_blocks,
                                          double epsilon);
} // namespace nodesep
