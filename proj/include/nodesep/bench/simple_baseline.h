/*******************************************************************************
 * @file:   simple_baseline.h
 * @brief:  Baseline separator derived from a k-way edge partition by pairwise
 *          vertex covers of the cut edges.
 ******************************************************************************/
#pragma once

#include <vector>

#include "nodesep/separator_solution.h"

namespace nodesep {
/// Multilevel 2-way edge partition: side 0 aims at `target_weight` with both
/// sides bounded by `limits`. Returns labels 0/1.
std::vector<BlockID> edge_bisection(const Graph &graph, double target_weight, const NodeWeight limits[2],
                                    Random &rng);

/// k-way edge partition by recursive edge bisection.
std::vector<BlockID> edge_partition(const Graph &graph, BlockID k, double epsilon, Random &rng);

/// Boundary FM on the edge cut of a 2-way partition; moves respect `limits`
/// and only the best prefix of each pass is kept. Returns the final cut.
EdgeWeight fm_edge_refine(const Graph &graph, std::vector<BlockID> &sides, const NodeWeight limits[2], Random &rng,
                          int max_passes = 3);

/// Union of minimum weight vertex covers of the cut edges between every pair
/// of blocks of an edge partition, followed by balancing.
SeparatorSolution simple_baseline(const Graph &graph, BlockID k, double epsilon, Random &rng);
} // namespace nodesep
