/*******************************************************************************
 * @file:   oracles.h
 * @brief:  Exhaustive reference solvers for small instances.
 ******************************************************************************/
#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "nodesep/flow/flow_problem.h"
#include "nodesep/graph.h"

namespace nodesep::oracle {
/// Minimum separator weight over all node subsets S such that the components
/// of G - S can be packed into k blocks of weight at most
/// floor((1 + eps) * ceil(c(V) / k)). -1 if no such S exists. n <= 20.
NodeWeight min_separator_weight(const Graph &graph, BlockID k, double epsilon);

/// Whether the given weights fit into `bins` bins of capacity `capacity`.
bool fits_into_bins(std::vector<NodeWeight> weights, BlockID bins, NodeWeight capacity);

/// Maximum total rating of pairwise disjoint edges of a path (edge i joins
/// nodes i and i + 1) or cycle, by enumeration of edge subsets.
double max_path_matching_rating(std::span<const double> rating);
double max_cycle_matching_rating(std::span<const double> rating);

/// Minimum weight of a node set whose removal disconnects every source
/// attached node from every sink attached node. n <= 20.
NodeWeight min_node_cut(const FlowProblem &problem);

/// Minimum weight vertex cover of the edges between label a and label b.
NodeWeight min_vertex_cover(const Graph &graph, std::span<const BlockID> labels, BlockID a, BlockID b);
} // namespace nodesep::oracle
