/*******************************************************************************
 * @file:   generators.h
 * @brief:  Synthetic graph families for tests and benchmarks.
 ******************************************************************************/
#pragma once

#include <vector>

#include "nodesep/graph.h"

namespace nodesep::gen {
Graph path(NodeID n);
Graph cycle(NodeID n);
/// rows x cols 4-neighbourhood grid, node (r, c) has id r * cols + c.
Graph grid(NodeID rows, NodeID cols);
/// Uniform random graph with m distinct edges (fewer if m exceeds n(n-1)/2).
Graph random_gnm(NodeID n, EdgeID m, Random &rng);
/// Unit square, nodes closer than `radius` are adjacent.
Graph random_geometric(NodeID n, double radius, Random &rng);
/// Random recursive tree: node i attaches to a uniform node < i.
Graph random_tree(NodeID n, Random &rng);
/// Nodes of later parts are shifted behind earlier parts.
Graph disjoint_union(const std::vector<Graph> &parts);
/// Same topology with node weights drawn uniformly from [1, max_node_weight]
/// and edge weights from [1, max_edge_weight].
Graph with_random_weights(const Graph &graph, NodeWeight max_node_weight, EdgeWeight max_edge_weight,
                          Random &rng);
} // namespace nodesep::gen
