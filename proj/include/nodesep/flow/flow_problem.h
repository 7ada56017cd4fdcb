/*******************************************************************************
 * @file:   flow_problem.h
 * @brief:  Node-capacitated s-t flow problems and their maximum flow.
 ******************************************************************************/
#pragma once

#include <vector>

#include "nodesep/graph.h"

namespace nodesep {
/// Every node v of `network` is split into an in-node and an out-node joined
/// by an arc of capacity c(v); each edge becomes two infinite arcs out(u) ->
/// in(v) and out(v) -> in(u). The source feeds the in-node of every node
/// flagged in `source_attached`, the out-node of every node flagged in
/// `sink_attached` drains into the sink; both with infinite capacity. The only
/// finite arcs are the split arcs, so minimum cuts are node sets.
struct FlowProblem {
  Graph network;
  /// network node -> node of the original graph
  std::vector<NodeID> region_to_graph;
  std::vector<std::uint8_t> source_attached;
  std::vector<std::uint8_t> sink_attached;
  /// Block whose border feeds the source / sink (-1 if not derived from a
  /// 2-way solution).
  BlockID source_block = -1;
  BlockID sink_block = -1;
};

struct MaxFlowResult {
  NodeWeight value = 0;
  /// Network nodes whose split arc crosses the source-side minimum cut.
  std::vector<NodeID> cut_nodes;
  /// 1 if the node's out-node is reachable from the source in the residual
  /// network, i.e. the node lies strictly on the source side.
  std::vector<std::uint8_t> source_side;
};

/// Exact maximum flow (Dinic). The returned cut always satisfies
/// value == sum of the cut nodes' weights.
MaxFlowResult max_flow(const FlowProblem &problem);
} // namespace nodesep
