/*******************************************************************************
 * @file:   vertex_cover.cc
 * @brief:  Node separators from edge separators via minimum weight vertex
 *          covers of the bipartite cut-edge graph.
 ******************************************************************************/
#include "nodesep/flow/vertex_cover.h"

#include "nodesep/errors.h"
#include "nodesep/flow/flow_problem.h"

namespace nodesep {
std::vector<NodeID> min_weight_cut_cover(const Graph &graph, std::span<const BlockID> labels, const BlockID a,
                                         const BlockID b) {
  std::vector<NodeID> local(graph.n(), -1);
  FlowProblem problem;
  std::vector<WeightedEdge> edges;
  std::vector<NodeWeight> weights;

  auto local_id = [&](const NodeID u) {
    if (local[u] < 0) {
      local[u] = static_cast<NodeID>(problem.region_to_graph.size());
      problem.region_to_graph.push_back(u);
      weights.push_back(graph.node_weight(u));
    }
    return local[u];
  };

  for (NodeID u = 0; u < graph.n(); ++u) {
    if (labels[u] != a) {
      continue;
    }
    for (const NodeID v : graph.neighbors(u)) {
      if (labels[v] == b) {
        edges.push_back({local_id(u), local_id(v), 1});
      }
    }
  }
  if (edges.empty()) {
    return {};
  }

  const auto size = static_cast<NodeID>(problem.region_to_graph.size());
  problem.network = Graph::from_edges(size, edges, std::move(weights));
  problem.source_attached.resize(size);
  problem.sink_attached.resize(size);
  for (NodeID i = 0; i < size; ++i) {
    problem.source_attached[i] = labels[problem.region_to_graph[i]] == a;
    problem.sink_attached[i] = labels[problem.region_to_graph[i]] == b;
  }

  std::vector<NodeID> cover;
  for (const NodeID i : max_flow(problem).cut_nodes) {
    cover.push_back(problem.region_to_graph[i]);
  }
  return cover;
}

SeparatorSolution separator_from_boundary(const Graph &graph, std::span<const BlockID> two_blocks,
                                          const double epsilon) {
  if (static_cast<NodeID>(two_blocks.size()) != graph.n()) {
    throw InvalidArgument("bipartition size does not match the graph");
  }
  std::vector<BlockID> assignment(two_blocks.begin(), two_blocks.end());
  for (const BlockID b : assignment) {
    if (b != 0 && b != 1) {
      throw InvalidArgument("bipartition labels must be 0 or 1");
    }
  }
  for (const NodeID u : min_weight_cut_cover(graph, two_blocks, 0, 1)) {
    assignment[u] = 2;
  }
  return {graph, 2, epsilon, std::move(assignment)};
}
} // namespace nodesep
