/*******************************************************************************
 * @file:   contraction.cc
 * @brief:  Matching contraction and transfer of separators between levels.
 ******************************************************************************/
#include "nodesep/contraction.h"

#include <algorithm>

#include "nodesep/errors.h"

namespace nodesep {
ContractionMap contract(const Graph &graph, std::span<const std::pair<NodeID, NodeID>> matching) {
  const NodeID n = graph.n();
  std::vector<NodeID> mate(n, kInvalidNode);
  for (const auto &[u, v] : matching) {
    if (u < 0 || u >= n || v < 0 || v >= n || u == v || graph.find_edge(u, v) < 0) {
      throw InvalidArgument("matching contains a non-edge");
    }
    if (mate[u] != kInvalidNode || mate[v] != kInvalidNode) {
      throw InvalidArgument("matching edges share a node");
    }
    mate[u] = v;
    mate[v] = u;
  }

  ContractionMap map;
  map.fine_to_coarse.assign(n, kInvalidNode);
  std::vector<std::pair<NodeID, NodeID>> members; // coarse node -> (first, second or invalid)
  for (NodeID u = 0; u < n; ++u) {
    if (map.fine_to_coarse[u] != kInvalidNode) {
      continue;
    }
    const auto c = static_cast<NodeID>(members.size());
    map.fine_to_coarse[u] = c;
    if (mate[u] != kInvalidNode) {
      map.fine_to_coarse[mate[u]] = c;
    }
    members.emplace_back(u, mate[u]);
  }

  const auto coarse_n = static_cast<NodeID>(members.size());
  std::vector<EdgeID> offsets(coarse_n + 1, 0);
  std::vector<NodeID> targets;
  std::vector<EdgeWeight> weights;
  std::vector<NodeWeight> node_weights(coarse_n, 0);
  targets.reserve(graph.directed_m());
  weights.reserve(graph.directed_m());

  std::vector<EdgeID> position(coarse_n, -1);
  std::vector<std::pair<NodeID, EdgeWeight>> row;
  for (NodeID c = 0; c < coarse_n; ++c) {
    row.clear();
    auto aggregate = [&](const NodeID u) {
      node_weights[c] += graph.node_weight(u);
      for (EdgeID e = graph.first_edge(u); e < graph.first_invalid_edge(u); ++e) {
        const NodeID cv = map.fine_to_coarse[graph.edge_target(e)];
        if (cv == c) {
          continue;
        }
        if (position[cv] < 0) {
          position[cv] = static_cast<EdgeID>(row.size());
          row.emplace_back(cv, 0);
        }
        row[position[cv]].second += graph.edge_weight(e);
      }
    };
    aggregate(members[c].first);
    if (members[c].second != kInvalidNode) {
      aggregate(members[c].second);
    }
    for (const auto &[cv, w] : row) {
      position[cv] = -1;
    }
    std::sort(row.begin(), row.end());
    for (const auto &[cv, w] : row) {
      targets.push_back(cv);
      weights.push_back(w);
    }
    offsets[c + 1] = static_cast<EdgeID>(targets.size());
  }

  map.coarse = Graph(std::move(offsets), std::move(targets), std::move(weights), std::move(node_weights));
  return map;
}

EdgeFlags contract_edge_flags(const Graph &fine, const ContractionMap &map, const EdgeFlags &fine_flags) {
  EdgeFlags coarse_flags(map.coarse.directed_m(), 0);
  for (NodeID u = 0; u < fine.n(); ++u) {
    const NodeID cu = map.fine_to_coarse[u];
    for (EdgeID e = fine.first_edge(u); e < fine.first_invalid_edge(u); ++e) {
      if (!fine_flags[e]) {
        continue;
      }
      const NodeID cv = map.fine_to_coarse[fine.edge_target(e)];
      if (cu != cv) {
        coarse_flags[map.coarse.find_edge(cu, cv)] = 1;
      }
    }
  }
  return coarse_flags;
}

SeparatorSolution project_solution(const SeparatorSolution &coarse_solution, const Graph &fine,
                                   const ContractionMap &map) {
  std::vector<BlockID> assignment(fine.n());
  for (NodeID u = 0; u < fine.n(); ++u) {
    assignment[u] = coarse_solution.block(map.fine_to_coarse[u]);
  }
  return {fine, coarse_solution.k(), coarse_solution.epsilon(), std::move(assignment),
          coarse_solution.max_block_weights()};
}

SeparatorSolution restrict_solution(const SeparatorSolution &fine_solution, const ContractionMap &map) {
  std::vector<BlockID> assignment(map.coarse.n(), -1);
  for (NodeID u = 0; u < fine_solution.n(); ++u) {
    BlockID &label = assignment[map.fine_to_coarse[u]];
    if (label >= 0 && label != fine_solution.block(u)) {
      throw InvalidArgument("contracted node covers differently labelled nodes");
    }
    label = fine_solution.block(u);
  }
  return {map.coarse, fine_solution.k(), fine_solution.epsilon(), std::move(assignment),
          fine_solution.max_block_weights()};
}
} // namespace nodesep
