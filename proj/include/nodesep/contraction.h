/*******************************************************************************
 * @file:   contraction.h
 * @brief:  Matching contraction and transfer of separators between levels.
 ******************************************************************************/
#pragma once

#include <span>
#include <utility>
#include <vector>

#include "nodesep/graph.h"
#include "nodesep/separator_solution.h"

namespace nodesep {
using Matching = std::vector<std::pair<NodeID, NodeID>>;

struct ContractionMap {
  Graph coarse;
  /// fine node -> coarse node; surjective onto [0, coarse.n()).
  std::vector<NodeID> fine_to_coarse;
};

/// Contracts every matched pair into one node whose weight is the sum of both;
/// edges that become parallel are merged with their weights summed. Coarse ids
/// follow the order of the smallest fine member. Throws InvalidArgument if the
/// edges share endpoints or are not edges of `graph`.
ContractionMap contract(const Graph &graph, std::span<const std::pair<NodeID, NodeID>> matching);

/// A coarse edge is flagged iff at least one fine edge mapped onto it is.
EdgeFlags contract_edge_flags(const Graph &fine, const ContractionMap &map, const EdgeFlags &fine_flags);

/// Every fine node inherits the label of its coarse node. Weights are unchanged.
SeparatorSolution project_solution(const SeparatorSolution &coarse_solution, const Graph &fine,
                                   const ContractionMap &map);

/// Inverse direction: the coarse label is the common label of all fine members.
/// Throws InvalidArgument if some coarse node covers differently labelled nodes.
SeparatorSolution restrict_solution(const SeparatorSolution &fine_solution, const ContractionMap &map);
} // namespace nodesep
