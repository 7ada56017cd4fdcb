/*******************************************************************************
 * @file:   kway_refinement.h
 * @brief:  k-way separator local search: preprocessing to directly separating
 *          separators, pairwise refinement of adjoint blocks and balancing.
 ******************************************************************************/
#pragma once

#include <utility>
#include <vector>

#include "nodesep/separator_solution.h"

namespace nodesep {
struct PairwiseConfig {
  int rounds_cap = 10;
  double flow_alpha = 2.0;
  int flow_retries = 3;
  /// FM stops after factor * |start nodes| moves without improvement.
  int fm_unsuccessful_factor = 25;
};

/// Removes separator nodes that do not directly separate two blocks, highest
/// number of adjacent blocks first: a node seeing a single block joins it, a
/// node seeing no block joins the lightest block. Only removes separator
/// nodes; the result may be imbalanced.
SeparatorSolution preprocess(const Graph &graph, const SeparatorSolution &solution);

/// Pairs (a, b), a < b, sharing a directly separating separator node.
std::vector<std::pair<BlockID, BlockID>> adjoint_pairs(const Graph &graph, const SeparatorSolution &solution);

/// Rounds of 2-way refinement (flow, then FM) on the subgraph induced by two
/// adjoint blocks and the separator nodes separating exactly those two. A pair
/// is dropped once its refinement fails to improve.
SeparatorSolution pairwise_local_search(const Graph &graph, const SeparatorSolution &solution, Random &rng,
                                        const PairwiseConfig &config = {});

/// Refines the pair (a, b) in place. Returns true on improvement.
bool refine_pair(const Graph &graph, SeparatorSolution &solution, BlockID a, BlockID b, Random &rng,
                 const PairwiseConfig &config = {});

/// Returns a valid balanced solution, moving weight from the heaviest block
/// towards the lightest one along shortest quotient graph paths, or directly
/// if no path exists. Throws InfeasibleError for k > n or if some node is
/// heavier than the block limit.
SeparatorSolution balance(const Graph &graph, const SeparatorSolution &solution);

/// Same moves as balance() without the feasibility check and without the last
/// resort of pushing overloaded nodes into the separator, for coarse levels
/// where nodes may be heavier than a block. Returns whether the result is
/// balanced.
bool balance_best_effort(const Graph &graph, SeparatorSolution &solution);
} // namespace nodesep
