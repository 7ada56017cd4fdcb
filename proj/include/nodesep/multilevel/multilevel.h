/*******************************************************************************
 * @file:   multilevel.h
 * @brief:  Multilevel separator solver and iterated V-cycles.
 ******************************************************************************/
#pragma once

#include <vector>

#include "nodesep/coarsening/edge_rating.h"
#include "nodesep/coarsening/hierarchy.h"
#include "nodesep/kway/kway_refinement.h"
#include "nodesep/separator_solution.h"

namespace nodesep {
struct MultilevelConfig {
  /// Coarsening stops once the graph has at most this many nodes; 0 selects
  /// max(1000, 30 * k).
  NodeID coarsest_nodes = 0;
  EdgeRatingFunction rating = EdgeRatingFunction::kExpansionStar2;
  /// Independent initial separators computed on the coarsest graph.
  int initial_attempts = 4;
  PairwiseConfig pairwise;
};

NodeID coarsening_threshold(const MultilevelConfig &config, BlockID k);

/// Side 0 is grown by BFS from random nodes until it weighs at least
/// `target_weight`; every other node is on side 1.
std::vector<BlockID> grow_bisection(const Graph &graph, double target_weight, Random &rng);

/// k-way separator by recursive bisection followed by k-way refinement. Throws
/// InvalidArgument for k < 1 and InfeasibleError ("too many blocks") for k > n.
SeparatorSolution initial_separator(const Graph &graph, BlockID k, double epsilon, Random &rng,
                                    const MultilevelConfig &config = {});

/// Same as initial_separator() without the k > n check. Unless `finest` is
/// set, balancing is best effort since coarse nodes may be heavier than a
/// block.
SeparatorSolution initial_separator_on_level(const Graph &graph, BlockID k, double epsilon, Random &rng,
                                             const MultilevelConfig &config, bool finest);

/// preprocess -> balance -> pairwise local search. A balanced input never
/// gets worse. Strict balancing is used iff `finest`.
SeparatorSolution refine_level(const Graph &graph, const SeparatorSolution &solution, Random &rng,
                               const MultilevelConfig &config, bool finest);

/// Refines `coarsest_solution` on the coarsest level, then projects and
/// refines level by level down to the input graph of `hierarchy`.
SeparatorSolution uncoarsen(const Hierarchy &hierarchy, SeparatorSolution coarsest_solution, Random &rng,
                            const MultilevelConfig &config);

SeparatorSolution solve(const Graph &graph, BlockID k, double epsilon, const MultilevelConfig &config,
                        Random &rng);

/// Re-coarsens with all cut edges of `solution` blocked, applies `solution` on
/// the coarsest level and refines upwards. Never returns a heavier separator.
/// Throws InvalidArgument unless the input is valid and balanced.
SeparatorSolution vcycle(const Graph &graph, const SeparatorSolution &solution, const MultilevelConfig &config,
                         Random &rng);
} // namespace nodesep
