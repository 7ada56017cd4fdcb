/*******************************************************************************
 * @file:   flow_refinement.h
 * @brief:  Flow-based improvement of 2-way node separators.
 ******************************************************************************/
#pragma once

#include <vector>

#include "nodesep/flow/flow_problem.h"
#include "nodesep/separator_solution.h"

namespace nodesep {
enum class FlowRegionMode {
  /// Every minimum cut of the resulting problem yields a balanced separator.
  kStrict,
  /// The slack used for growing the region is multiplied by alpha; cuts may
  /// violate the balance constraint.
  kAggressive,
};

/// Limits refinement must respect: a block may grow up to its regular limit,
/// an already overloaded block may not grow any further.
std::vector<NodeWeight> refinement_limits(const SeparatorSolution &solution);

/// Region = separator grown by one BFS into each block. Source side is the
/// heavier block (block 0 on ties). A region node is attached to the source
/// if it still has a neighbour of the source block outside the region, and to
/// the sink likewise. Throws InvalidArgument if the separator is empty or the
/// solution is not 2-way.
FlowProblem construct_flow_region(const Graph &graph, const SeparatorSolution &solution, FlowRegionMode mode,
                                  double alpha);

/// Relabels the region according to the minimum cut: source side -> source
/// block, cut -> separator, rest -> sink block.
SeparatorSolution apply_min_cut(const Graph &graph, const SeparatorSolution &solution, const FlowProblem &problem,
                                const MaxFlowResult &cut);

/// Tries aggressive regions with alpha, alpha / 2, ... (max_retries halvings)
/// and finally a strict region. Never returns a heavier separator than the
/// input; the output respects refinement_limits(input).
SeparatorSolution flow_improve_2way(const Graph &graph, const SeparatorSolution &solution, double alpha = 2.0,
                                    int max_retries = 3);
} // namespace nodesep
