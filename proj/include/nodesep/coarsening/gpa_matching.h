/*******************************************************************************
 * @file:   gpa_matching.h
 * @brief:  Global Path Algorithm: grows paths and even cycles from edges in
 *          order of decreasing rating, then picks a maximum rating matching
 *          on every path and cycle by dynamic programming.
 ******************************************************************************/
#pragma once

#include <span>
#include <vector>

#include "nodesep/contraction.h"
#include "nodesep/graph.h"

namespace nodesep {
/// `rating` has one entry per directed edge. Edges flagged in `blocked` (may be
/// empty) are never matched. Equal ratings are ordered randomly.
Matching gpa_matching(const Graph &graph, std::span<const double> rating, const EdgeFlags &blocked,
                      Random &rng);

/// Maximum rating matching on a path whose i-th edge joins path nodes i and
/// i + 1. Returns the chosen edge indices in ascending order.
std::vector<std::size_t> max_rating_path_matching(std::span<const double> rating);

/// Same for a cycle: edge i joins i and (i + 1) mod size.
std::vector<std::size_t> max_rating_cycle_matching(std::span<const double> rating);
} // namespace nodesep
