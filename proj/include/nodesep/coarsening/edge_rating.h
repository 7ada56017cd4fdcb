/*******************************************************************************
 * @file:   edge_rating.h
 * @brief:  Edge rating functions used to rank contraction candidates.
 ******************************************************************************/
#pragma once

#include <string_view>
#include <vector>

#include "nodesep/graph.h"

namespace nodesep {
enum class EdgeRatingFunction {
  /// w(e)^2 / (c(u) * c(v))
  kExpansionStar2,
  /// w(e)
  kWeight,
};

/// Accepts "expansion2" and "weight"; throws InvalidArgument otherwise.
EdgeRatingFunction parse_edge_rating(std::string_view name);
std::string_view to_string(EdgeRatingFunction function);

/// One score per directed edge; both directions carry the same score.
std::vector<double> rate_edges(const Graph &graph, EdgeRatingFunction function);
std::vector<double> rate_edges(const Graph &graph, std::string_view function);
} // namespace nodesep
