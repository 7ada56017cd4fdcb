/*******************************************************************************
 * @file:   edge_rating.cc
 * @brief:  Edge rating functions used to rank contraction candidates.
 ******************************************************************************/
#include "nodesep/coarsening/edge_rating.h"

#include <string>

#include "nodesep/errors.h"

namespace nodesep {
EdgeRatingFunction parse_edge_rating(const std::string_view name) {
  if (name == "expansion2") {
    return EdgeRatingFunction::kExpansionStar2;
  }
  if (name == "weight") {
    return EdgeRatingFunction::kWeight;
  }
  throw InvalidArgument("unknown rating function: " + std::string(name));
}

std::string_view to_string(const EdgeRatingFunction function) {
  switch (function) {
  case EdgeRatingFunction::kExpansionStar2:
    return "expansion2";
  case EdgeRatingFunction::kWeight:
    return "weight";
  }
  return "unknown";
}

std::vector<double> rate_edges(const Graph &graph, const EdgeRatingFunction function) {
  std::vector<double> rating(graph.directed_m());
  for (NodeID u = 0; u < graph.n(); ++u) {
    for (EdgeID e = graph.first_edge(u); e < graph.first_invalid_edge(u); ++e) {
      const auto w = static_cast<double>(graph.edge_weight(e));
      if (function == EdgeRatingFunction::kWeight) {
        rating[e] = w;
      } else {
        const NodeID v = graph.edge_target(e);
        rating[e] = w * w / (static_cast<double>(graph.node_weight(u)) * static_cast<double>(graph.node_weight(v)));
      }
    }
  }
  return rating;
}

std::vector<double> rate_edges(const Graph &graph, const std::string_view function) {
  return rate_edges(graph, parse_edge_rating(function));
}
} // namespace nodesep
