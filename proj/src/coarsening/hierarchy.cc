/*******************************************************************************
 * @file:   hierarchy.cc
 * @brief:  Multilevel hierarchy built by repeated GPA matching and contraction.
 ******************************************************************************/
#include "nodesep/coarsening/hierarchy.h"

#include "nodesep/coarsening/gpa_matching.h"

namespace nodesep {
Hierarchy::Hierarchy(const Graph &input, EdgeFlags input_blocked)
    : _input(&input), _input_blocked(std::move(input_blocked)) {
  if (_input_blocked.empty()) {
    _input_blocked.assign(input.directed_m(), 0);
  }
}

const Graph &Hierarchy::graph(const std::size_t level) const {
  return level == 0 ? *_input : _levels[level - 1].map.coarse;
}

const EdgeFlags &Hierarchy::blocked(const std::size_t level) const {
  return level == 0 ? _input_blocked : _levels[level - 1].blocked;
}

std::vector<NodeID> Hierarchy::input_to_coarsest() const {
  std::vector<NodeID> mapping(_input->n());
  for (NodeID u = 0; u < _input->n(); ++u) {
    NodeID cur = u;
    for (const Level &level : _levels) {
      cur = level.map.fine_to_coarse[cur];
    }
    mapping[u] = cur;
  }
  return mapping;
}

SeparatorSolution Hierarchy::restrict_to_coarsest(const SeparatorSolution &solution) const {
  SeparatorSolution current = solution;
  for (const Level &level : _levels) {
    current = restrict_solution(current, level.map);
  }
  return current;
}

void Hierarchy::push_level(Matching matching, ContractionMap map, EdgeFlags coarse_blocked) {
  _levels.push_back({std::move(matching), std::move(map), std::move(coarse_blocked)});
}

Hierarchy build_hierarchy(const Graph &graph, const EdgeFlags &blocked, const CoarseningStop stop,
                          const EdgeRatingFunction rating, Random &rng) {
  Hierarchy hierarchy(graph, blocked);
  while (true) {
    const std::size_t level = hierarchy.num_levels() - 1;
    const Graph &current = hierarchy.graph(level);
    if (stop.kind == CoarseningStop::Kind::kNodeThreshold && current.n() <= stop.threshold) {
      break;
    }

    const std::vector<double> scores = rate_edges(current, rating);
    Matching matching = gpa_matching(current, scores, hierarchy.blocked(level), rng);
    if (matching.empty()) {
      break;
    }
    ContractionMap map = contract(current, matching);
    EdgeFlags coarse_blocked = contract_edge_flags(current, map, hierarchy.blocked(level));
    hierarchy.push_level(std::move(matching), std::move(map), std::move(coarse_blocked));
  }
  return hierarchy;
}
} // namespace nodesep
