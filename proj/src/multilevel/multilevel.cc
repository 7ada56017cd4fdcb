/*******************************************************************************
 * @file:   multilevel.cc
 * @brief:  Multilevel separator solver and iterated V-cycles.
 ******************************************************************************/
#include "nodesep/multilevel/multilevel.h"

#include <algorithm>
#include <cmath>
#include <queue>

#include "nodesep/errors.h"
#include "nodesep/flow/flow_refinement.h"
#include "nodesep/flow/fm_refinement.h"
#include "nodesep/flow/vertex_cover.h"

namespace nodesep {
namespace {
bool better(const SeparatorSolution &a, const SeparatorSolution &b) {
  if (a.is_balanced() != b.is_balanced()) {
    return a.is_balanced();
  }
  return a.separator_weight() < b.separator_weight();
}

NodeWeight share_limit(const NodeWeight total, const BlockID part, const BlockID count, const double epsilon) {
  const auto share = static_cast<NodeWeight>(std::ceil(static_cast<double>(total) * part / count));
  return static_cast<NodeWeight>(std::floor((1.0 + epsilon) * static_cast<double>(share) + 1e-9));
}

void bisect_recursive(const Graph &graph, const std::vector<NodeID> &nodes, const BlockID first,
                      const BlockID count, const double epsilon, std::vector<BlockID> &assignment,
                      const BlockID separator, Random &rng, const MultilevelConfig &config) {
  if (nodes.empty()) {
    return;
  }
  if (count == 1) {
    for (const NodeID u : nodes) {
      assignment[u] = first;
    }
    return;
  }

  const BlockID k0 = count / 2;
  const BlockID k1 = count - k0;
  const Graph sub = induced_subgraph(graph, nodes);
  const NodeWeight total = sub.total_node_weight();
  const std::vector<BlockID> sides =
      grow_bisection(sub, static_cast<double>(total) * k0 / count, rng);

  SeparatorSolution bisection = separator_from_boundary(sub, sides, epsilon);
  std::vector<BlockID> labels(bisection.assignment().begin(), bisection.assignment().end());
  bisection = SeparatorSolution(sub, 2, epsilon, std::move(labels),
                                {share_limit(total, k0, count, epsilon), share_limit(total, k1, count, epsilon)});
  balance_best_effort(sub, bisection);
  if (bisection.separator_weight() > 0) {
    bisection = flow_improve_2way(sub, bisection, config.pairwise.flow_alpha, config.pairwise.flow_retries);
    const std::vector<NodeID> start = bisection.separator_nodes();
    bisection = fm_local_search(sub, bisection, start, rng);
  }

  std::vector<NodeID> part0;
  std::vector<NodeID> part1;
  for (NodeID i = 0; i < sub.n(); ++i) {
    switch (bisection.block(i)) {
    case 0:
      part0.push_back(nodes[i]);
      break;
    case 1:
      part1.push_back(nodes[i]);
      break;
    default:
      assignment[nodes[i]] = separator;
    }
  }
  bisect_recursive(graph, part0, first, k0, epsilon, assignment, separator, rng, config);
  bisect_recursive(graph, part1, first + k0, k1, epsilon, assignment, separator, rng, config);
}

// Last node reached by a BFS from `start` that ignores `excluded` nodes,
// repeated twice.
NodeID pseudo_peripheral_node(const Graph &graph, NodeID start, const std::vector<std::uint8_t> &excluded) {
  std::vector<NodeID> distance(graph.n(), -1);
  std::vector<NodeID> touched;
  std::queue<NodeID> queue;
  for (int sweep = 0; sweep < 2; ++sweep) {
    for (const NodeID u : touched) {
      distance[u] = -1;
    }
    touched.assign(1, start);
    distance[start] = 0;
    queue.push(start);
    NodeID last = start;
    while (!queue.empty()) {
      const NodeID u = queue.front();
      queue.pop();
      last = u;
      for (const NodeID v : graph.neighbors(u)) {
        if (distance[v] < 0 && !excluded[v]) {
          distance[v] = distance[u] + 1;
          touched.push_back(v);
          queue.push(v);
        }
      }
    }
    start = last;
  }
  return start;
}

SeparatorSolution balance_level(const Graph &graph, SeparatorSolution solution, const bool finest) {
  if (finest) {
    return balance(graph, solution);
  }
  balance_best_effort(graph, solution);
  return solution;
}
} // namespace

NodeID coarsening_threshold(const MultilevelConfig &config, const BlockID k) {
  return config.coarsest_nodes > 0 ? config.coarsest_nodes : std::max<NodeID>(1000, 30 * k);
}

std::vector<BlockID> grow_bisection(const Graph &graph, const double target_weight, Random &rng) {
  std::vector<BlockID> sides(graph.n(), 1);
  std::vector<NodeID> order(graph.n());
  for (NodeID u = 0; u < graph.n(); ++u) {
    order[u] = u;
  }
  std::shuffle(order.begin(), order.end(), rng);

  std::vector<std::uint8_t> visited(graph.n(), 0);
  NodeWeight weight = 0;
  std::queue<NodeID> queue;
  for (const NodeID start : order) {
    if (static_cast<double>(weight) >= target_weight) {
      break;
    }
    if (visited[start]) {
      continue;
    }
    const NodeID root = pseudo_peripheral_node(graph, start, visited);
    visited[root] = 1;
    queue.push(root);
    while (!queue.empty() && static_cast<double>(weight) < target_weight) {
      const NodeID u = queue.front();
      queue.pop();
      sides[u] = 0;
      weight += graph.node_weight(u);
      for (const NodeID v : graph.neighbors(u)) {
        if (!visited[v]) {
          visited[v] = 1;
          queue.push(v);
        }
      }
    }
  }
  return sides;
}

SeparatorSolution initial_separator_on_level(const Graph &graph, const BlockID k, const double epsilon,
                                             Random &rng, const MultilevelConfig &config, const bool finest) {
  if (k < 1) {
    throw InvalidArgument("number of blocks must be positive");
  }
  std::vector<NodeID> all(graph.n());
  for (NodeID u = 0; u < graph.n(); ++u) {
    all[u] = u;
  }

  SeparatorSolution best;
  // tiny coarsest graphs get proportionally more attempts
  const int scale = std::max<NodeID>(1, 256 / std::max<NodeID>(1, graph.n()));
  const int attempts = k == 1 ? 1 : std::max(1, config.initial_attempts) * scale;
  for (int attempt = 0; attempt < attempts; ++attempt) {
    std::vector<BlockID> assignment(graph.n(), 0);
    bisect_recursive(graph, all, 0, k, epsilon, assignment, k, rng, config);
    SeparatorSolution candidate(graph, k, epsilon, std::move(assignment));
    if (k > 1) {
      candidate = preprocess(graph, candidate);
      candidate = balance_level(graph, std::move(candidate), finest);
      candidate = pairwise_local_search(graph, candidate, rng, config.pairwise);
    }
    if (attempt == 0 || better(candidate, best)) {
      best = std::move(candidate);
    }
  }
  return best;
}

SeparatorSolution initial_separator(const Graph &graph, const BlockID k, const double epsilon, Random &rng,
                                    const MultilevelConfig &config) {
  if (k < 1) {
    throw InvalidArgument("number of blocks must be positive");
  }
  if (k > graph.n()) {
    throw InfeasibleError("too many blocks");
  }
  return initial_separator_on_level(graph, k, epsilon, rng, config, true);
}

SeparatorSolution refine_level(const Graph &graph, const SeparatorSolution &solution, Random &rng,
                               const MultilevelConfig &config, const bool finest) {
  SeparatorSolution result = balance_level(graph, preprocess(graph, solution), finest);
  if (solution.is_balanced() &&
      (!result.is_balanced() || result.separator_weight() > solution.separator_weight())) {
    result = solution;
  }
  return pairwise_local_search(graph, result, rng, config.pairwise);
}

SeparatorSolution uncoarsen(const Hierarchy &hierarchy, SeparatorSolution coarsest_solution, Random &rng,
                            const MultilevelConfig &config) {
  std::size_t level = hierarchy.num_levels() - 1;
  SeparatorSolution solution = refine_level(hierarchy.graph(level), coarsest_solution, rng, config, level == 0);
  while (level > 0) {
    --level;
    solution = project_solution(solution, hierarchy.graph(level), hierarchy.map(level));
    solution = refine_level(hierarchy.graph(level), solution, rng, config, level == 0);
  }
  return solution;
}

SeparatorSolution solve(const Graph &graph, const BlockID k, const double epsilon, const MultilevelConfig &config,
                        Random &rng) {
  if (k < 1) {
    throw InvalidArgument("number of blocks must be positive");
  }
  if (k > graph.n()) {
    throw InfeasibleError("too many blocks");
  }
  const Hierarchy hierarchy = build_hierarchy(
      graph, {}, CoarseningStop::node_threshold(coarsening_threshold(config, k)), config.rating, rng);
  const bool flat = hierarchy.num_levels() == 1;
  SeparatorSolution initial = initial_separator_on_level(hierarchy.coarsest(), k, epsilon, rng, config, flat);
  if (flat) {
    return initial;
  }

  std::size_t level = hierarchy.num_levels() - 1;
  SeparatorSolution solution = std::move(initial);
  while (level > 0) {
    --level;
    solution = project_solution(solution, hierarchy.graph(level), hierarchy.map(level));
    solution = refine_level(hierarchy.graph(level), solution, rng, config, level == 0);
  }
  return solution;
}

SeparatorSolution vcycle(const Graph &graph, const SeparatorSolution &solution, const MultilevelConfig &config,
                         Random &rng) {
  if (!is_feasible(graph, solution)) {
    throw InvalidArgument("vcycle requires a valid and balanced solution");
  }
  const Hierarchy hierarchy =
      build_hierarchy(graph, cut_edge_flags(graph, solution.assignment()),
                      CoarseningStop::node_threshold(coarsening_threshold(config, solution.k())), config.rating, rng);
  SeparatorSolution result = uncoarsen(hierarchy, hierarchy.restrict_to_coarsest(solution), rng, config);
  if (!is_feasible(graph, result) || result.separator_weight() > solution.separator_weight()) {
    return solution;
  }
  return result;
}
} // namespace nodesep
