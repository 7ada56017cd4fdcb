/*******************************************************************************
 * @file:   simple_baseline.cc
 * @brief:  Baseline separator derived from a k-way edge partition by pairwise
 *          vertex covers of the cut edges.
 ******************************************************************************/
#include "nodesep/bench/simple_baseline.h"

#include <algorithm>
#include <cmath>
#include <queue>
#include <random>
#include <tuple>

#include "nodesep/coarsening/hierarchy.h"
#include "nodesep/errors.h"
#include "nodesep/flow/vertex_cover.h"
#include "nodesep/kway/kway_refinement.h"
#include "nodesep/multilevel/multilevel.h"

namespace nodesep {
namespace {
constexpr NodeID kCoarsestEdgeBisection = 100;
constexpr int kBisectionAttempts = 5;

NodeWeight share_limit(const NodeWeight total, const BlockID part, const BlockID count, const double epsilon) {
  const auto share = static_cast<NodeWeight>(std::ceil(static_cast<double>(total) * part / count));
  return static_cast<NodeWeight>(std::floor((1.0 + epsilon) * static_cast<double>(share) + 1e-9));
}

EdgeWeight edge_cut(const Graph &graph, const std::vector<BlockID> &sides) {
  EdgeWeight cut = 0;
  for (NodeID u = 0; u < graph.n(); ++u) {
    for (EdgeID e = graph.first_edge(u); e < graph.first_invalid_edge(u); ++e) {
      if (sides[u] != sides[graph.edge_target(e)]) {
        cut += graph.edge_weight(e);
      }
    }
  }
  return cut / 2;
}

NodeWeight overload(const NodeWeight weights[2], const NodeWeight limits[2]) {
  return std::max<NodeWeight>(0, weights[0] - limits[0]) + std::max<NodeWeight>(0, weights[1] - limits[1]);
}

EdgeWeight move_gain(const Graph &graph, const std::vector<BlockID> &sides, const NodeID u) {
  EdgeWeight gain = 0;
  for (EdgeID e = graph.first_edge(u); e < graph.first_invalid_edge(u); ++e) {
    gain += sides[graph.edge_target(e)] == sides[u] ? -graph.edge_weight(e) : graph.edge_weight(e);
  }
  return gain;
}

bool fm_pass(const Graph &graph, std::vector<BlockID> &sides, const NodeWeight limits[2], Random &rng) {
  NodeWeight weights[2] = {0, 0};
  for (NodeID u = 0; u < graph.n(); ++u) {
    weights[sides[u]] += graph.node_weight(u);
  }
  EdgeWeight cut = edge_cut(graph, sides);

  using Entry = std::tuple<EdgeWeight, std::uint64_t, NodeID>;
  std::priority_queue<Entry> queue;
  std::vector<std::uint8_t> moved(graph.n(), 0);
  for (NodeID u = 0; u < graph.n(); ++u) {
    for (const NodeID v : graph.neighbors(u)) {
      if (sides[v] != sides[u]) {
        queue.emplace(move_gain(graph, sides, u), rng(), u);
        break;
      }
    }
  }

  std::vector<NodeID> log;
  std::size_t best_prefix = 0;
  std::tuple<NodeWeight, EdgeWeight> best_score{overload(weights, limits), cut};
  const std::size_t patience = std::max<std::size_t>(50, graph.n() / 10);
  while (!queue.empty() && log.size() - best_prefix < patience) {
    const auto [gain, tie, u] = queue.top();
    queue.pop();
    if (moved[u]) {
      continue;
    }
    const EdgeWeight current = move_gain(graph, sides, u);
    if (current != gain) {
      queue.emplace(current, tie, u);
      continue;
    }
    const BlockID from = sides[u];
    const BlockID to = 1 - from;
    const NodeWeight w = graph.node_weight(u);
    const bool helps_balance = weights[from] > limits[from] && weights[to] + w <= std::max(limits[to], weights[to]);
    if (weights[to] + w > limits[to] && !helps_balance) {
      continue;
    }
    moved[u] = 1;
    sides[u] = to;
    weights[from] -= w;
    weights[to] += w;
    cut -= gain;
    log.push_back(u);
    const std::tuple<NodeWeight, EdgeWeight> score{overload(weights, limits), cut};
    if (score < best_score) {
      best_score = score;
      best_prefix = log.size();
    }
    for (const NodeID v : graph.neighbors(u)) {
      if (!moved[v]) {
        queue.emplace(move_gain(graph, sides, v), rng(), v);
      }
    }
  }
  for (std::size_t i = log.size(); i > best_prefix; --i) {
    sides[log[i - 1]] = 1 - sides[log[i - 1]];
  }
  return best_prefix > 0;
}

void edge_partition_recursive(const Graph &graph, const std::vector<NodeID> &nodes, const BlockID first,
                              const BlockID count, const double epsilon, std::vector<BlockID> &labels,
                              Random &rng) {
  if (nodes.empty()) {
    return;
  }
  if (count == 1) {
    for (const NodeID u : nodes) {
      labels[u] = first;
    }
    return;
  }
  const BlockID k0 = count / 2;
  const Graph sub = induced_subgraph(graph, nodes);
  const NodeWeight total = sub.total_node_weight();
  const NodeWeight limits[2] = {share_limit(total, k0, count, epsilon), share_limit(total, count - k0, count, epsilon)};
  const std::vector<BlockID> sides = edge_bisection(sub, static_cast<double>(total) * k0 / count, limits, rng);

  std::vector<NodeID> parts[2];
  for (NodeID i = 0; i < sub.n(); ++i) {
    parts[sides[i]].push_back(nodes[i]);
  }
  edge_partition_recursive(graph, parts[0], first, k0, epsilon, labels, rng);
  edge_partition_recursive(graph, parts[1], first + k0, count - k0, epsilon, labels, rng);
}
} // namespace

EdgeWeight fm_edge_refine(const Graph &graph, std::vector<BlockID> &sides, const NodeWeight limits[2], Random &rng,
                          const int max_passes) {
  for (int pass = 0; pass < max_passes; ++pass) {
    if (!fm_pass(graph, sides, limits, rng)) {
      break;
    }
  }
  return edge_cut(graph, sides);
}

std::vector<BlockID> edge_bisection(const Graph &graph, const double target_weight, const NodeWeight limits[2],
                                    Random &rng) {
  const Hierarchy hierarchy = build_hierarchy(graph, {}, CoarseningStop::node_threshold(kCoarsestEdgeBisection),
                                              EdgeRatingFunction::kExpansionStar2, rng);
  const Graph &coarsest = hierarchy.coarsest();

  std::vector<BlockID> best;
  std::tuple<NodeWeight, EdgeWeight> best_score{};
  for (int attempt = 0; attempt < kBisectionAttempts; ++attempt) {
    std::vector<BlockID> sides = grow_bisection(coarsest, target_weight, rng);
    const EdgeWeight cut = fm_edge_refine(coarsest, sides, limits, rng);
    NodeWeight weights[2] = {0, 0};
    for (NodeID u = 0; u < coarsest.n(); ++u) {
      weights[sides[u]] += coarsest.node_weight(u);
    }
    const std::tuple<NodeWeight, EdgeWeight> score{overload(weights, limits), cut};
    if (attempt == 0 || score < best_score) {
      best = std::move(sides);
      best_score = score;
    }
  }

  for (std::size_t level = hierarchy.num_levels() - 1; level > 0; --level) {
    const Graph &fine = hierarchy.graph(level - 1);
    const ContractionMap &map = hierarchy.map(level - 1);
    std::vector<BlockID> projected(fine.n());
    for (NodeID u = 0; u < fine.n(); ++u) {
      projected[u] = best[map.fine_to_coarse[u]];
    }
    fm_edge_refine(fine, projected, limits, rng);
    best = std::move(projected);
  }
  return best;
}

std::vector<BlockID> edge_partition(const Graph &graph, const BlockID k, const double epsilon, Random &rng) {
  if (k < 1) {
    throw InvalidArgument("number of blocks must be positive");
  }
  std::vector<NodeID> all(graph.n());
  for (NodeID u = 0; u < graph.n(); ++u) {
    all[u] = u;
  }
  std::vector<BlockID> labels(graph.n(), 0);
  edge_partition_recursive(graph, all, 0, k, epsilon, labels, rng);
  return labels;
}

SeparatorSolution simple_baseline(const Graph &graph, const BlockID k, const double epsilon, Random &rng) {
  if (k > graph.n()) {
    throw InfeasibleError("too many blocks");
  }
  const std::vector<BlockID> labels = edge_partition(graph, k, epsilon, rng);

  std::vector<std::vector<std::uint8_t>> adjacent(k, std::vector<std::uint8_t>(k, 0));
  for (NodeID u = 0; u < graph.n(); ++u) {
    for (const NodeID v : graph.neighbors(u)) {
      adjacent[labels[u]][labels[v]] = 1;
    }
  }
  std::vector<BlockID> assignment = labels;
  for (BlockID a = 0; a < k; ++a) {
    for (BlockID b = a + 1; b < k; ++b) {
      if (!adjacent[a][b]) {
        continue;
      }
      for (const NodeID u : min_weight_cut_cover(graph, labels, a, b)) {
        assignment[u] = k;
      }
    }
  }
  return balance(graph, SeparatorSolution(graph, k, epsilon, std::move(assignment)));
}
} // namespace nodesep
