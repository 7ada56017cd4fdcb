/*******************************************************************************
 * @file:   fm_refinement.cc
 * @brief:  Localized FM search moving separator nodes into blocks.
 ******************************************************************************/
#include "nodesep/flow/fm_refinement.h"

#include <algorithm>
#include <queue>
#include <tuple>

#include "nodesep/flow/flow_refinement.h"

namespace nodesep {
SeparatorMove best_separator_move(const Graph &graph, const SeparatorSolution &solution, const NodeID u,
                                  std::span<const NodeWeight> limits) {
  // weight of the non-separator neighbourhood, split by block
  std::vector<std::pair<BlockID, NodeWeight>> adjacent;
  NodeWeight neighbourhood = 0;
  for (const NodeID v : graph.neighbors(u)) {
    if (solution.in_separator(v)) {
      continue;
    }
    const BlockID b = solution.block(v);
    neighbourhood += graph.node_weight(v);
    auto it = std::find_if(adjacent.begin(), adjacent.end(), [b](const auto &p) { return p.first == b; });
    if (it == adjacent.end()) {
      adjacent.emplace_back(b, graph.node_weight(v));
    } else {
      it->second += graph.node_weight(v);
    }
  }

  const NodeWeight weight = graph.node_weight(u);
  SeparatorMove best;
  auto consider = [&](const BlockID b, const NodeWeight gain) {
    if (solution.block_weight(b) + weight > limits[b]) {
      return;
    }
    if (best.target < 0 || gain > best.gain ||
        (gain == best.gain && solution.block_weight(b) < solution.block_weight(best.target))) {
      best = {b, gain};
    }
  };

  if (adjacent.empty()) {
    for (BlockID b = 0; b < solution.k(); ++b) {
      consider(b, weight);
    }
  } else {
    for (const auto &[b, w] : adjacent) {
      consider(b, weight - (neighbourhood - w));
    }
  }
  return best;
}

void move_into_block(const Graph &graph, SeparatorSolution &solution, const NodeID u, const BlockID target,
                     std::vector<NodeID> *moved) {
  const BlockID sep = solution.separator_id();
  solution.move(graph, u, target);
  if (moved) {
    moved->push_back(u);
  }
  for (const NodeID v : graph.neighbors(u)) {
    if (solution.block(v) != sep && solution.block(v) != target) {
      solution.move(graph, v, sep);
      if (moved) {
        moved->push_back(v);
      }
    }
  }
}

SeparatorSolution fm_local_search(const Graph &graph, const SeparatorSolution &solution,
                                  std::span<const NodeID> start_nodes, Random &rng, int max_unsuccessful_moves) {
  if (start_nodes.empty()) {
    return solution;
  }
  if (max_unsuccessful_moves <= 0) {
    max_unsuccessful_moves = 25 * static_cast<int>(start_nodes.size());
  }

  const std::vector<NodeWeight> limits = refinement_limits(solution);
  SeparatorSolution current = solution;

  // (gain, random tie breaker, node); stale entries are re-evaluated on pop
  using Entry = std::tuple<NodeWeight, std::uint64_t, NodeID>;
  std::priority_queue<Entry> queue;
  std::vector<std::uint8_t> left_separator(graph.n(), 0);

  auto push = [&](const NodeID u) {
    if (!current.in_separator(u) || left_separator[u]) {
      return;
    }
    const SeparatorMove move = best_separator_move(graph, current, u, limits);
    if (move.target >= 0) {
      queue.emplace(move.gain, rng(), u);
    }
  };
  for (const NodeID u : start_nodes) {
    push(u);
  }

  struct Change {
    NodeID node;
    BlockID to;
  };
  std::vector<Change> log;
  std::size_t best_log_size = 0;
  NodeWeight best_weight = current.separator_weight();
  int unsuccessful = 0;
  std::vector<NodeID> moved;

  while (!queue.empty() && unsuccessful < max_unsuccessful_moves) {
    const auto [key, tie, u] = queue.top();
    queue.pop();
    if (!current.in_separator(u) || left_separator[u]) {
      continue;
    }
    const SeparatorMove move = best_separator_move(graph, current, u, limits);
    if (move.target < 0) {
      continue;
    }
    if (move.gain != key) {
      queue.emplace(move.gain, tie, u);
      continue;
    }

    moved.clear();
    move_into_block(graph, current, u, move.target, &moved);
    for (const NodeID v : moved) {
      log.push_back({v, current.block(v)});
    }
    left_separator[u] = 1;

    if (current.separator_weight() < best_weight) {
      best_weight = current.separator_weight();
      best_log_size = log.size();
      unsuccessful = 0;
    } else {
      ++unsuccessful;
    }

    for (std::size_t i = 1; i < moved.size(); ++i) {
      push(moved[i]);
      for (const NodeID v : graph.neighbors(moved[i])) {
        push(v);
      }
    }
    for (const NodeID v : graph.neighbors(u)) {
      push(v);
    }
  }

  if (best_log_size == 0) {
    return solution;
  }
  // replay the prefix up to the best state on a fresh copy
  SeparatorSolution result = solution;
  for (std::size_t i = 0; i < best_log_size; ++i) {
    result.move(graph, log[i].node, log[i].to);
  }
  return result;
}
} // namespace nodesep
