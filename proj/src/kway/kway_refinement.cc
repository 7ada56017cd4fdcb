/*******************************************************************************
 * @file:   kway_refinement.cc
 * @brief:  k-way separator local search: preprocessing to directly separating
 *          separators, pairwise refinement of adjoint blocks and balancing.
 ******************************************************************************/
#include "nodesep/kway/kway_refinement.h"

#include <algorithm>
#include <deque>
#include <limits>
#include <queue>

#include "nodesep/errors.h"
#include "nodesep/flow/flow_refinement.h"
#include "nodesep/flow/fm_refinement.h"
#include "nodesep/quotient_graph.h"

namespace nodesep {
namespace {
int count_adjacent_blocks(const Graph &graph, const SeparatorSolution &solution, const NodeID u) {
  BlockID first = -1;
  for (const NodeID v : graph.neighbors(u)) {
    if (solution.in_separator(v)) {
      continue;
    }
    if (first < 0) {
      first = solution.block(v);
    } else if (solution.block(v) != first) {
      return 2;
    }
  }
  return first < 0 ? 0 : 1;
}

bool touches(const Graph &graph, const SeparatorSolution &solution, const NodeID u, const BlockID b) {
  for (const NodeID v : graph.neighbors(u)) {
    if (solution.block(v) == b) {
      return true;
    }
  }
  return false;
}

// Weight of the neighbours that would be pushed into the separator if u joined b.
NodeWeight push_cost(const Graph &graph, const SeparatorSolution &solution, const NodeID u, const BlockID b) {
  NodeWeight cost = 0;
  for (const NodeID v : graph.neighbors(u)) {
    if (!solution.in_separator(v) && solution.block(v) != b) {
      cost += graph.node_weight(v);
    }
  }
  return cost;
}

BlockID most_overloaded_block(const SeparatorSolution &solution) {
  BlockID best = -1;
  NodeWeight best_over = 0;
  for (BlockID b = 0; b < solution.k(); ++b) {
    const NodeWeight over = solution.block_weight(b) - solution.max_block_weight(b);
    if (over > best_over) {
      best = b;
      best_over = over;
    }
  }
  return best;
}

BlockID most_slack_block(const SeparatorSolution &solution) {
  BlockID best = 0;
  for (BlockID b = 1; b < solution.k(); ++b) {
    if (solution.max_block_weight(b) - solution.block_weight(b) >
        solution.max_block_weight(best) - solution.block_weight(best)) {
      best = b;
    }
  }
  return best;
}

void move_along_path(const Graph &graph, SeparatorSolution &solution, const std::vector<BlockID> &path,
                     const NodeWeight amount) {
  std::vector<NodeID> moved;
  for (std::size_t hop = 0; hop + 1 < path.size(); ++hop) {
    const BlockID from = path[hop];
    const BlockID to = path[hop + 1];
    const NodeWeight start_weight = solution.block_weight(from);

    std::priority_queue<std::pair<NodeWeight, NodeID>> queue;
    auto push = [&](const NodeID s) {
      if (solution.in_separator(s) && touches(graph, solution, s, from)) {
        queue.emplace(graph.node_weight(s) - push_cost(graph, solution, s, to), s);
      }
    };
    for (NodeID s = 0; s < graph.n(); ++s) {
      if (solution.in_separator(s) && touches(graph, solution, s, to)) {
        push(s);
      }
    }

    while (start_weight - solution.block_weight(from) < amount && !queue.empty()) {
      const auto [gain, s] = queue.top();
      queue.pop();
      if (!solution.in_separator(s) || !touches(graph, solution, s, from)) {
        continue;
      }
      const NodeWeight current = graph.node_weight(s) - push_cost(graph, solution, s, to);
      if (current != gain) {
        queue.emplace(current, s);
        continue;
      }
      moved.clear();
      move_into_block(graph, solution, s, to, &moved);
      for (const NodeID x : moved) {
        for (const NodeID y : graph.neighbors(x)) {
          push(y);
        }
      }
    }

    if (solution.block_weight(to) <= solution.max_block_weight(to)) {
      break;
    }
  }
}

bool direct_move(const Graph &graph, SeparatorSolution &solution, const BlockID from, const BlockID to) {
  const NodeWeight room = solution.max_block_weight(to) - solution.block_weight(to);
  NodeID best = kInvalidNode;
  NodeWeight best_cost = std::numeric_limits<NodeWeight>::max();
  for (NodeID u = 0; u < graph.n(); ++u) {
    if (solution.block(u) != from || graph.node_weight(u) > room) {
      continue;
    }
    const NodeWeight cost = push_cost(graph, solution, u, to);
    if (cost < best_cost) {
      best = u;
      best_cost = cost;
    }
  }
  if (best == kInvalidNode) {
    return false;
  }
  move_into_block(graph, solution, best, to);
  return true;
}

void balance_moves(const Graph &graph, SeparatorSolution &solution) {
  const std::int64_t max_iterations = 4 * static_cast<std::int64_t>(graph.n()) + 100;
  for (std::int64_t iteration = 0; iteration < max_iterations; ++iteration) {
    const BlockID heavy = most_overloaded_block(solution);
    if (heavy < 0) {
      return;
    }
    const BlockID light = most_slack_block(solution);
    const NodeWeight amount =
        std::min(solution.max_block_weight(light) - solution.block_weight(light),
                 solution.block_weight(heavy) - solution.max_block_weight(heavy));
    if (amount <= 0 || light == heavy) {
      return;
    }

    const NodeWeight excess_before = solution.excess();
    bool progress = false;
    const std::vector<BlockID> path = quotient_graph(graph, solution).shortest_path(heavy, light);
    if (path.size() >= 2) {
      SeparatorSolution candidate = solution;
      move_along_path(graph, candidate, path, amount);
      if (candidate.excess() < excess_before) {
        solution = std::move(candidate);
        progress = true;
      }
    }
    if (!progress) {
      SeparatorSolution candidate = solution;
      if (direct_move(graph, candidate, heavy, light) && candidate.excess() < excess_before) {
        solution = std::move(candidate);
        progress = true;
      }
    }
    if (!progress) {
      return;
    }
  }
}

// Moves nodes of overloaded blocks into the separator, closest to the
// separator first.
void dump_into_separator(const Graph &graph, SeparatorSolution &solution) {
  const BlockID sep = solution.separator_id();
  std::vector<std::uint8_t> seen(graph.n(), 0);
  std::deque<NodeID> queue;
  std::vector<NodeID> order;
  order.reserve(graph.n());
  auto drain = [&] {
    while (!queue.empty()) {
      const NodeID u = queue.front();
      queue.pop_front();
      order.push_back(u);
      for (const NodeID v : graph.neighbors(u)) {
        if (!seen[v]) {
          seen[v] = 1;
          queue.push_back(v);
        }
      }
    }
  };
  for (NodeID u = 0; u < graph.n(); ++u) {
    if (solution.in_separator(u)) {
      seen[u] = 1;
      queue.push_back(u);
    }
  }
  drain();
  for (NodeID u = 0; u < graph.n(); ++u) {
    if (!seen[u]) {
      seen[u] = 1;
      queue.push_back(u);
      drain();
    }
  }
  for (const NodeID u : order) {
    const BlockID b = solution.block(u);
    if (b != sep && solution.block_weight(b) > solution.max_block_weight(b)) {
      solution.move(graph, u, sep);
    }
  }
}
} // namespace

SeparatorSolution preprocess(const Graph &graph, const SeparatorSolution &solution) {
  SeparatorSolution result = solution;
  std::deque<NodeID> single;
  std::deque<NodeID> none;
  for (NodeID u = 0; u < graph.n(); ++u) {
    if (!result.in_separator(u)) {
      continue;
    }
    const int count = count_adjacent_blocks(graph, result, u);
    if (count == 1) {
      single.push_back(u);
    } else if (count == 0) {
      none.push_back(u);
    }
  }

  while (!single.empty() || !none.empty()) {
    std::deque<NodeID> &bucket = single.empty() ? none : single;
    const NodeID u = bucket.front();
    bucket.pop_front();
    if (!result.in_separator(u)) {
      continue;
    }
    const std::vector<BlockID> blocks = adjacent_blocks(graph, result, u);
    if (blocks.size() >= 2) {
      continue;
    }
    result.move(graph, u, blocks.empty() ? result.lightest_block() : blocks.front());
    for (const NodeID v : graph.neighbors(u)) {
      if (result.in_separator(v) && count_adjacent_blocks(graph, result, v) == 1) {
        single.push_back(v);
      }
    }
  }
  return result;
}

std::vector<std::pair<BlockID, BlockID>> adjoint_pairs(const Graph &graph, const SeparatorSolution &solution) {
  std::vector<std::pair<BlockID, BlockID>> pairs;
  const QuotientGraph quotient = quotient_graph(graph, solution);
  for (const QuotientEdge &edge : quotient.edges()) {
    pairs.emplace_back(edge.a, edge.b);
  }
  return pairs;
}

bool refine_pair(const Graph &graph, SeparatorSolution &solution, const BlockID a, const BlockID b, Random &rng,
                 const PairwiseConfig &config) {
  const BlockID sep = solution.separator_id();
  std::vector<NodeID> nodes;
  std::size_t num_separator = 0;
  for (NodeID u = 0; u < graph.n(); ++u) {
    const BlockID label = solution.block(u);
    if (label == a || label == b) {
      nodes.push_back(u);
    } else if (label == sep) {
      const std::vector<BlockID> blocks = adjacent_blocks(graph, solution, u);
      if (blocks.size() == 2 && blocks[0] == std::min(a, b) && blocks[1] == std::max(a, b)) {
        nodes.push_back(u);
        ++num_separator;
      }
    }
  }
  if (num_separator == 0) {
    return false;
  }

  const Graph local_graph = induced_subgraph(graph, nodes);
  std::vector<BlockID> local_labels(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const BlockID label = solution.block(nodes[i]);
    local_labels[i] = label == a ? 0 : (label == b ? 1 : 2);
  }
  SeparatorSolution local(local_graph, 2, solution.epsilon(), std::move(local_labels),
                          {solution.max_block_weight(a), solution.max_block_weight(b)});
  const NodeWeight before = local.separator_weight();

  local = flow_improve_2way(local_graph, local, config.flow_alpha, config.flow_retries);
  const std::vector<NodeID> start = local.separator_nodes();
  local = fm_local_search(local_graph, local, start, rng,
                          config.fm_unsuccessful_factor * static_cast<int>(std::max<std::size_t>(1, start.size())));
  if (local.separator_weight() >= before) {
    return false;
  }

  const BlockID to_global[3] = {a, b, sep};
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const BlockID label = to_global[local.block(static_cast<NodeID>(i))];
    if (solution.block(nodes[i]) != label) {
      solution.move(graph, nodes[i], label);
    }
  }
  return true;
}

SeparatorSolution pairwise_local_search(const Graph &graph, const SeparatorSolution &solution, Random &rng,
                                        const PairwiseConfig &config) {
  SeparatorSolution result = solution;
  std::vector<std::pair<BlockID, BlockID>> pairs = adjoint_pairs(graph, result);
  for (int round = 0; round < config.rounds_cap && !pairs.empty(); ++round) {
    std::vector<std::pair<BlockID, BlockID>> improved;
    for (const auto &[a, b] : pairs) {
      if (refine_pair(graph, result, a, b, rng, config)) {
        improved.emplace_back(a, b);
      }
    }
    pairs = std::move(improved);
  }
  return result;
}

bool balance_best_effort(const Graph &graph, SeparatorSolution &solution) {
  if (!solution.is_balanced()) {
    balance_moves(graph, solution);
  }
  return solution.is_balanced();
}

SeparatorSolution balance(const Graph &graph, const SeparatorSolution &solution) {
  if (solution.k() > graph.n()) {
    throw InfeasibleError("unbalanceable instance: more blocks than nodes");
  }
  const NodeWeight min_limit =
      *std::min_element(solution.max_block_weights().begin(), solution.max_block_weights().end());
  if (graph.max_node_weight() > min_limit) {
    throw InfeasibleError("unbalanceable instance: node heavier than the block limit");
  }
  SeparatorSolution result = solution;
  if (!balance_best_effort(graph, result)) {
    dump_into_separator(graph, result);
  }
  return result;
}
} // namespace nodesep
