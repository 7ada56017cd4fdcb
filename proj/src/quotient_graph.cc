/*******************************************************************************
 * @file:   quotient_graph.cc
 * @brief:  Graph on blocks whose edges connect adjoint blocks.
 ******************************************************************************/
#include "nodesep/quotient_graph.h"

#include <algorithm>
#include <map>
#include <queue>
#include <tuple>

namespace nodesep {
QuotientGraph::QuotientGraph(const BlockID k, std::vector<QuotientEdge> edges)
    : _k(k), _edges(std::move(edges)), _adjacent(k) {
  std::sort(_edges.begin(), _edges.end(),
            [](const QuotientEdge &x, const QuotientEdge &y) { return std::tie(x.a, x.b) < std::tie(y.a, y.b); });
  for (const QuotientEdge &edge : _edges) {
    _adjacent[edge.a].push_back(edge.b);
    _adjacent[edge.b].push_back(edge.a);
  }
  for (auto &list : _adjacent) {
    std::sort(list.begin(), list.end());
  }
}

bool QuotientGraph::adjoint(const BlockID a, const BlockID b) const {
  return std::binary_search(_adjacent[a].begin(), _adjacent[a].end(), b);
}

std::vector<BlockID> QuotientGraph::shortest_path(const BlockID from, const BlockID to) const {
  std::vector<BlockID> parent(_k, -1);
  std::queue<BlockID> queue;
  parent[from] = from;
  queue.push(from);
  while (!queue.empty() && parent[to] < 0) {
    const BlockID cur = queue.front();
    queue.pop();
    for (const BlockID next : _adjacent[cur]) {
      if (parent[next] < 0) {
        parent[next] = cur;
        queue.push(next);
      }
    }
  }
  if (parent[to] < 0) {
    return {};
  }
  std::vector<BlockID> path{to};
  while (path.back() != from) {
    path.push_back(parent[path.back()]);
  }
  std::reverse(path.begin(), path.end());
  return path;
}

std::vector<BlockID> adjacent_blocks(const Graph &graph, const SeparatorSolution &solution, const NodeID u) {
  std::vector<BlockID> blocks;
  for (const NodeID v : graph.neighbors(u)) {
    if (!solution.in_separator(v)) {
      blocks.push_back(solution.block(v));
    }
  }
  std::sort(blocks.begin(), blocks.end());
  blocks.erase(std::unique(blocks.begin(), blocks.end()), blocks.end());
  return blocks;
}

QuotientGraph quotient_graph(const Graph &graph, const SeparatorSolution &solution) {
  std::map<std::pair<BlockID, BlockID>, std::vector<NodeID>> witnesses;
  for (NodeID u = 0; u < graph.n(); ++u) {
    if (!solution.in_separator(u)) {
      continue;
    }
    const std::vector<BlockID> blocks = adjacent_blocks(graph, solution, u);
    for (std::size_t i = 0; i < blocks.size(); ++i) {
      for (std::size_t j = i + 1; j < blocks.size(); ++j) {
        witnesses[{blocks[i], blocks[j]}].push_back(u);
      }
    }
  }

  std::vector<QuotientEdge> edges;
  edges.reserve(witnesses.size());
  for (auto &[pair, nodes] : witnesses) {
    edges.push_back({pair.first, pair.second, std::move(nodes)});
  }
  return {solution.k(), std::move(edges)};
}
} // namespace nodesep
