/*******************************************************************************
 * @file:   fixtures.cc
 * @brief:  Random instances and solutions for property tests.
 ******************************************************************************/
#include "fixtures.h"

#include <algorithm>
#include <deque>
#include <random>

#include "nodesep/bench/generators.h"
#include "nodesep/kway/kway_refinement.h"

namespace nodesep::fixture {
SeparatorSolution random_valid_solution(const Graph &graph, const BlockID k, const double epsilon, Random &rng,
                                        const double thickening) {
  const NodeID n = graph.n();
  std::vector<BlockID> labels(n, -1);
  std::vector<NodeID> order(n);
  for (NodeID u = 0; u < n; ++u) {
    order[u] = u;
  }
  std::shuffle(order.begin(), order.end(), rng);

  std::deque<NodeID> queue;
  for (BlockID b = 0; b < std::min<BlockID>(k, n); ++b) {
    labels[order[b]] = b;
    queue.push_back(order[b]);
  }
  std::size_t next_seed = static_cast<std::size_t>(std::min<BlockID>(k, n));
  while (true) {
    while (!queue.empty()) {
      const std::size_t pick = std::uniform_int_distribution<std::size_t>(0, std::min<std::size_t>(queue.size() - 1, 3))(rng);
      const NodeID u = queue[pick];
      queue.erase(queue.begin() + static_cast<std::ptrdiff_t>(pick));
      for (const NodeID v : graph.neighbors(u)) {
        if (labels[v] < 0) {
          labels[v] = labels[u];
          queue.push_back(v);
        }
      }
    }
    while (next_seed < order.size() && labels[order[next_seed]] >= 0) {
      ++next_seed;
    }
    if (next_seed == order.size()) {
      break;
    }
    labels[order[next_seed]] = static_cast<BlockID>(rng() % k);
    queue.push_back(order[next_seed]);
  }

  std::bernoulli_distribution thicken(thickening);
  for (const NodeID u : order) {
    if (labels[u] == k) {
      continue;
    }
    bool conflict = false;
    for (const NodeID v : graph.neighbors(u)) {
      conflict |= labels[v] != k && labels[v] != labels[u];
    }
    if (conflict || thicken(rng)) {
      labels[u] = k;
    }
  }
  return {graph, k, epsilon, std::move(labels)};
}

SeparatorSolution random_feasible_solution(const Graph &graph, const BlockID k, const double epsilon, Random &rng,
                                           const double thickening) {
  return balance(graph, random_valid_solution(graph, k, epsilon, rng, thickening));
}

Graph random_small_graph(Random &rng, const NodeID max_n) {
  const NodeID n = std::max<NodeID>(4, static_cast<NodeID>(rng() % static_cast<std::uint64_t>(max_n + 1)));
  Graph graph;
  switch (rng() % 5) {
  case 0:
    graph = gen::random_geometric(n, 2.0 / std::sqrt(static_cast<double>(n)), rng);
    break;
  case 1:
    graph = gen::random_gnm(n, 2 * static_cast<EdgeID>(n), rng);
    break;
  case 2: {
    const NodeID rows = std::max<NodeID>(2, static_cast<NodeID>(std::sqrt(static_cast<double>(n))));
    graph = gen::grid(rows, std::max<NodeID>(2, n / rows));
    break;
  }
  case 3:
    graph = gen::random_tree(n, rng);
    break;
  default:
    graph = gen::disjoint_union({gen::random_gnm(n / 2, n, rng), gen::cycle(n - n / 2)});
  }
  if (rng() % 3 == 0) {
    graph = gen::with_random_weights(graph, 3, 5, rng);
  }
  return graph;
}
} // namespace nodesep::fixture
