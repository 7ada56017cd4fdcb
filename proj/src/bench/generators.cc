/*******************************************************************************
 * @file:   generators.cc
 * @brief:  Synthetic graph families for tests and benchmarks.
 ******************************************************************************/
#include "nodesep/bench/generators.h"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <utility>

#include "nodesep/errors.h"

namespace nodesep::gen {
namespace {
void require_nonnegative(const NodeID n) {
  if (n < 0) {
    throw InvalidArgument("negative node count");
  }
}
} // namespace

Graph path(const NodeID n) {
  require_nonnegative(n);
  std::vector<WeightedEdge> edges;
  for (NodeID u = 0; u + 1 < n; ++u) {
    edges.push_back({u, u + 1});
  }
  return Graph::from_edges(n, edges);
}

Graph cycle(const NodeID n) {
  if (n < 3) {
    return path(n);
  }
  std::vector<WeightedEdge> edges;
  for (NodeID u = 0; u < n; ++u) {
    edges.push_back({u, (u + 1) % n});
  }
  return Graph::from_edges(n, edges);
}

Graph grid(const NodeID rows, const NodeID cols) {
  require_nonnegative(rows);
  require_nonnegative(cols);
  std::vector<WeightedEdge> edges;
  for (NodeID r = 0; r < rows; ++r) {
    for (NodeID c = 0; c < cols; ++c) {
      const NodeID u = r * cols + c;
      if (c + 1 < cols) {
        edges.push_back({u, u + 1});
      }
      if (r + 1 < rows) {
        edges.push_back({u, u + cols});
      }
    }
  }
  return Graph::from_edges(rows * cols, edges);
}

Graph random_gnm(const NodeID n, const EdgeID m, Random &rng) {
  require_nonnegative(n);
  const EdgeID max_m = static_cast<EdgeID>(n) * (n - 1) / 2;
  const EdgeID target = std::min(m, max_m);
  std::set<std::pair<NodeID, NodeID>> chosen;
  std::uniform_int_distribution<NodeID> node(0, std::max<NodeID>(0, n - 1));
  while (static_cast<EdgeID>(chosen.size()) < target) {
    NodeID u = node(rng);
    NodeID v = node(rng);
    if (u == v) {
      continue;
    }
    chosen.emplace(std::min(u, v), std::max(u, v));
  }
  std::vector<WeightedEdge> edges;
  for (const auto &[u, v] : chosen) {
    edges.push_back({u, v});
  }
  return Graph::from_edges(n, edges);
}

Graph random_geometric(const NodeID n, const double radius, Random &rng) {
  require_nonnegative(n);
  std::uniform_real_distribution<double> coord(0.0, 1.0);
  std::vector<std::pair<double, double>> points(n);
  for (auto &[x, y] : points) {
    x = coord(rng);
    y = coord(rng);
  }
  // Bucket grid with cell size >= radius.
  const auto cells = std::max<NodeID>(1, static_cast<NodeID>(1.0 / std::max(radius, 1e-9)));
  std::vector<std::vector<NodeID>> bucket(static_cast<std::size_t>(cells) * cells);
  auto cell_of = [&](const double v) { return std::min<NodeID>(cells - 1, static_cast<NodeID>(v * cells)); };
  for (NodeID u = 0; u < n; ++u) {
    bucket[cell_of(points[u].first) * cells + cell_of(points[u].second)].push_back(u);
  }
  std::vector<WeightedEdge> edges;
  const double r2 = radius * radius;
  for (NodeID u = 0; u < n; ++u) {
    const NodeID cx = cell_of(points[u].first);
    const NodeID cy = cell_of(points[u].second);
    for (NodeID dx = -1; dx <= 1; ++dx) {
      for (NodeID dy = -1; dy <= 1; ++dy) {
        const NodeID x = cx + dx;
        const NodeID y = cy + dy;
        if (x < 0 || y < 0 || x >= cells || y >= cells) {
          continue;
        }
        for (const NodeID v : bucket[x * cells + y]) {
          const double ddx = points[u].first - points[v].first;
          const double ddy = points[u].second - points[v].second;
          if (v > u && ddx * ddx + ddy * ddy < r2) {
            edges.push_back({u, v});
          }
        }
      }
    }
  }
  return Graph::from_edges(n, edges);
}

Graph random_tree(const NodeID n, Random &rng) {
  require_nonnegative(n);
  std::vector<WeightedEdge> edges;
  for (NodeID u = 1; u < n; ++u) {
    edges.push_back({std::uniform_int_distribution<NodeID>(0, u - 1)(rng), u});
  }
  return Graph::from_edges(n, edges);
}

Graph disjoint_union(const std::vector<Graph> &parts) {
  std::vector<WeightedEdge> edges;
  std::vector<NodeWeight> node_weights;
  NodeID offset = 0;
  for (const Graph &part : parts) {
    for (NodeID u = 0; u < part.n(); ++u) {
      node_weights.push_back(part.node_weight(u));
      for (EdgeID e = part.first_edge(u); e < part.first_invalid_edge(u); ++e) {
        const NodeID v = part.edge_target(e);
        if (u < v) {
          edges.push_back({u + offset, v + offset, part.edge_weight(e)});
        }
      }
    }
    offset += part.n();
  }
  return Graph::from_edges(offset, edges, std::move(node_weights));
}

Graph with_random_weights(const Graph &graph, const NodeWeight max_node_weight, const EdgeWeight max_edge_weight,
                          Random &rng) {
  std::uniform_int_distribution<NodeWeight> node_weight(1, std::max<NodeWeight>(1, max_node_weight));
  std::uniform_int_distribution<EdgeWeight> edge_weight(1, std::max<EdgeWeight>(1, max_edge_weight));
  std::vector<NodeWeight> node_weights(graph.n());
  for (auto &w : node_weights) {
    w = node_weight(rng);
  }
  std::vector<WeightedEdge> edges;
  for (NodeID u = 0; u < graph.n(); ++u) {
    for (const NodeID v : graph.neighbors(u)) {
      if (u < v) {
        edges.push_back({u, v, edge_weight(rng)});
      }
    }
  }
  return Graph::from_edges(graph.n(), edges, std::move(node_weights));
}
} // namespace nodesep::gen
