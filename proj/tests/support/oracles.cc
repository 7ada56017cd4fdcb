/*******************************************************************************
 * @file:   oracles.cc
 * @brief:  Exhaustive reference solvers for small instances.
 ******************************************************************************/
#include "oracles.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

namespace nodesep::oracle {
namespace {
using Mask = std::uint32_t;

std::vector<NodeWeight> component_weights(const Graph &graph, const Mask removed) {
  std::vector<NodeWeight> weights;
  std::vector<std::uint8_t> seen(graph.n(), 0);
  std::vector<NodeID> stack;
  for (NodeID root = 0; root < graph.n(); ++root) {
    if (seen[root] || (removed >> root & 1U)) {
      continue;
    }
    NodeWeight weight = 0;
    seen[root] = 1;
    stack.push_back(root);
    while (!stack.empty()) {
      const NodeID u = stack.back();
      stack.pop_back();
      weight += graph.node_weight(u);
      for (const NodeID v : graph.neighbors(u)) {
        if (!seen[v] && !(removed >> v & 1U)) {
          seen[v] = 1;
          stack.push_back(v);
        }
      }
    }
    weights.push_back(weight);
  }
  return weights;
}

NodeWeight mask_weight(const Graph &graph, const Mask mask) {
  NodeWeight weight = 0;
  for (NodeID u = 0; u < graph.n(); ++u) {
    if (mask >> u & 1U) {
      weight += graph.node_weight(u);
    }
  }
  return weight;
}
} // namespace

bool fits_into_bins(std::vector<NodeWeight> weights, const BlockID bins, const NodeWeight capacity) {
  std::sort(weights.rbegin(), weights.rend());
  if (!weights.empty() && weights.front() > capacity) {
    return false;
  }
  std::vector<NodeWeight> load(bins, 0);
  std::function<bool(std::size_t)> place = [&](const std::size_t i) {
    if (i == weights.size()) {
      return true;
    }
    for (BlockID b = 0; b < bins; ++b) {
      if (load[b] + weights[i] > capacity) {
        continue;
      }
      if (b > 0 && load[b] == load[b - 1]) {
        continue;
      }
      load[b] += weights[i];
      if (place(i + 1)) {
        return true;
      }
      load[b] -= weights[i];
    }
    return false;
  };
  return place(0);
}

NodeWeight min_separator_weight(const Graph &graph, const BlockID k, const double epsilon) {
  if (graph.n() > 20) {
    throw std::invalid_argument("oracle limited to 20 nodes");
  }
  const NodeWeight total = graph.total_node_weight();
  const auto share = static_cast<NodeWeight>(std::ceil(static_cast<double>(total) / k));
  const auto limit = static_cast<NodeWeight>(std::floor((1.0 + epsilon) * static_cast<double>(share) + 1e-9));

  std::vector<std::pair<NodeWeight, Mask>> subsets;
  const Mask end = Mask{1} << graph.n();
  for (Mask mask = 0; mask < end; ++mask) {
    subsets.emplace_back(mask_weight(graph, mask), mask);
  }
  std::sort(subsets.begin(), subsets.end());
  for (const auto &[weight, mask] : subsets) {
    if (fits_into_bins(component_weights(graph, mask), k, limit)) {
      return weight;
    }
  }
  return -1;
}

double max_path_matching_rating(std::span<const double> rating) {
  const std::size_t m = rating.size();
  double best = 0.0;
  for (Mask mask = 0; mask < (Mask{1} << m); ++mask) {
    if (mask & (mask >> 1)) {
      continue;
    }
    double sum = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
      if (mask >> i & 1U) {
        sum += rating[i];
      }
    }
    best = std::max(best, sum);
  }
  return best;
}

double max_cycle_matching_rating(std::span<const double> rating) {
  const std::size_t m = rating.size();
  double best = 0.0;
  for (Mask mask = 0; mask < (Mask{1} << m); ++mask) {
    if (mask & (mask >> 1)) {
      continue;
    }
    if (m > 1 && (mask & 1U) && (mask >> (m - 1) & 1U)) {
      continue;
    }
    double sum = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
      if (mask >> i & 1U) {
        sum += rating[i];
      }
    }
    best = std::max(best, sum);
  }
  return best;
}

NodeWeight min_node_cut(const FlowProblem &problem) {
  const Graph &graph = problem.network;
  if (graph.n() > 20) {
    throw std::invalid_argument("oracle limited to 20 nodes");
  }
  NodeWeight best = graph.total_node_weight();
  const Mask end = Mask{1} << graph.n();
  std::vector<std::uint8_t> reached(graph.n());
  std::vector<NodeID> stack;
  for (Mask mask = 0; mask < end; ++mask) {
    const NodeWeight weight = mask_weight(graph, mask);
    if (weight >= best) {
      continue;
    }
    std::fill(reached.begin(), reached.end(), 0);
    for (NodeID u = 0; u < graph.n(); ++u) {
      if (problem.source_attached[u] && !(mask >> u & 1U)) {
        reached[u] = 1;
        stack.push_back(u);
      }
    }
    bool separated = true;
    while (!stack.empty()) {
      const NodeID u = stack.back();
      stack.pop_back();
      if (problem.sink_attached[u]) {
        separated = false;
      }
      for (const NodeID v : graph.neighbors(u)) {
        if (!reached[v] && !(mask >> v & 1U)) {
          reached[v] = 1;
          stack.push_back(v);
        }
      }
    }
    if (separated) {
      best = weight;
    }
  }
  return best;
}

NodeWeight min_vertex_cover(const Graph &graph, std::span<const BlockID> labels, const BlockID a, const BlockID b) {
  std::vector<NodeID> nodes;
  std::vector<NodeID> local(graph.n(), -1);
  std::vector<std::pair<NodeID, NodeID>> edges;
  for (NodeID u = 0; u < graph.n(); ++u) {
    for (const NodeID v : graph.neighbors(u)) {
      if (labels[u] == a && labels[v] == b) {
        for (const NodeID x : {u, v}) {
          if (local[x] < 0) {
            local[x] = static_cast<NodeID>(nodes.size());
            nodes.push_back(x);
          }
        }
        edges.emplace_back(local[u], local[v]);
      }
    }
  }
  if (nodes.size() > 20) {
    throw std::invalid_argument("oracle limited to 20 cover candidates");
  }
  NodeWeight best = -1;
  for (Mask mask = 0; mask < (Mask{1} << nodes.size()); ++mask) {
    bool covers = true;
    for (const auto &[x, y] : edges) {
      if (!(mask >> x & 1U) && !(mask >> y & 1U)) {
        covers = false;
        break;
      }
    }
    if (!covers) {
      continue;
    }
    NodeWeight weight = 0;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      if (mask >> i & 1U) {
        weight += graph.node_weight(nodes[i]);
      }
    }
    if (best < 0 || weight < best) {
      best = weight;
    }
  }
  return best;
}
} // namespace nodesep::oracle
