/*******************************************************************************
 * @file:   graph.cc
 * @brief:  Immutable undirected graph in CSR form with node and edge weights.
 ******************************************************************************/
#include "nodesep/graph.h"

#include <algorithm>
#include <string>

#include "nodesep/errors.h"

namespace nodesep {
Graph::Graph(std::vector<EdgeID> offsets, std::vector<NodeID> targets,
             std::vector<EdgeWeight> edge_weights, std::vector<NodeWeight> node_weights)
    : _offsets(std::move(offsets)),
      _targets(std::move(targets)),
      _edge_weights(std::move(edge_weights)),
      _node_weights(std::move(node_weights)) {
  const NodeID num_nodes = n();
  if (_offsets.size() != _node_weights.size() + 1 || _offsets.front() != 0 ||
      _offsets.back() != static_cast<EdgeID>(_targets.size()) ||
      _targets.size() != _edge_weights.size()) {
    throw GraphFormatError("inconsistent CSR array sizes");
  }

  for (NodeID u = 0; u < num_nodes; ++u) {
    if (_node_weights[u] < 1) {
      throw GraphFormatError("node " + std::to_string(u) + " has non-positive weight");
    }
    _total_node_weight += _node_weights[u];
    _max_node_weight = std::max(_max_node_weight, _node_weights[u]);

    if (_offsets[u] > _offsets[u + 1]) {
      throw GraphFormatError("offsets are not monotone");
    }
    for (EdgeID e = _offsets[u]; e < _offsets[u + 1]; ++e) {
      const NodeID v = _targets[e];
      if (v < 0 || v >= num_nodes) {
        throw GraphFormatError("index out of range");
      }
      if (v == u) {
        throw GraphFormatError("self-loop at node " + std::to_string(u));
      }
      if (e > _offsets[u] && _targets[e - 1] >= v) {
        throw GraphFormatError("adjacency of node " + std::to_string(u) +
                               " is unsorted or has duplicates");
      }
      if (_edge_weights[e] < 1) {
        throw GraphFormatError("edge with non-positive weight");
      }
      _total_edge_weight += _edge_weights[e];
    }
  }

  for (NodeID u = 0; u < num_nodes; ++u) {
    for (EdgeID e = _offsets[u]; e < _offsets[u + 1]; ++e) {
      const EdgeID rev = find_edge(_targets[e], u);
      if (rev < 0 || _edge_weights[rev] != _edge_weights[e]) {
        throw GraphFormatError("asymmetric adjacency between nodes " + std::to_string(u) +
                               " and " + std::to_string(_targets[e]));
      }
    }
  }
  _total_edge_weight /= 2;
}

Graph Graph::from_edges(const NodeID n, std::span<const WeightedEdge> edges,
                        std::vector<NodeWeight> node_weights) {
  if (node_weights.empty()) {
    node_weights.assign(n, 1);
  }
  if (static_cast<NodeID>(node_weights.size()) != n) {
    throw GraphFormatError("node weight count does not match node count");
  }

  std::vector<WeightedEdge> arcs;
  arcs.reserve(2 * edges.size());
  for (const WeightedEdge &edge : edges) {
    if (edge.u < 0 || edge.u >= n || edge.v < 0 || edge.v >= n) {
      throw GraphFormatError("index out of range");
    }
    if (edge.u == edge.v) {
      throw GraphFormatError("self-loop at node " + std::to_string(edge.u));
    }
    arcs.push_back(edge);
    arcs.push_back({edge.v, edge.u, edge.weight});
  }
  std::sort(arcs.begin(), arcs.end(), [](const WeightedEdge &a, const WeightedEdge &b) {
    return a.u < b.u || (a.u == b.u && a.v < b.v);
  });

  std::vector<EdgeID> offsets(n + 1, 0);
  std::vector<NodeID> targets;
  std::vector<EdgeWeight> weights;
  targets.reserve(arcs.size());
  weights.reserve(arcs.size());
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    if (i > 0 && arcs[i].u == arcs[i - 1].u && arcs[i].v == arcs[i - 1].v) {
      weights.back() += arcs[i].weight;
      continue;
    }
    targets.push_back(arcs[i].v);
    weights.push_back(arcs[i].weight);
    ++offsets[arcs[i].u + 1];
  }
  for (NodeID u = 0; u < n; ++u) {
    offsets[u + 1] += offsets[u];
  }

  return {std::move(offsets), std::move(targets), std::move(weights), std::move(node_weights)};
}

bool Graph::has_unit_edge_weights() const {
  return std::all_of(_edge_weights.begin(), _edge_weights.end(),
                     [](const EdgeWeight w) { return w == 1; });
}

EdgeID Graph::find_edge(const NodeID u, const NodeID v) const {
  const auto begin = _targets.begin() + _offsets[u];
  const auto end = _targets.begin() + _offsets[u + 1];
  const auto it = std::lower_bound(begin, end, v);
  if (it == end || *it != v) {
    return -1;
  }
  return static_cast<EdgeID>(it - _targets.begin());
}

Graph induced_subgraph(const Graph &graph, std::span<const NodeID> nodes) {
  std::vector<NodeID> local(graph.n(), -1);
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    local[nodes[i]] = static_cast<NodeID>(i);
  }

  std::vector<EdgeID> offsets(nodes.size() + 1, 0);
  std::vector<NodeID> targets;
  std::vector<EdgeWeight> weights;
  std::vector<NodeWeight> node_weights(nodes.size());
  std::vector<std::pair<NodeID, EdgeWeight>> row;

  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const NodeID u = nodes[i];
    node_weights[i] = graph.node_weight(u);
    row.clear();
    for (EdgeID e = graph.first_edge(u); e < graph.first_invalid_edge(u); ++e) {
      const NodeID v = local[graph.edge_target(e)];
      if (v >= 0) {
        row.emplace_back(v, graph.edge_weight(e));
      }
    }
    std::sort(row.begin(), row.end());
    for (const auto &[v, w] : row) {
      targets.push_back(v);
      weights.push_back(w);
    }
    offsets[i + 1] = static_cast<EdgeID>(targets.size());
  }

  return {std::move(offsets), std::move(targets), std::move(weights), std::move(node_weights)};
}

EdgeFlags cut_edge_flags(const Graph &graph, std::span<const BlockID> labels) {
  EdgeFlags flags(graph.directed_m(), 0);
  for (NodeID u = 0; u < graph.n(); ++u) {
    for (EdgeID e = graph.first_edge(u); e < graph.first_invalid_edge(u); ++e) {
      flags[e] = labels[u] != labels[graph.edge_target(e)] ? 1 : 0;
    }
  }
  return flags;
}
} // namespace nodesep
