/*******************************************************************************
 * @file:   graph.h
 * @brief:  Immutable undirected graph in CSR form with node and edge weights.
 ******************************************************************************/
#pragma once

#include <span>
#include <vector>

#include "nodesep/definitions.h"

namespace nodesep {
struct WeightedEdge {
  NodeID u;
  NodeID v;
  EdgeWeight weight = 1;
};

/// Per directed edge flag (indexed by EdgeID). Both directions of an
/// undirected edge always carry the same value.
using EdgeFlags = std::vector<std::uint8_t>;

class Graph {
public:
  Graph() = default;

  /// CSR constructor. Adjacency lists must be sorted by target, symmetric with
  /// equal weights in both directions, free of self-loops and duplicates, and
  /// all weights must be positive. Throws GraphFormatError otherwise.
  Graph(std::vector<EdgeID> offsets, std::vector<NodeID> targets,
        std::vector<EdgeWeight> edge_weights, std::vector<NodeWeight> node_weights);

  /// Builds a graph from undirected edges. Parallel edges are merged by summing
  /// their weights; self-loops are rejected. An empty `node_weights` means unit
  /// node weights.
  static Graph from_edges(NodeID n, std::span<const WeightedEdge> edges,
                          std::vector<NodeWeight> node_weights = {});

  [[nodiscard]] NodeID n() const { return static_cast<NodeID>(_node_weights.size()); }
  /// Number of undirected edges.
  [[nodiscard]] EdgeID m() const { return static_cast<EdgeID>(_targets.size()) / 2; }
  /// Number of directed edges, i.e. the size of the EdgeID range.
  [[nodiscard]] EdgeID directed_m() const { return static_cast<EdgeID>(_targets.size()); }

  [[nodiscard]] EdgeID first_edge(NodeID u) const { return _offsets[u]; }
  [[nodiscard]] EdgeID first_invalid_edge(NodeID u) const { return _offsets[u + 1]; }
  [[nodiscard]] NodeID degree(NodeID u) const {
    return static_cast<NodeID>(_offsets[u + 1] - _offsets[u]);
  }

  [[nodiscard]] std::span<const NodeID> neighbors(NodeID u) const {
    return {_targets.data() + _offsets[u], static_cast<std::size_t>(degree(u))};
  }
  [[nodiscard]] std::span<const EdgeWeight> incident_edge_weights(NodeID u) const {
    return {_edge_weights.data() + _offsets[u], static_cast<std::size_t>(degree(u))};
  }

  [[nodiscard]] NodeID edge_target(EdgeID e) const { return _targets[e]; }
  [[nodiscard]] EdgeWeight edge_weight(EdgeID e) const { return _edge_weights[e]; }
  [[nodiscard]] NodeWeight node_weight(NodeID u) const { return _node_weights[u]; }

  [[nodiscard]] NodeWeight total_node_weight() const { return _total_node_weight; }
  [[nodiscard]] NodeWeight max_node_weight() const { return _max_node_weight; }
  [[nodiscard]] EdgeWeight total_edge_weight() const { return _total_edge_weight; }

  [[nodiscard]] bool has_unit_node_weights() const { return _max_node_weight <= 1; }
  [[nodiscard]] bool has_unit_edge_weights() const;

  /// Edge id of (u, v) or -1 if the edge does not exist. O(log deg(u)).
  [[nodiscard]] EdgeID find_edge(NodeID u, NodeID v) const;

  [[nodiscard]] const std::vector<EdgeID> &raw_offsets() const { return _offsets; }
  [[nodiscard]] const std::vector<NodeID> &raw_targets() const { return _targets; }
  [[nodiscard]] const std::vector<EdgeWeight> &raw_edge_weights() const { return _edge_weights; }
  [[nodiscard]] const std::vector<NodeWeight> &raw_node_weights() const { return _node_weights; }

private:
  std::vector<EdgeID> _offsets{0};
  std::vector<NodeID> _targets;
  std::vector<EdgeWeight> _edge_weights;
  std::vector<NodeWeight> _node_weights;

  NodeWeight _total_node_weight = 0;
  NodeWeight _max_node_weight = 0;
  EdgeWeight _total_edge_weight = 0;
};

/// Subgraph induced by `nodes`; `nodes[i]` becomes local node i.
Graph induced_subgraph(const Graph &graph, std::span<const NodeID> nodes);

/// Flags every edge whose endpoints carry different labels.
EdgeFlags cut_edge_flags(const Graph &graph, std::span<const BlockID> labels);
} // namespace nodesep
