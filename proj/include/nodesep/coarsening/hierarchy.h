/*******************************************************************************
 * @file:   hierarchy.h
 * @brief:  Multilevel hierarchy built by repeated GPA matching and contraction.
 ******************************************************************************/
#pragma once

#include <vector>

#include "nodesep/coarsening/edge_rating.h"
#include "nodesep/contraction.h"
#include "nodesep/graph.h"
#include "nodesep/separator_solution.h"

namespace nodesep {
struct CoarseningStop {
  enum class Kind { kNodeThreshold, kNoContractibleEdge };

  Kind kind = Kind::kNodeThreshold;
  NodeID threshold = 0;

  /// Contract while the current graph has more than `t` nodes.
  static CoarseningStop node_threshold(NodeID t) { return {Kind::kNodeThreshold, t}; }
  /// Contract until every remaining edge is blocked.
  static CoarseningStop no_contractible_edge() { return {Kind::kNoContractibleEdge, 0}; }
};

/// Level 0 refers to the input graph, which must outlive the hierarchy.
class Hierarchy {
public:
  Hierarchy(const Graph &input, EdgeFlags input_blocked);

  [[nodiscard]] std::size_t num_levels() const { return _levels.size() + 1; }
  [[nodiscard]] const Graph &graph(std::size_t level) const;
  [[nodiscard]] const Graph &coarsest() const { return graph(num_levels() - 1); }

  /// Map from level `level` to level `level + 1`.
  [[nodiscard]] const ContractionMap &map(std::size_t level) const { return _levels[level].map; }
  [[nodiscard]] const Matching &matching(std::size_t level) const { return _levels[level].matching; }
  [[nodiscard]] const EdgeFlags &blocked(std::size_t level) const;

  /// Composition of all maps: input node -> coarsest node.
  [[nodiscard]] std::vector<NodeID> input_to_coarsest() const;

  /// Transfers a solution of the input graph to the coarsest graph. Requires
  /// that no contracted edge joined differently labelled nodes.
  [[nodiscard]] SeparatorSolution restrict_to_coarsest(const SeparatorSolution &solution) const;

  void push_level(Matching matching, ContractionMap map, EdgeFlags coarse_blocked);

private:
  struct Level {
    Matching matching;
    ContractionMap map;
    EdgeFlags blocked; // flags of map.coarse
  };

  const Graph *_input;
  EdgeFlags _input_blocked;
  std::vector<Level> _levels;
};

/// `blocked` may be empty (nothing blocked). Stops early, under either rule,
/// once a matching comes out empty.
Hierarchy build_hierarchy(const Graph &graph, const EdgeFlags &blocked, CoarseningStop stop,
                          EdgeRatingFunction rating, Random &rng);
} // namespace nodesep
