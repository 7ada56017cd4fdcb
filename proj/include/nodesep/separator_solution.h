/*******************************************************************************
 * @file:   separator_solution.h
 * @brief:  k-way node separator: per node block assignment with cached block
 *          and separator weights, validity checking and file I/O.
 ******************************************************************************/
#pragma once

#include <istream>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "nodesep/definitions.h"
#include "nodesep/graph.h"

namespace nodesep {
/// Upper bound on a block weight: (1 + epsilon) * ceil(total / k). Block
/// weights are integral, so the real bound is stored as its floor.
NodeWeight compute_max_block_weight(NodeWeight total_weight, BlockID k, double epsilon);

/// Assignment of every node to one of the blocks 0..k-1 or to the separator,
/// which is encoded as block id k.
class SeparatorSolution {
public:
  SeparatorSolution() = default;

  /// Computes the cached weights from `assignment`; entries must lie in [0, k].
  SeparatorSolution(const Graph &graph, BlockID k, double epsilon, std::vector<BlockID> assignment);

  /// Same as above but with explicit per block weight limits (used for
  /// subproblems whose limits are inherited from a larger instance).
  SeparatorSolution(const Graph &graph, BlockID k, double epsilon, std::vector<BlockID> assignment,
                    std::vector<NodeWeight> max_block_weights);

  [[nodiscard]] BlockID k() const { return _k; }
  [[nodiscard]] double epsilon() const { return _epsilon; }
  [[nodiscard]] NodeID n() const { return static_cast<NodeID>(_assignment.size()); }
  [[nodiscard]] BlockID separator_id() const { return _k; }

  [[nodiscard]] BlockID block(NodeID u) const { return _assignment[u]; }
  [[nodiscard]] bool in_separator(NodeID u) const { return _assignment[u] == _k; }
  [[nodiscard]] std::span<const BlockID> assignment() const { return _assignment; }

  [[nodiscard]] NodeWeight block_weight(BlockID b) const { return _block_weights[b]; }
  [[nodiscard]] NodeWeight separator_weight() const { return _block_weights[_k]; }
  [[nodiscard]] NodeWeight total_weight() const { return _total_weight; }
  [[nodiscard]] NodeWeight max_block_weight(BlockID b) const { return _max_block_weights[b]; }
  [[nodiscard]] const std::vector<NodeWeight> &max_block_weights() const { return _max_block_weights; }

  [[nodiscard]] bool is_balanced() const;
  /// Sum over blocks of the weight above the block's limit.
  [[nodiscard]] NodeWeight excess() const;
  [[nodiscard]] BlockID heaviest_block() const;
  [[nodiscard]] BlockID lightest_block() const;

  /// Relabels `u`, keeping the cached weights consistent. Does not check validity.
  void move(const Graph &graph, NodeID u, BlockID to);

  [[nodiscard]] std::vector<NodeID> separator_nodes() const;

  friend bool operator==(const SeparatorSolution &a, const SeparatorSolution &b) {
    return a._k == b._k && a._assignment == b._assignment;
  }

private:
  BlockID _k = 0;
  double _epsilon = 0.0;
  NodeWeight _total_weight = 0;
  std::vector<BlockID> _assignment;
  std::vector<NodeWeight> _block_weights;     // size k + 1, last entry is the separator
  std::vector<NodeWeight> _max_block_weights; // size k
};

struct ValidityReport {
  bool valid = true;
  bool balanced = true;
  /// Edges joining two different non-separator blocks.
  std::vector<std::pair<NodeID, NodeID>> violating_edges;
  std::vector<BlockID> overloaded_blocks;
  /// Non-fatal observations, e.g. empty blocks.
  std::vector<std::string> warnings;
  /// Set if the cached weights disagree with the assignment.
  bool inconsistent_cache = false;
};

ValidityReport check_solution(const Graph &graph, const SeparatorSolution &solution);

/// Convenience: valid and balanced.
bool is_feasible(const Graph &graph, const SeparatorSolution &solution);

/// Separator file: "n k separator_weight" followed by one block id per line
/// (k marks the separator).
void write_separator(const SeparatorSolution &solution, std::ostream &out);
void write_separator_file(const SeparatorSolution &solution, const std::string &path);
SeparatorSolution read_separator(std::istream &in, const Graph &graph, double epsilon);
} // namespace nodesep
