/*******************************************************************************
 * @file:   separator_solution.cc
 * @brief:  k-way node separator: per node block assignment with cached block
 *          and separator weights, validity checking and file I/O.
 ******************************************************************************/
#include "nodesep/separator_solution.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>

#include "nodesep/errors.h"

namespace nodesep {
NodeWeight compute_max_block_weight(const NodeWeight total_weight, const BlockID k, const double epsilon) {
  if (k <= 0) {
    throw InvalidArgument("number of blocks must be positive");
  }
  const NodeWeight perfect = (total_weight + k - 1) / k;
  return static_cast<NodeWeight>(std::floor((1.0 + epsilon) * static_cast<double>(perfect) + 1e-9));
}

SeparatorSolution::SeparatorSolution(const Graph &graph, const BlockID k, const double epsilon,
                                     std::vector<BlockID> assignment)
    : SeparatorSolution(graph, k, epsilon, std::move(assignment),
                        std::vector<NodeWeight>(std::max<BlockID>(k, 0),
                                                compute_max_block_weight(graph.total_node_weight(), k, epsilon))) {}

SeparatorSolution::SeparatorSolution(const Graph &graph, const BlockID k, const double epsilon,
                                     std::vector<BlockID> assignment, std::vector<NodeWeight> max_block_weights)
    : _k(k),
      _epsilon(epsilon),
      _total_weight(graph.total_node_weight()),
      _assignment(std::move(assignment)),
      _block_weights(k + 1, 0),
      _max_block_weights(std::move(max_block_weights)) {
  if (static_cast<NodeID>(_assignment.size()) != graph.n()) {
    throw InvalidArgument("assignment size does not match the graph");
  }
  if (static_cast<BlockID>(_max_block_weights.size()) != k) {
    throw InvalidArgument("need one weight limit per block");
  }
  for (NodeID u = 0; u < graph.n(); ++u) {
    if (_assignment[u] < 0 || _assignment[u] > k) {
      throw InvalidArgument("block id out of range at node " + std::to_string(u));
    }
    _block_weights[_assignment[u]] += graph.node_weight(u);
  }
}

bool SeparatorSolution::is_balanced() const {
  for (BlockID b = 0; b < _k; ++b) {
    if (_block_weights[b] > _max_block_weights[b]) {
      return false;
    }
  }
  return true;
}

NodeWeight SeparatorSolution::excess() const {
  NodeWeight total = 0;
  for (BlockID b = 0; b < _k; ++b) {
    total += std::max<NodeWeight>(0, _block_weights[b] - _max_block_weights[b]);
  }
  return total;
}

BlockID SeparatorSolution::heaviest_block() const {
  BlockID best = 0;
  for (BlockID b = 1; b < _k; ++b) {
    if (_block_weights[b] > _block_weights[best]) {
      best = b;
    }
  }
  return best;
}

BlockID SeparatorSolution::lightest_block() const {
  BlockID best = 0;
  for (BlockID b = 1; b < _k; ++b) {
    if (_block_weights[b] < _block_weights[best]) {
      best = b;
    }
  }
  return best;
}

void SeparatorSolution::move(const Graph &graph, const NodeID u, const BlockID to) {
  const NodeWeight w = graph.node_weight(u);
  _block_weights[_assignment[u]] -= w;
  _block_weights[to] += w;
  _assignment[u] = to;
}

std::vector<NodeID> SeparatorSolution::separator_nodes() const {
  std::vector<NodeID> nodes;
  for (NodeID u = 0; u < n(); ++u) {
    if (in_separator(u)) {
      nodes.push_back(u);
    }
  }
  return nodes;
}

ValidityReport check_solution(const Graph &graph, const SeparatorSolution &solution) {
  ValidityReport report;
  if (solution.n() != graph.n()) {
    report.valid = false;
    report.balanced = false;
    report.warnings.emplace_back("solution size does not match the graph");
    return report;
  }

  const BlockID sep = solution.separator_id();
  std::vector<NodeWeight> weights(solution.k() + 1, 0);
  for (NodeID u = 0; u < graph.n(); ++u) {
    const BlockID bu = solution.block(u);
    weights[bu] += graph.node_weight(u);
    if (bu == sep) {
      continue;
    }
    for (const NodeID v : graph.neighbors(u)) {
      const BlockID bv = solution.block(v);
      if (u < v && bv != sep && bv != bu) {
        report.violating_edges.emplace_back(u, v);
      }
    }
  }
  report.valid = report.violating_edges.empty();

  for (BlockID b = 0; b <= solution.k(); ++b) {
    if (weights[b] != (b == sep ? solution.separator_weight() : solution.block_weight(b))) {
      report.inconsistent_cache = true;
      report.valid = false;
    }
  }

  for (BlockID b = 0; b < solution.k(); ++b) {
    if (weights[b] > solution.max_block_weight(b)) {
      report.overloaded_blocks.push_back(b);
    }
  }
  report.balanced = report.overloaded_blocks.empty();

  const auto empty_blocks = std::count(weights.begin(), weights.end() - 1, 0);
  if (empty_blocks > 0) {
    report.warnings.push_back(std::to_string(empty_blocks) +
                              " empty block(s): removing the separator may leave fewer than k components");
  }
  return report;
}

bool is_feasible(const Graph &graph, const SeparatorSolution &solution) {
  const ValidityReport report = check_solution(graph, solution);
  return report.valid && report.balanced;
}

void write_separator(const SeparatorSolution &solution, std::ostream &out) {
  out << solution.n() << ' ' << solution.k() << ' ' << solution.separator_weight() << '\n';
  for (const BlockID b : solution.assignment()) {
    out << b << '\n';
  }
}

void write_separator_file(const SeparatorSolution &solution, const std::string &path) {
  std::ofstream out(path);
  if (!out) {
    throw InvalidArgument("cannot write " + path);
  }
  write_separator(solution, out);
}

SeparatorSolution read_separator(std::istream &in, const Graph &graph, const double epsilon) {
  std::int64_t n = 0;
  std::int64_t k = 0;
  std::int64_t weight = 0;
  if (!(in >> n >> k >> weight) || n != graph.n() || k <= 0) {
    throw GraphFormatError("malformed separator header");
  }
  std::vector<BlockID> assignment(n);
  for (auto &b : assignment) {
    if (!(in >> b) || b < 0 || b > k) {
      throw GraphFormatError("malformed separator entry");
    }
  }
  SeparatorSolution solution(graph, static_cast<BlockID>(k), epsilon, std::move(assignment));
  if (solution.separator_weight() != weight) {
    throw GraphFormatError("separator weight in header does not match the assignment");
  }
  return solution;
}
} // namespace nodesep
