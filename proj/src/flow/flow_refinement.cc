/*******************************************************************************
 * @file:   flow_refinement.cc
 * @brief:  Flow-based improvement of 2-way node separators.
 ******************************************************************************/
#include "nodesep/flow/flow_refinement.h"

#include <algorithm>
#include <cmath>
#include <queue>

#include "nodesep/errors.h"

namespace nodesep {
std::vector<NodeWeight> refinement_limits(const SeparatorSolution &solution) {
  std::vector<NodeWeight> limits(solution.k());
  for (BlockID b = 0; b < solution.k(); ++b) {
    limits[b] = std::max(solution.max_block_weight(b), solution.block_weight(b));
  }
  return limits;
}

namespace {
bool within(const SeparatorSolution &solution, const std::vector<NodeWeight> &limits) {
  for (BlockID b = 0; b < solution.k(); ++b) {
    if (solution.block_weight(b) > limits[b]) {
      return false;
    }
  }
  return true;
}

// Tracks, for one BFS side, how many neighbours of that side's block every
// region node still has outside the region. A node without such neighbours is
// detached from the terminal and may end up on the opposite side of a cut,
// which is what `bound` (maximum possible weight of the opposite block) counts.
struct SideState {
  BlockID block;
  std::vector<NodeID> outside;
  NodeWeight bound;
};
} // namespace

FlowProblem construct_flow_region(const Graph &graph, const SeparatorSolution &solution, const FlowRegionMode mode,
                                  const double alpha) {
  if (solution.k() != 2) {
    throw InvalidArgument("flow refinement needs a 2-way solution");
  }
  const std::vector<NodeID> separator = solution.separator_nodes();
  if (separator.empty()) {
    throw InvalidArgument("nothing to refine: empty separator");
  }

  const std::vector<NodeWeight> limits = refinement_limits(solution);
  const BlockID source_block = solution.block_weight(0) >= solution.block_weight(1) ? 0 : 1;
  const BlockID sink_block = 1 - source_block;

  std::vector<std::uint8_t> in_region(graph.n(), 0);
  std::vector<NodeID> region = separator;
  for (const NodeID u : separator) {
    in_region[u] = 1;
  }

  auto count_outside = [&](const NodeID u, const BlockID block) {
    NodeID count = 0;
    for (const NodeID v : graph.neighbors(u)) {
      count += !in_region[v] && solution.block(v) == block;
    }
    return count;
  };

  // source side growth limits the sink block's final weight and vice versa
  SideState source{source_block, std::vector<NodeID>(graph.n(), 0), solution.block_weight(sink_block)};
  SideState sink{sink_block, std::vector<NodeID>(graph.n(), 0), solution.block_weight(source_block)};
  for (const NodeID u : separator) {
    source.outside[u] = count_outside(u, source_block);
    sink.outside[u] = count_outside(u, sink_block);
    source.bound += source.outside[u] == 0 ? graph.node_weight(u) : 0;
    sink.bound += sink.outside[u] == 0 ? graph.node_weight(u) : 0;
  }

  FlowProblem problem;
  problem.source_block = source_block;
  problem.sink_block = sink_block;

  const NodeWeight source_side_limit = limits[sink_block];
  const NodeWeight sink_side_limit = limits[source_block];
  const bool frozen = source.bound > source_side_limit || sink.bound > sink_side_limit;

  if (!frozen) {
    auto grow = [&](SideState &side, const NodeWeight limit) {
      NodeWeight allowed = limit;
      if (mode == FlowRegionMode::kAggressive) {
        const auto slack = static_cast<double>(limit - side.bound);
        allowed = side.bound + static_cast<NodeWeight>(std::floor(alpha * slack));
      }

      std::queue<NodeID> queue;
      for (const NodeID u : separator) {
        queue.push(u);
      }
      while (!queue.empty()) {
        const NodeID u = queue.front();
        queue.pop();
        for (const NodeID v : graph.neighbors(u)) {
          if (in_region[v] || solution.block(v) != side.block) {
            continue;
          }
          NodeWeight delta = 0;
          NodeID v_outside = 0;
          for (const NodeID x : graph.neighbors(v)) {
            if (in_region[x]) {
              delta += side.outside[x] == 1 ? graph.node_weight(x) : 0;
            } else if (solution.block(x) == side.block) {
              ++v_outside;
            }
          }
          delta += v_outside == 0 ? graph.node_weight(v) : 0;
          if (side.bound + delta > allowed) {
            return;
          }

          in_region[v] = 1;
          region.push_back(v);
          side.bound += delta;
          side.outside[v] = v_outside;
          for (const NodeID x : graph.neighbors(v)) {
            if (in_region[x] && x != v && side.outside[x] > 0) {
              --side.outside[x];
            }
          }
          queue.push(v);
        }
      }
    };
    grow(source, source_side_limit);
    grow(sink, sink_side_limit);
  }

  problem.region_to_graph = region;
  problem.network = induced_subgraph(graph, region);
  problem.source_attached.resize(region.size());
  problem.sink_attached.resize(region.size());
  for (std::size_t i = 0; i < region.size(); ++i) {
    const NodeID u = region[i];
    if (frozen) {
      problem.source_attached[i] = 1;
      problem.sink_attached[i] = 1;
    } else {
      problem.source_attached[i] = source.outside[u] > 0;
      problem.sink_attached[i] = sink.outside[u] > 0;
    }
  }
  return problem;
}

SeparatorSolution apply_min_cut(const Graph &graph, const SeparatorSolution &solution, const FlowProblem &problem,
                                const MaxFlowResult &cut) {
  SeparatorSolution result = solution;
  std::vector<std::uint8_t> is_cut(problem.region_to_graph.size(), 0);
  for (const NodeID local : cut.cut_nodes) {
    is_cut[local] = 1;
  }
  for (std::size_t i = 0; i < problem.region_to_graph.size(); ++i) {
    const NodeID u = problem.region_to_graph[i];
    const BlockID target = is_cut[i]           ? solution.separator_id()
                           : cut.source_side[i] ? problem.source_block
                                                : problem.sink_block;
    if (result.block(u) != target) {
      result.move(graph, u, target);
    }
  }
  return result;
}

SeparatorSolution flow_improve_2way(const Graph &graph, const SeparatorSolution &solution, const double alpha,
                                    const int max_retries) {
  if (solution.separator_weight() == 0) {
    return solution;
  }
  const std::vector<NodeWeight> limits = refinement_limits(solution);

  auto attempt = [&](const FlowRegionMode mode, const double a) {
    const FlowProblem problem = construct_flow_region(graph, solution, mode, a);
    return apply_min_cut(graph, solution, problem, max_flow(problem));
  };

  for (int retry = 0; retry <= max_retries; ++retry) {
    const double a = alpha / std::pow(2.0, retry);
    SeparatorSolution candidate = attempt(FlowRegionMode::kAggressive, a);
    if (within(candidate, limits)) {
      return candidate.separator_weight() < solution.separator_weight() ? candidate : solution;
    }
  }

  SeparatorSolution candidate = attempt(FlowRegionMode::kStrict, 1.0);
  if (within(candidate, limits) && candidate.separator_weight() < solution.separator_weight()) {
    return candidate;
  }
  return solution;
}
} // namespace nodesep
