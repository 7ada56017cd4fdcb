/*******************************************************************************
 * @file:   max_flow.cc
 * @brief:  Dinic's algorithm on the node-split network of a FlowProblem.
 ******************************************************************************/
#include <algorithm>
#include <limits>
#include <queue>
#include <stdexcept>

#include "nodesep/flow/flow_problem.h"

namespace nodesep {
namespace {
using Capacity = std::int64_t;

class Dinic {
public:
  explicit Dinic(const std::size_t num_vertices) : _head(num_vertices), _level(num_vertices), _next(num_vertices) {}

  void add_arc(const std::size_t from, const std::size_t to, const Capacity capacity) {
    _head[from].push_back(_to.size());
    _to.push_back(to);
    _residual.push_back(capacity);
    _head[to].push_back(_to.size());
    _to.push_back(from);
    _residual.push_back(0);
  }

  Capacity run(const std::size_t s, const std::size_t t) {
    Capacity flow = 0;
    while (build_levels(s, t)) {
      std::fill(_next.begin(), _next.end(), 0);
      while (const Capacity pushed = augment(s, t, std::numeric_limits<Capacity>::max())) {
        flow += pushed;
      }
    }
    return flow;
  }

  /// Vertices reachable from s in the residual network.
  [[nodiscard]] std::vector<std::uint8_t> reachable(const std::size_t s) const {
    std::vector<std::uint8_t> seen(_head.size(), 0);
    std::vector<std::size_t> stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      const std::size_t x = stack.back();
      stack.pop_back();
      for (const std::size_t arc : _head[x]) {
        if (_residual[arc] > 0 && !seen[_to[arc]]) {
          seen[_to[arc]] = 1;
          stack.push_back(_to[arc]);
        }
      }
    }
    return seen;
  }

private:
  bool build_levels(const std::size_t s, const std::size_t t) {
    std::fill(_level.begin(), _level.end(), -1);
    std::queue<std::size_t> queue;
    _level[s] = 0;
    queue.push(s);
    while (!queue.empty()) {
      const std::size_t x = queue.front();
      queue.pop();
      for (const std::size_t arc : _head[x]) {
        if (_residual[arc] > 0 && _level[_to[arc]] < 0) {
          _level[_to[arc]] = _level[x] + 1;
          queue.push(_to[arc]);
        }
      }
    }
    return _level[t] >= 0;
  }

  Capacity augment(const std::size_t x, const std::size_t t, const Capacity limit) {
    if (x == t) {
      return limit;
    }
    for (std::size_t &i = _next[x]; i < _head[x].size(); ++i) {
      const std::size_t arc = _head[x][i];
      const std::size_t y = _to[arc];
      if (_residual[arc] <= 0 || _level[y] != _level[x] + 1) {
        continue;
      }
      if (const Capacity pushed = augment(y, t, std::min(limit, _residual[arc])); pushed > 0) {
        _residual[arc] -= pushed;
        _residual[arc ^ 1] += pushed;
        return pushed;
      }
    }
    return 0;
  }

  std::vector<std::vector<std::size_t>> _head;
  std::vector<std::size_t> _to;
  std::vector<Capacity> _residual;
  std::vector<int> _level;
  std::vector<std::size_t> _next;
};
} // namespace

MaxFlowResult max_flow(const FlowProblem &problem) {
  const Graph &network = problem.network;
  const auto n = static_cast<std::size_t>(network.n());
  const std::size_t source = 2 * n;
  const std::size_t sink = 2 * n + 1;
  const Capacity infinity = network.total_node_weight() + 1;

  auto in_node = [](const NodeID u) { return 2 * static_cast<std::size_t>(u); };
  auto out_node = [](const NodeID u) { return 2 * static_cast<std::size_t>(u) + 1; };

  Dinic dinic(2 * n + 2);
  for (NodeID u = 0; u < network.n(); ++u) {
    dinic.add_arc(in_node(u), out_node(u), network.node_weight(u));
    for (const NodeID v : network.neighbors(u)) {
      dinic.add_arc(out_node(u), in_node(v), infinity);
    }
    if (problem.source_attached[u]) {
      dinic.add_arc(source, in_node(u), infinity);
    }
    if (problem.sink_attached[u]) {
      dinic.add_arc(out_node(u), sink, infinity);
    }
  }

  MaxFlowResult result;
  result.value = dinic.run(source, sink);

  const std::vector<std::uint8_t> seen = dinic.reachable(source);
  result.source_side.assign(n, 0);
  NodeWeight cut_weight = 0;
  for (NodeID u = 0; u < network.n(); ++u) {
    if (seen[in_node(u)] && !seen[out_node(u)]) {
      result.cut_nodes.push_back(u);
      cut_weight += network.node_weight(u);
    }
    result.source_side[u] = seen[out_node(u)];
  }
  if (cut_weight != result.value) {
    throw std::logic_error("max flow value differs from the weight of its minimum cut");
  }
  return result;
}
} // namespace nodesep
