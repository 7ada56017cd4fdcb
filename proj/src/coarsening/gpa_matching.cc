/*******************************************************************************
 * @file:   gpa_matching.cc
 * @brief:  Global Path Algorithm matching.
 ******************************************************************************/
#include "nodesep/coarsening/gpa_matching.h"

#include <algorithm>
#include <array>
#include <numeric>

namespace nodesep {
namespace {
struct CandidateEdge {
  NodeID u;
  NodeID v;
  double rating;
};

// Solution for ratings[first, first + count) treated as a path.
std::vector<std::size_t> solve_path(std::span<const double> rating, const std::size_t first,
                                    const std::size_t count) {
  // best[i]: optimum using the first i edges of the segment
  std::vector<double> best(count + 1, 0.0);
  for (std::size_t i = 1; i <= count; ++i) {
    const double take = rating[first + i - 1] + (i >= 2 ? best[i - 2] : 0.0);
    best[i] = std::max(best[i - 1], take);
  }

  std::vector<std::size_t> chosen;
  std::size_t i = count;
  while (i > 0) {
    const double take = rating[first + i - 1] + (i >= 2 ? best[i - 2] : 0.0);
    if (take >= best[i - 1]) {
      chosen.push_back(first + i - 1);
      i = i >= 2 ? i - 2 : 0;
    } else {
      --i;
    }
  }
  std::reverse(chosen.begin(), chosen.end());
  return chosen;
}

double total(std::span<const double> rating, const std::vector<std::size_t> &chosen) {
  double sum = 0.0;
  for (const std::size_t i : chosen) {
    sum += rating[i];
  }
  return sum;
}
} // namespace

std::vector<std::size_t> max_rating_path_matching(std::span<const double> rating) {
  return solve_path(rating, 0, rating.size());
}

std::vector<std::size_t> max_rating_cycle_matching(std::span<const double> rating) {
  const std::size_t size = rating.size();
  if (size < 3) {
    return max_rating_path_matching(rating);
  }
  // edge 0 excluded: path over edges 1..size-1
  std::vector<std::size_t> without_first = solve_path(rating, 1, size - 1);
  // edge 0 included: its neighbours 1 and size-1 are excluded
  std::vector<std::size_t> with_first{0};
  if (size > 3) {
    const std::vector<std::size_t> rest = solve_path(rating, 2, size - 3);
    with_first.insert(with_first.end(), rest.begin(), rest.end());
  }
  return total(rating, with_first) >= total(rating, without_first) ? with_first : without_first;
}

Matching gpa_matching(const Graph &graph, std::span<const double> rating, const EdgeFlags &blocked,
                      Random &rng) {
  const NodeID n = graph.n();

  std::vector<CandidateEdge> candidates;
  for (NodeID u = 0; u < n; ++u) {
    for (EdgeID e = graph.first_edge(u); e < graph.first_invalid_edge(u); ++e) {
      const NodeID v = graph.edge_target(e);
      if (u < v && (blocked.empty() || !blocked[e])) {
        candidates.push_back({u, v, rating[e]});
      }
    }
  }
  std::shuffle(candidates.begin(), candidates.end(), rng);
  std::stable_sort(candidates.begin(), candidates.end(),
                   [](const CandidateEdge &a, const CandidateEdge &b) { return a.rating > b.rating; });

  // partial structure of paths and even cycles, max degree two
  std::vector<std::array<NodeID, 2>> link(n, {kInvalidNode, kInvalidNode});
  std::vector<std::array<double, 2>> link_rating(n, {0.0, 0.0});
  std::vector<NodeID> degree(n, 0);
  std::vector<NodeID> other_end(n);
  std::vector<NodeID> path_length(n, 0); // valid at path endpoints
  std::iota(other_end.begin(), other_end.end(), 0);

  auto add_link = [&](const NodeID u, const NodeID v, const double r) {
    link[u][degree[u]] = v;
    link_rating[u][degree[u]++] = r;
    link[v][degree[v]] = u;
    link_rating[v][degree[v]++] = r;
  };

  for (const auto &[u, v, r] : candidates) {
    if (degree[u] == 2 || degree[v] == 2) {
      continue;
    }
    if (other_end[u] == v) {
      // u and v are the two ends of one path: closing it must give an even cycle
      if (path_length[u] % 2 == 1) {
        add_link(u, v, r);
      }
      continue;
    }
    const NodeID a = other_end[u];
    const NodeID b = other_end[v];
    const NodeID length = path_length[u] + path_length[v] + 1;
    add_link(u, v, r);
    other_end[a] = b;
    other_end[b] = a;
    path_length[a] = length;
    path_length[b] = length;
  }

  Matching matching;
  std::vector<bool> visited(n, false);
  std::vector<NodeID> nodes;
  std::vector<double> ratings;

  auto walk = [&](const NodeID start) {
    nodes.assign(1, start);
    ratings.clear();
    visited[start] = true;
    NodeID prev = kInvalidNode;
    NodeID cur = start;
    while (true) {
      NodeID next = kInvalidNode;
      double r = 0.0;
      for (int i = 0; i < degree[cur]; ++i) {
        if (link[cur][i] != prev) {
          next = link[cur][i];
          r = link_rating[cur][i];
          break;
        }
      }
      if (next == kInvalidNode) {
        break;
      }
      ratings.push_back(r);
      if (next == start) {
        break; // closed a cycle
      }
      visited[next] = true;
      nodes.push_back(next);
      prev = cur;
      cur = next;
    }
  };

  for (NodeID u = 0; u < n; ++u) {
    if (visited[u] || degree[u] != 1) {
      continue;
    }
    walk(u);
    for (const std::size_t i : max_rating_path_matching(ratings)) {
      matching.emplace_back(nodes[i], nodes[i + 1]);
    }
  }
  for (NodeID u = 0; u < n; ++u) {
    if (visited[u] || degree[u] != 2) {
      continue;
    }
    walk(u);
    for (const std::size_t i : max_rating_cycle_matching(ratings)) {
      matching.emplace_back(nodes[i], nodes[(i + 1) % nodes.size()]);
    }
  }

  return matching;
}
} // namespace nodesep
