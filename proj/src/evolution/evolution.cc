/*******************************************************************************
 * @file:   evolution.cc
 * @brief:  Population, selection, combine and mutation operators.
 ******************************************************************************/
#include "nodesep/evolution/evolution.h"

#include <algorithm>
#include <cmath>
#include <random>

#include "nodesep/errors.h"

namespace nodesep {
Individual::Individual(SeparatorSolution solution_, const std::int64_t birth_round_)
    : solution(std::move(solution_)),
      fitness(solution.separator_weight()),
      birth_round(birth_round_),
      separator(solution.separator_nodes()) {}

Population::Population(const std::size_t capacity) : _capacity(capacity) {}

const Individual &Population::best() const {
  if (_members.empty()) {
    throw InvalidArgument("empty population");
  }
  return *std::min_element(_members.begin(), _members.end(),
                           [](const Individual &a, const Individual &b) { return a.fitness < b.fitness; });
}

std::size_t estimate_population_size(const double t_one, const double t_total, const double f) {
  if (t_one <= 0.0 || f < 1.0) {
    throw InvalidArgument("population size estimate needs t_one > 0 and f >= 1");
  }
  const double estimate = std::round((t_total / f) / t_one);
  if (!(estimate > 3.0)) {
    return 3;
  }
  return static_cast<std::size_t>(std::min(estimate, 1e6));
}

const Individual &tournament_select(const Population &population, Random &rng) {
  if (population.empty()) {
    throw InvalidArgument("tournament on an empty population");
  }
  const std::size_t size = population.size();
  if (size == 1) {
    return population[0];
  }
  std::uniform_int_distribution<std::size_t> draw(0, size - 1);
  const std::size_t first = draw(rng);
  std::size_t second = std::uniform_int_distribution<std::size_t>(0, size - 2)(rng);
  if (second >= first) {
    ++second;
  }
  const Individual &a = population[first];
  const Individual &b = population[second];
  if (a.fitness != b.fitness) {
    return a.fitness < b.fitness ? a : b;
  }
  return std::bernoulli_distribution(0.5)(rng) ? a : b;
}

std::int64_t similarity(std::span<const NodeID> s1, std::span<const NodeID> s2) {
  std::int64_t count = 0;
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < s1.size() && j < s2.size()) {
    if (s1[i] == s2[j]) {
      ++i;
      ++j;
    } else if (s1[i] < s2[j]) {
      ++count;
      ++i;
    } else {
      ++count;
      ++j;
    }
  }
  return count + static_cast<std::int64_t>(s1.size() - i) + static_cast<std::int64_t>(s2.size() - j);
}

bool insert_with_eviction(Population &population, Individual offspring, Random &rng) {
  if (!population.full()) {
    population.add(std::move(offspring));
    return true;
  }

  std::vector<std::size_t> candidates;
  std::int64_t best_similarity = 0;
  NodeWeight best_fitness = 0;
  for (std::size_t i = 0; i < population.size(); ++i) {
    const Individual &member = population[i];
    if (member.fitness < offspring.fitness) {
      continue;
    }
    const std::int64_t sim = similarity(member.separator, offspring.separator);
    if (candidates.empty() || sim < best_similarity ||
        (sim == best_similarity && member.fitness > best_fitness)) {
      candidates.assign(1, i);
      best_similarity = sim;
      best_fitness = member.fitness;
    } else if (sim == best_similarity && member.fitness == best_fitness) {
      candidates.push_back(i);
    }
  }
  if (candidates.empty()) {
    return false;
  }
  const std::size_t pick =
      candidates[std::uniform_int_distribution<std::size_t>(0, candidates.size() - 1)(rng)];
  population.replace(pick, std::move(offspring));
  return true;
}

Individual combine(const Graph &graph, const Individual &p, const Individual &c, const EvolutionConfig &config,
                   Random &rng, bool *fell_back) {
  const Individual &fitter = c.fitness < p.fitness ? c : p;
  const Individual &other = c.fitness < p.fitness ? p : c;
  if (fell_back != nullptr) {
    *fell_back = false;
  }

  EdgeFlags blocked = cut_edge_flags(graph, fitter.solution.assignment());
  const EdgeFlags other_cut = cut_edge_flags(graph, other.solution.assignment());
  for (std::size_t e = 0; e < blocked.size(); ++e) {
    blocked[e] |= other_cut[e];
  }
  const Hierarchy hierarchy =
      build_hierarchy(graph, blocked, CoarseningStop::no_contractible_edge(), config.multilevel.rating, rng);
  SeparatorSolution result =
      uncoarsen(hierarchy, hierarchy.restrict_to_coarsest(fitter.solution), rng, config.multilevel);

  if (!is_feasible(graph, result) || result.separator_weight() > fitter.fitness) {
    if (fell_back != nullptr) {
      *fell_back = true;
    }
    return fitter;
  }
  return Individual(std::move(result), std::max(p.birth_round, c.birth_round) + 1);
}

Individual mutate(const Graph &graph, const Individual &p, const EvolutionConfig &config, Random &rng,
                  bool *fell_back) {
  if (fell_back != nullptr) {
    *fell_back = false;
  }
  const Hierarchy hierarchy = build_hierarchy(graph, cut_edge_flags(graph, p.solution.assignment()),
                                              CoarseningStop::no_contractible_edge(), config.multilevel.rating, rng);
  const SeparatorSolution &reference = p.solution;
  try {
    SeparatorSolution initial =
        initial_separator_on_level(hierarchy.coarsest(), reference.k(), reference.epsilon(), rng, config.multilevel,
                                   hierarchy.num_levels() == 1);
    SeparatorSolution result = uncoarsen(hierarchy, std::move(initial), rng, config.multilevel);
    if (is_feasible(graph, result)) {
      return Individual(std::move(result), p.birth_round + 1);
    }
  } catch (const InfeasibleError &) {
  }
  if (fell_back != nullptr) {
    *fell_back = true;
  }
  return p;
}
} // namespace nodesep
