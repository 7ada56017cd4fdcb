/*******************************************************************************
 * @file:   evolution.h
 * @brief:  Population, selection, combine and mutation operators.
 ******************************************************************************/
#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "nodesep/multilevel/multilevel.h"
#include "nodesep/separator_solution.h"

namespace nodesep {
struct Individual {
  SeparatorSolution solution;
  NodeWeight fitness = 0;
  std::int64_t birth_round = 0;
  /// Sorted separator nodes.
  std::vector<NodeID> separator;

  Individual() = default;
  explicit Individual(SeparatorSolution solution, std::int64_t birth_round = 0);
};

class Population {
public:
  explicit Population(std::size_t capacity);

  [[nodiscard]] std::size_t capacity() const { return _capacity; }
  [[nodiscard]] std::size_t size() const { return _members.size(); }
  [[nodiscard]] bool empty() const { return _members.empty(); }
  [[nodiscard]] bool full() const { return _members.size() >= _capacity; }
  [[nodiscard]] const std::vector<Individual> &members() const { return _members; }
  [[nodiscard]] const Individual &operator[](std::size_t i) const { return _members[i]; }

  /// Fittest member (smallest separator, lowest index on ties).
  [[nodiscard]] const Individual &best() const;

  void set_capacity(std::size_t capacity) { _capacity = capacity; }
  void add(Individual individual) { _members.push_back(std::move(individual)); }
  void replace(std::size_t i, Individual individual) { _members[i] = std::move(individual); }

private:
  std::size_t _capacity;
  std::vector<Individual> _members;
};

struct EvolutionConfig {
  MultilevelConfig multilevel;
  double mutation_probability = 0.1;
};

/// max(3, round((t_total / f) / t_one)).
std::size_t estimate_population_size(double t_one, double t_total, double f);

/// Fitter of two uniform draws (distinct unless the population is a
/// singleton); ties are broken at random. Throws InvalidArgument if empty.
const Individual &tournament_select(const Population &population, Random &rng);

/// |S1 \ S2| + |S2 \ S1| of two sorted node sets.
std::int64_t similarity(std::span<const NodeID> s1, std::span<const NodeID> s2);

/// Plain insert below capacity. At capacity, the member most similar to the
/// offspring among those with fitness >= offspring fitness is replaced (ties:
/// higher fitness, then random); without such a member the offspring is
/// dropped.
bool insert_with_eviction(Population &population, Individual offspring, Random &rng);

/// Coarsens with the cut edges of both parents blocked until nothing is
/// contractible, starts from the fitter parent on the coarsest graph and
/// refines upwards. Never worse than the fitter parent; if refinement breaks
/// that guarantee the fitter parent is returned and `fell_back` is set.
Individual combine(const Graph &graph, const Individual &p, const Individual &c, const EvolutionConfig &config,
                   Random &rng, bool *fell_back = nullptr);

/// Coarsens with the cut edges of `p` blocked, computes a fresh initial
/// separator on the coarsest graph and refines upwards. Falls back to `p` if
/// the result is not feasible.
Individual mutate(const Graph &graph, const Individual &p, const EvolutionConfig &config, Random &rng,
                  bool *fell_back = nullptr);
} // namespace nodesep
