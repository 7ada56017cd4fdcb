/*******************************************************************************
 * @file:   nodesep.cc
 * @brief:  Command line separator solver.
 ******************************************************************************/
#include <chrono>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "nodesep/bench/simple_baseline.h"
#include "nodesep/errors.h"
#include "nodesep/island/island.h"
#include "nodesep/metis_io.h"
#include "nodesep/multilevel/multilevel.h"

using namespace nodesep;

namespace {
enum ExitCode { kOk = 0, kBadFlags = 1, kBadGraph = 2, kInfeasible = 3 };

struct Options {
  std::string graph;
  BlockID k = 2;
  double imbalance = 0.03;
  std::uint64_t seed = 0;
  double time_limit = 10.0;
  int pes = 1;
  double fraction = 10.0;
  double mutation_prob = 0.1;
  std::string mode = "adv";
  std::string output;
  std::string log;
  NodeID coarsest = 0;
  bool deterministic = false;
};

double seconds_since(const std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

int run(const Options &options) {
  Graph graph;
  try {
    graph = read_metis_file(options.graph);
  } catch (const GraphFormatError &e) {
    std::cerr << "error: " << options.graph << ": " << e.what() << '\n';
    return kBadGraph;
  }

  MultilevelConfig multilevel;
  multilevel.coarsest_nodes = options.coarsest;
  Random rng(options.seed);

  SeparatorSolution solution;
  std::vector<Event> events;
  try {
    const auto start = std::chrono::steady_clock::now();
    if (options.mode == "adv") {
      solution = solve(graph, options.k, options.imbalance, multilevel, rng);
      events.push_back({seconds_since(start), solution.separator_weight(), 0, EventKind::kCreate});
    } else if (options.mode == "simple") {
      solution = simple_baseline(graph, options.k, options.imbalance, rng);
      events.push_back({seconds_since(start), solution.separator_weight(), 0, EventKind::kCreate});
    } else {
      IslandConfig config;
      config.pes = options.pes;
      config.time_limit = options.time_limit;
      config.fraction = options.fraction;
      config.seed = options.seed;
      config.repetitions = options.mode == "advreps";
      config.deterministic = options.deterministic;
      config.evolution.multilevel = multilevel;
      config.evolution.mutation_probability = options.mutation_prob;
      if (options.k > graph.n()) {
        throw InfeasibleError("too many blocks");
      }
      IslandResult result = run_islands(graph, options.k, options.imbalance, config);
      for (const std::string &warning : result.warnings) {
        std::cerr << "warning: " << warning << '\n';
      }
      solution = std::move(result.best);
      events = std::move(result.events);
    }
  } catch (const InfeasibleError &e) {
    std::cerr << "error: infeasible instance: " << e.what() << '\n';
    return kInfeasible;
  }

  if (!options.output.empty()) {
    write_separator_file(solution, options.output);
  }
  if (!options.log.empty()) {
    std::ofstream log(options.log);
    write_event_log(events, log);
  }
  const ValidityReport report = check_solution(graph, solution);
  std::cout << "separator_weight=" << solution.separator_weight() << " balanced=" << std::boolalpha
            << report.balanced << " valid=" << report.valid << '\n';
  return kOk;
}
} // namespace

int main(int argc, char **argv) {
  Options options;
  CLI::App app("k-way node separator solver");
  app.add_option("--graph", options.graph, "Input graph (METIS format)")->required();
  app.add_option("--k", options.k, "Number of blocks")->required()->check(CLI::PositiveNumber);
  app.add_option("--imbalance", options.imbalance, "Allowed imbalance epsilon")
      ->capture_default_str()
      ->check(CLI::NonNegativeNumber);
  app.add_option("--seed", options.seed, "Random seed")->capture_default_str();
  app.add_option("--time-limit", options.time_limit, "Time budget in seconds (advevo, advreps)")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  app.add_option("--pes", options.pes, "Number of workers")->capture_default_str()->check(CLI::PositiveNumber);
  app.add_option("--fraction", options.fraction, "Share f: the first t/f seconds create individuals")
      ->capture_default_str()
      ->check(CLI::Range(1.0, 1e9));
  app.add_option("--mutation-prob", options.mutation_prob, "Probability of mutation instead of combine")
      ->capture_default_str()
      ->check(CLI::Range(0.0, 1.0));
  app.add_option("--mode", options.mode, "adv, advevo, advreps or simple")
      ->capture_default_str()
      ->check(CLI::IsMember({"adv", "advevo", "advreps", "simple"}));
  app.add_option("--output", options.output, "Separator output file");
  app.add_option("--log", options.log, "Event log output file (JSON lines)");
  app.add_option("--coarsest", options.coarsest, "Coarsening threshold (0: max(1000, 30k))")
      ->capture_default_str()
      ->check(CLI::NonNegativeNumber);
  app.add_flag("--deterministic", options.deterministic, "Virtual clock with fixed operation costs");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kBadFlags;
  }
  try {
    return run(options);
  } catch (const InvalidArgument &e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBadFlags;
  }
}
