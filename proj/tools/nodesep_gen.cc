/*******************************************************************************
 * @file:   nodesep_gen.cc
 * @brief:  Writes synthetic graphs in METIS format.
 ******************************************************************************/
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "nodesep/bench/generators.h"
#include "nodesep/metis_io.h"

using namespace nodesep;

int main(int argc, char **argv) {
  std::string family = "grid";
  NodeID n = 100;
  NodeID rows = 10;
  NodeID cols = 10;
  EdgeID m = 300;
  double radius = 0.05;
  std::uint64_t seed = 0;
  NodeWeight max_node_weight = 1;
  EdgeWeight max_edge_weight = 1;
  std::string output;

  CLI::App app("Synthetic graph generator");
  app.add_option("--family", family, "path, cycle, grid, gnm, geometric or tree")
      ->capture_default_str()
      ->check(CLI::IsMember({"path", "cycle", "grid", "gnm", "geometric", "tree"}));
  app.add_option("--n", n, "Number of nodes")->capture_default_str()->check(CLI::NonNegativeNumber);
  app.add_option("--rows", rows, "Grid rows")->capture_default_str()->check(CLI::NonNegativeNumber);
  app.add_option("--cols", cols, "Grid columns")->capture_default_str()->check(CLI::NonNegativeNumber);
  app.add_option("--m", m, "Number of edges (gnm)")->capture_default_str()->check(CLI::NonNegativeNumber);
  app.add_option("--radius", radius, "Connection radius (geometric)")->capture_default_str();
  app.add_option("--seed", seed, "Random seed")->capture_default_str();
  app.add_option("--max-node-weight", max_node_weight, "Random node weights in [1, w]")->capture_default_str();
  app.add_option("--max-edge-weight", max_edge_weight, "Random edge weights in [1, w]")->capture_default_str();
  app.add_option("--output", output, "Output file (default: stdout)");
  CLI11_PARSE(app, argc, argv);

  Random rng(seed);
  Graph graph;
  if (family == "path") {
    graph = gen::path(n);
  } else if (family == "cycle") {
    graph = gen::cycle(n);
  } else if (family == "grid") {
    graph = gen::grid(rows, cols);
  } else if (family == "gnm") {
    graph = gen::random_gnm(n, m, rng);
  } else if (family == "geometric") {
    graph = gen::random_geometric(n, radius, rng);
  } else {
    graph = gen::random_tree(n, rng);
  }
  if (max_node_weight > 1 || max_edge_weight > 1) {
    graph = gen::with_random_weights(graph, max_node_weight, max_edge_weight, rng);
  }

  if (output.empty()) {
    write_metis(graph, std::cout);
  } else {
    write_metis_file(graph, output);
  }
  return 0;
}
