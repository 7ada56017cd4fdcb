/*******************************************************************************
 * @file:   nodesep_curve.cc
 * @brief:  Convergence curve over event logs of several instances.
 ******************************************************************************/
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "nodesep/bench/convergence.h"
#include "nodesep/errors.h"

using namespace nodesep;

namespace {
struct Instance {
  double t_instance = 0.0;
  std::vector<std::vector<CurvePoint>> repetitions;
};

// Manifest lines: "instance t_I log_path"; several lines per instance are
// repetitions. Relative log paths are resolved against the manifest.
std::map<std::string, Instance> read_manifest(const std::string &path) {
  std::ifstream in(path);
  if (!in) {
    throw InvalidArgument("cannot open " + path);
  }
  const std::filesystem::path base = std::filesystem::path(path).parent_path();
  std::map<std::string, Instance> instances;
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (line.empty() || line[0] == '#') {
      continue;
    }
    std::istringstream fields(line);
    std::string name;
    double t_instance = 0.0;
    std::string log_path;
    if (!(fields >> name >> t_instance >> log_path)) {
      throw InvalidArgument("manifest line " + std::to_string(line_number) + ": expected 'instance t_I log'");
    }
    std::filesystem::path log_file(log_path);
    if (log_file.is_relative()) {
      log_file = base / log_file;
    }
    std::ifstream log(log_file);
    if (!log) {
      throw InvalidArgument("cannot open " + log_file.string());
    }
    Instance &instance = instances[name];
    if (instance.t_instance != 0.0 && instance.t_instance != t_instance) {
      throw InvalidArgument("instance " + name + " has conflicting t_I values");
    }
    instance.t_instance = t_instance;
    instance.repetitions.push_back(event_sequence(read_event_log(log)));
  }
  return instances;
}
} // namespace

int main(int argc, char **argv) {
  std::string manifest;
  std::string output;
  CLI::App app("Event based geometric mean convergence curve");
  app.add_option("--manifest", manifest, "Lines 'instance t_I log_path'")->required();
  app.add_option("--output", output, "TSV output (default: stdout)");
  CLI11_PARSE(app, argc, argv);

  try {
    std::map<std::string, std::vector<CurvePoint>> per_instance;
    for (const auto &[name, instance] : read_manifest(manifest)) {
      const std::vector<CurvePoint> averaged = average_repetitions(instance.repetitions);
      per_instance[name] = normalize(min_prefix(averaged), instance.t_instance);
    }
    const std::vector<CurvePoint> curve = event_geomean(per_instance);

    std::ofstream file;
    if (!output.empty()) {
      file.open(output);
    }
    std::ostream &out = output.empty() ? std::cout : file;
    out << "t_n\tG\n";
    out.precision(10);
    for (const CurvePoint &point : curve) {
      out << point.t << '\t' << point.size << '\n';
    }
  } catch (const InvalidArgument &e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
