/*******************************************************************************
 * @file:   metis_io.h
 * @brief:  Reader and writer for the METIS/Chaco graph format.
 ******************************************************************************/
#pragma once

#include <istream>
#include <ostream>
#include <string>

#include "nodesep/graph.h"

namespace nodesep {
/// Parses a METIS graph. Supported format codes: 0, 1 (edge weights), 10 (node
/// weights) and 11 (both), optionally zero-padded ("011"). Parallel edges are
/// merged. Errors are reported as GraphFormatError carrying the line number.
Graph read_metis(std::istream &in);
Graph read_metis_file(const std::string &path);

/// Writes the canonical form: sorted adjacency, the format code is omitted for
/// unit weights.
void write_metis(const Graph &graph, std::ostream &out);
void write_metis_file(const Graph &graph, const std::string &path);
} // namespace nodesep
