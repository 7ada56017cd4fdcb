/*******************************************************************************
 * @file:   metis_io.cc
 * @brief:  Reader and writer for the METIS/Chaco graph format.
 ******************************************************************************/
#include "nodesep/metis_io.h"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <limits>
#include <vector>

#include "nodesep/errors.h"

namespace nodesep {
namespace {
class LineTokenizer {
public:
  explicit LineTokenizer(const std::string &line) : _cur(line.data()), _end(line.data() + line.size()) {}

  bool next(std::int64_t &value) {
    while (_cur < _end && (*_cur == ' ' || *_cur == '\t' || *_cur == '\r')) {
      ++_cur;
    }
    if (_cur == _end) {
      return false;
    }
    const auto [ptr, ec] = std::from_chars(_cur, _end, value);
    if (ec != std::errc{} || (ptr < _end && *ptr != ' ' && *ptr != '\t' && *ptr != '\r')) {
      _failed = true;
      return false;
    }
    _cur = ptr;
    return true;
  }

  [[nodiscard]] bool failed() const { return _failed; }

private:
  const char *_cur;
  const char *_end;
  bool _failed = false;
};

bool next_content_line(std::istream &in, std::string &line, std::size_t &line_no) {
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line[0] == '%') {
      continue;
    }
    return true;
  }
  return false;
}
} // namespace

Graph read_metis(std::istream &in) {
  std::string line;
  std::size_t line_no = 0;

  // header: n m [fmt [ncon]]
  do {
    if (!next_content_line(in, line, line_no)) {
      throw GraphFormatError("malformed header: missing", line_no);
    }
  } while (std::all_of(line.begin(), line.end(), [](char c) { return std::isspace(c); }));

  std::string fmt = "0";
  std::int64_t n = -1;
  std::int64_t m = -1;
  std::int64_t ncon = 1;
  const std::size_t header_line = line_no;
  {
    std::vector<std::string> fields;
    std::size_t pos = 0;
    while (pos < line.size()) {
      const std::size_t start = line.find_first_not_of(" \t\r", pos);
      if (start == std::string::npos) {
        break;
      }
      const std::size_t stop = line.find_first_of(" \t\r", start);
      fields.push_back(line.substr(start, stop - start));
      pos = stop == std::string::npos ? line.size() : stop;
    }
    if (fields.size() < 2 || fields.size() > 4) {
      throw GraphFormatError("malformed header", line_no);
    }
    auto parse = [&](const std::string &field) {
      std::int64_t value = 0;
      const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
      if (ec != std::errc{} || ptr != field.data() + field.size() || value < 0) {
        throw GraphFormatError("malformed header", line_no);
      }
      return value;
    };
    n = parse(fields[0]);
    m = parse(fields[1]);
    if (fields.size() >= 3) {
      fmt = fields[2];
      if (fmt.size() > 3 || !std::all_of(fmt.begin(), fmt.end(), [](char c) { return c == '0' || c == '1'; })) {
        throw GraphFormatError("malformed header: unsupported format code " + fmt, line_no);
      }
      if (fmt.size() == 3 && fmt[0] == '1') {
        throw GraphFormatError("malformed header: node sizes are not supported", line_no);
      }
    }
    if (fields.size() == 4) {
      ncon = parse(fields[3]);
      if (ncon != 1) {
        throw GraphFormatError("malformed header: multi-constraint weights are not supported", line_no);
      }
    }
    if (n > std::numeric_limits<NodeID>::max() - 1) {
      throw GraphFormatError("malformed header: too many nodes", line_no);
    }
  }

  const bool has_edge_weights = fmt.back() == '1';
  const bool has_node_weights = fmt.size() >= 2 && fmt[fmt.size() - 2] == '1';

  std::vector<NodeWeight> node_weights(n, 1);
  std::vector<WeightedEdge> arcs;
  arcs.reserve(2 * m);
  std::vector<std::size_t> node_line(n, 0);

  for (NodeID u = 0; u < n; ++u) {
    if (!next_content_line(in, line, line_no)) {
      throw GraphFormatError("expected adjacency of node " + std::to_string(u + 1) + ", got end of input",
                             line_no);
    }
    node_line[u] = line_no;
    LineTokenizer tokens(line);
    std::int64_t value = 0;
    if (has_node_weights) {
      if (!tokens.next(value) || value < 1) {
        throw GraphFormatError("missing or non-positive node weight", line_no);
      }
      node_weights[u] = value;
    }
    while (tokens.next(value)) {
      if (value < 1 || value > n) {
        throw GraphFormatError("index out of range", line_no);
      }
      const auto v = static_cast<NodeID>(value - 1);
      if (v == u) {
        throw GraphFormatError("self-loop", line_no);
      }
      EdgeWeight weight = 1;
      if (has_edge_weights) {
        if (!tokens.next(weight)) {
          throw GraphFormatError("missing edge weight", line_no);
        }
        if (weight < 1) {
          throw GraphFormatError("non-positive edge weight", line_no);
        }
      }
      arcs.push_back({u, v, weight});
    }
    if (tokens.failed()) {
      throw GraphFormatError("malformed number", line_no);
    }
  }

  if (static_cast<std::int64_t>(arcs.size()) != 2 * m) {
    throw GraphFormatError("header declares " + std::to_string(m) + " edges but adjacency lists contain " +
                               std::to_string(arcs.size()) + " entries",
                           header_line);
  }

  // symmetry check on the merged arc multiset
  std::sort(arcs.begin(), arcs.end(), [](const WeightedEdge &a, const WeightedEdge &b) {
    return a.u < b.u || (a.u == b.u && a.v < b.v);
  });
  std::vector<EdgeID> offsets(n + 1, 0);
  std::vector<NodeID> targets;
  std::vector<EdgeWeight> weights;
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    if (i > 0 && arcs[i].u == arcs[i - 1].u && arcs[i].v == arcs[i - 1].v) {
      weights.back() += arcs[i].weight;
      continue;
    }
    targets.push_back(arcs[i].v);
    weights.push_back(arcs[i].weight);
    ++offsets[arcs[i].u + 1];
  }
  for (NodeID u = 0; u < n; ++u) {
    offsets[u + 1] += offsets[u];
  }

  for (NodeID u = 0; u < n; ++u) {
    for (EdgeID e = offsets[u]; e < offsets[u + 1]; ++e) {
      const NodeID v = targets[e];
      const auto begin = targets.begin() + offsets[v];
      const auto end = targets.begin() + offsets[v + 1];
      const auto it = std::lower_bound(begin, end, u);
      if (it == end || *it != u || weights[it - targets.begin()] != weights[e]) {
        throw GraphFormatError("asymmetric adjacency: node " + std::to_string(u + 1) + " lists " +
                                   std::to_string(v + 1) + " without a matching reverse entry",
                               node_line[u]);
      }
    }
  }
  return {std::move(offsets), std::move(targets), std::move(weights), std::move(node_weights)};
}

Graph read_metis_file(const std::string &path) {
  std::ifstream in(path);
  if (!in) {
    throw GraphFormatError("cannot open " + path);
  }
  return read_metis(in);
}

void write_metis(const Graph &graph, std::ostream &out) {
  const bool node_weights = !graph.has_unit_node_weights();
  const bool edge_weights = !graph.has_unit_edge_weights();

  out << graph.n() << ' ' << graph.m();
  if (node_weights || edge_weights) {
    out << ' ' << (node_weights ? "1" : "") << (edge_weights ? "1" : "0");
  }
  out << '\n';

  for (NodeID u = 0; u < graph.n(); ++u) {
    bool first = true;
    if (node_weights) {
      out << graph.node_weight(u);
      first = false;
    }
    for (EdgeID e = graph.first_edge(u); e < graph.first_invalid_edge(u); ++e) {
      if (!first) {
        out << ' ';
      }
      first = false;
      out << graph.edge_target(e) + 1;
      if (edge_weights) {
        out << ' ' << graph.edge_weight(e);
      }
    }
    out << '\n';
  }
}

void write_metis_file(const Graph &graph, const std::string &path) {
  std::ofstream out(path);
  if (!out) {
    throw GraphFormatError("cannot write " + path);
  }
  write_metis(graph, out);
}
} // namespace nodesep
