#include "chordal/graph_io.hpp"

#include <istream>
#include <sstream>
#include <vector>

namespace chordal {

namespace {

std::string at_line(const char* msg, int line) {
  std::ostringstream os;
  os << msg << " at line " << line;
  return os.str();
}

Graph parse_edge_list(std::istream& in) {
  std::vector<std::pair<int, int>> edges;
  int max_id = -1;
  std::string line;
  int ln = 0;
  while (std::getline(in, line)) {
    ++ln;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream iss(line);
    long long a, b;
    if (!(iss >> a >> b)) {
      if (iss.eof() && line.find_first_not_of(" \t\r") == std::string::npos)
        continue;  // whitespace-only line
      throw ParseError(at_line("expected two integers", ln));
    }
    std::string rest;
    if (iss >> rest) throw ParseError(at_line("trailing tokens", ln));
    if (a < 0 || b < 0) throw ParseError(at_line("negative vertex id", ln));
    if (a == b) throw ValidationError(at_line("self-loop", ln));
    edges.emplace_back(static_cast<int>(a), static_cast<int>(b));
    max_id = std::max(max_id, static_cast<int>(std::max(a, b)));
  }
  return Graph::from_edges(max_id + 1, edges);
}

Graph parse_dimacs(std::istream& in) {
  std::string line;
  int ln = 0;
  bool have_header = false;
  int n = 0;
  Graph g;
  while (std::getline(in, line)) {
    ++ln;
    if (line.empty() || line[0] == 'c' || line[0] == '#') continue;
    std::istringstream iss(line);
    std::string kind;
    iss >> kind;
    if (kind == "p") {
      if (have_header) throw ParseError(at_line("duplicate header", ln));
      std::string fmt;
      long long nn, mm;
      if (!(iss >> fmt >> nn >> mm) || fmt != "edge" || nn < 0 || mm < 0)
        throw ParseError(at_line("malformed 'p edge <n> <m>' header", ln));
      n = static_cast<int>(nn);
      g = Graph(n);
      have_header = true;
    } else if (kind == "e") {
      if (!have_header) throw ParseError(at_line("edge before header", ln));
      long long a, b;
      if (!(iss >> a >> b)) throw ParseError(at_line("malformed edge line", ln));
      if (a < 1 || a > n || b < 1 || b > n)
        throw RangeError(at_line("vertex id outside declared range", ln));
      if (a == b) throw ValidationError(at_line("self-loop", ln));
      g.add_edge(static_cast<int>(a) - 1, static_cast<int>(b) - 1);
    } else {
      throw ParseError(at_line("unknown line type", ln));
    }
  }
  if (!have_header) throw ParseError("missing 'p edge' header");
  return g;
}

}  // namespace

Graph parse_graph(std::istream& in, GraphFormat format) {
  return format == GraphFormat::edge_list ? parse_edge_list(in) : parse_dimacs(in);
}

Graph parse_graph(const std::string& text, GraphFormat format) {
  std::istringstream in(text);
  return parse_graph(in, format);
}

std::string serialize_graph(const Graph& g, GraphFormat format) {
  std::ostringstream os;
  if (format == GraphFormat::dimacs)
    os << "p edge " << g.vertex_count() << " " << g.edge_count() << "\n";
  for (const Edge& e : g.edges()) {
    if (format == GraphFormat::dimacs)
      os << "e " << e.u + 1 << " " << e.v + 1 << "\n";
    else
      os << e.u << " " << e.v << "\n";
  }
  return os.str();
}

}  // namespace chordal
