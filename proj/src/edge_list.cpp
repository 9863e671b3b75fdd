#include "matchlab/edge_list.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

#include "matchlab/error.hpp"

namespace matchlab {

namespace {

bool is_blank_or_comment(const std::string& line) {
  const auto pos = line.find_first_not_of(" \t\r");
  return pos == std::string::npos || line[pos] == '#';
}

[[noreturn]] void parse_fail(std::size_t line_no, const std::string& what) {
  throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": " + what);
}

}  // namespace

EdgeListFile read_edge_list(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  std::size_t n = 0;
  std::size_t m = 0;
  bool have_header = false;
  std::vector<Edge> edges;
  std::optional<VertexSet> side_a;

  while (std::getline(in, line)) {
    ++line_no;
    if (is_blank_or_comment(line)) continue;
    std::istringstream fields(line);
    if (!have_header) {
      if (!(fields >> n >> m)) parse_fail(line_no, "expected header 'n m'");
      have_header = true;
      continue;
    }
    if (line.find("A:") != std::string::npos) {
      fields.ignore(line.find("A:") + 2);
      VertexSet a;
      Vertex v = 0;
      while (fields >> v) a.push_back(v);
      side_a = std::move(a);
      continue;
    }
    Vertex u = 0;
    Vertex v = 0;
    if (!(fields >> u >> v)) parse_fail(line_no, "expected edge 'u v'");
    if (u > v) parse_fail(line_no, "edge endpoints must satisfy u < v");
    edges.push_back({u, v});
  }
  if (!have_header) throw Error(ErrorCode::ParseError, "missing header");
  if (edges.size() != m) {
    throw Error(ErrorCode::ParseError, "header declares " + std::to_string(m) + " edges, found " +
                                           std::to_string(edges.size()));
  }

  EdgeListFile file{build_graph(n, edges), std::nullopt};
  if (side_a) {
    auto part = make_bipartition(n, std::move(*side_a));
    if (!respects(file.graph, part)) {
      throw Error(ErrorCode::NotBipartite, "an edge lies inside one side of 'A:'");
    }
    file.bipartition = std::move(part);
  }
  return file;
}

EdgeListFile read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
  return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g, const std::optional<Bipartition>& part) {
  out << g.order() << ' ' << g.size() << '\n';
  for (const auto& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  if (part) {
    out << "A:";
    for (Vertex v : part->side_a) out << ' ' << v;
    out << '\n';
  }
}

}  // namespace matchlab
