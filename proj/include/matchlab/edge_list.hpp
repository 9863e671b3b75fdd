#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "matchlab/graph.hpp"

namespace matchlab {

/// Graph read from the edge-list text format:
///
///   # comment
///   n m
///   u v        (m lines, 0-based, u < v)
///   A: i1 i2 … (optional; marks a bipartite graph)
struct EdgeListFile {
  Graph graph;
  std::optional<Bipartition> bipartition;
};

EdgeListFile read_edge_list(std::istream& in);
EdgeListFile read_edge_list_file(const std::string& path);

void write_edge_list(std::ostream& out, const Graph& g,
                     const std::optional<Bipartition>& part = std::nullopt);

}  // namespace matchlab
