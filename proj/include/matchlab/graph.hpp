#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace matchlab {

using Vertex = std::size_t;
using VertexSet = std::vector<Vertex>;  // sorted, duplicate-free
using VertexMask = std::uint64_t;

inline constexpr std::size_t kMaskBits = 64;

/// Undirected edge stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  auto operator<=>(const Edge&) const = default;
};

/// Normalizes endpoint order. Does not reject loops; builders do.
constexpr Edge make_edge(Vertex a, Vertex b) noexcept {
  return a < b ? Edge{a, b} : Edge{b, a};
}

/// Sorted, duplicate-free set of undirected edges. Used wherever an argument
/// may be either a matching or an arbitrary (e.g. r-regular spanning) subgraph.
class EdgeSet {
 public:
  EdgeSet() = default;
  explicit EdgeSet(std::vector<Edge> edges);

  std::size_t size() const noexcept { return edges_.size(); }
  bool empty() const noexcept { return edges_.empty(); }
  bool contains(Edge e) const noexcept;
  std::span<const Edge> edges() const noexcept { return edges_; }
  auto begin() const noexcept { return edges_.begin(); }
  auto end() const noexcept { return edges_.end(); }

  /// True when the edges are pairwise vertex-disjoint.
  bool is_matching() const;
  std::size_t max_degree() const;

  bool operator==(const EdgeSet&) const = default;

 private:
  std::vector<Edge> edges_;
};

/// Set of pairwise vertex-disjoint edges, kept in canonical (sorted) order.
class Matching {
 public:
  Matching() = default;
  /// Throws NotAMatching if two edges share a vertex, SelfLoop on u == v.
  explicit Matching(std::vector<Edge> edges);

  std::size_t size() const noexcept { return edges_.size(); }
  bool empty() const noexcept { return edges_.empty(); }
  std::span<const Edge> edges() const noexcept { return edges_; }
  auto begin() const noexcept { return edges_.begin(); }
  auto end() const noexcept { return edges_.end(); }
  bool contains(Edge e) const noexcept;

  /// partner[v] for every v < n; std::nullopt for uncovered vertices.
  std::vector<std::optional<Vertex>> partners(std::size_t n) const;
  VertexSet covered_vertices() const;

  operator EdgeSet() const { return EdgeSet(edges_); }  // NOLINT(google-explicit-constructor)

  auto operator<=>(const Matching&) const = default;

 private:
  std::vector<Edge> edges_;
};

/// Simple undirected graph on vertices 0..n-1 with sorted adjacency lists.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n) : adjacency_(n) {}

  std::size_t order() const noexcept { return adjacency_.size(); }
  std::size_t size() const noexcept { return edge_count_; }
  std::span<const Vertex> neighbours(Vertex v) const { return adjacency_[v]; }
  std::size_t degree(Vertex v) const { return adjacency_[v].size(); }
  bool has_edge(Vertex a, Vertex b) const;
  std::vector<Edge> edges() const;
  EdgeSet edge_set() const { return EdgeSet(edges()); }
  std::size_t min_degree() const;
  std::size_t max_degree() const;

  /// Neighbour bitmask; requires order() <= 64.
  VertexMask neighbour_mask(Vertex v) const;

  bool operator==(const Graph&) const = default;

 private:
  friend Graph build_graph(std::size_t, std::span<const Edge>);
  std::vector<std::vector<Vertex>> adjacency_;
  std::size_t edge_count_ = 0;
};

struct Arc {
  Vertex from = 0;
  Vertex to = 0;

  auto operator<=>(const Arc&) const = default;
};

/// Loopless digraph without parallel arcs; in/out adjacency kept consistent.
class Digraph {
 public:
  Digraph() = default;
  explicit Digraph(std::size_t n) : out_(n), in_(n) {}

  std::size_t order() const noexcept { return out_.size(); }
  std::size_t arc_count() const noexcept { return arc_count_; }
  std::span<const Vertex> out_neighbours(Vertex v) const { return out_[v]; }
  std::span<const Vertex> in_neighbours(Vertex v) const { return in_[v]; }
  std::size_t out_degree(Vertex v) const { return out_[v].size(); }
  std::size_t in_degree(Vertex v) const { return in_[v].size(); }
  bool has_arc(Vertex from, Vertex to) const;
  std::vector<Arc> arcs() const;

  bool operator==(const Digraph&) const = default;

 private:
  friend Digraph build_digraph(std::size_t, std::span<const Arc>);
  std::vector<std::vector<Vertex>> out_;
  std::vector<std::vector<Vertex>> in_;
  std::size_t arc_count_ = 0;
};

struct Bipartition {
  VertexSet side_a;
  VertexSet side_b;
};

/// Duplicate edges collapse; throws SelfLoop / VertexOutOfRange.
Graph build_graph(std::size_t n, std::span<const Edge> edges);
Digraph build_digraph(std::size_t n, std::span<const Arc> arcs);

Graph complete_graph(std::size_t n);
/// K_{a x b}: parts are the contiguous id blocks [i*b, (i+1)*b).
Graph complete_multipartite(std::size_t parts, std::size_t part_size);
Graph cycle_graph(std::size_t n);
Graph path_graph(std::size_t n);

inline constexpr std::size_t kRandomRegularRestarts = 10'000;

/// Simple d-regular graph from the pairing model with incremental rejection
/// of loops and repeated pairs. Dense targets (d > (n-1)/2) are produced as
/// the complement of a sparse one. Deterministic in `seed`.
Graph random_regular(std::size_t n, std::size_t d, std::uint64_t seed);

Graph complement(const Graph& g);

std::optional<std::size_t> regularity(const Graph& g);
std::optional<std::size_t> regularity(const Digraph& d);

/// G with the edges of `removed` deleted; throws EdgeNotPresent.
Graph remove_edge_set(const Graph& g, const EdgeSet& removed);
/// G with `added` inserted (endpoints must be in range).
Graph add_edge_set(const Graph& g, const EdgeSet& added);

/// Every edge becomes a pair of opposite arcs.
Digraph symmetric_digraph(const Graph& g);
Digraph complete_digraph(std::size_t n);
Digraph directed_cycle(std::size_t n);
/// Arcs i -> i+s (mod n) for every s in `steps`.
Digraph circulant_digraph(std::size_t n, std::span<const std::size_t> steps);

/// Validates disjointness and coverage of 0..n-1; side_b is the complement.
Bipartition make_bipartition(std::size_t n, VertexSet side_a);
bool respects(const Graph& g, const Bipartition& part);
/// Parts of K_{2 x b} as a bipartition.
Bipartition multipartite_halves(std::size_t part_size);

bool is_perfect_matching(const Graph& g, const Matching& m);

}  // namespace matchlab
