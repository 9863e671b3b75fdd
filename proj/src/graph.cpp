#include "matchlab/graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "matchlab/error.hpp"
#include "matchlab/random.hpp"

namespace matchlab {

namespace {

void check_vertex(Vertex v, std::size_t n) {
  if (v >= n) {
    throw Error(ErrorCode::VertexOutOfRange,
                "vertex " + std::to_string(v) + " not in 0.." + std::to_string(n) + "-1");
  }
}

std::string edge_str(Edge e) { return std::to_string(e.u) + "-" + std::to_string(e.v); }

}  // namespace

EdgeSet::EdgeSet(std::vector<Edge> edges) : edges_(std::move(edges)) {
  for (auto& e : edges_) e = make_edge(e.u, e.v);
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

bool EdgeSet::contains(Edge e) const noexcept {
  return std::binary_search(edges_.begin(), edges_.end(), make_edge(e.u, e.v));
}

bool EdgeSet::is_matching() const { return max_degree() <= 1; }

std::size_t EdgeSet::max_degree() const {
  std::vector<Vertex> ends;
  ends.reserve(2 * edges_.size());
  for (const auto& e : edges_) {
    ends.push_back(e.u);
    ends.push_back(e.v);
  }
  std::sort(ends.begin(), ends.end());
  std::size_t best = 0;
  for (std::size_t i = 0; i < ends.size();) {
    std::size_t j = i;
    while (j < ends.size() && ends[j] == ends[i]) ++j;
    best = std::max(best, j - i);
    i = j;
  }
  return best;
}

Matching::Matching(std::vector<Edge> edges) : edges_(std::move(edges)) {
  for (auto& e : edges_) {
    if (e.u == e.v) throw Error(ErrorCode::SelfLoop, "loop at " + std::to_string(e.u));
    e = make_edge(e.u, e.v);
  }
  std::sort(edges_.begin(), edges_.end());
  std::vector<Vertex> ends;
  for (const auto& e : edges_) {
    ends.push_back(e.u);
    ends.push_back(e.v);
  }
  std::sort(ends.begin(), ends.end());
  if (std::adjacent_find(ends.begin(), ends.end()) != ends.end()) {
    throw Error(ErrorCode::NotAMatching, "edges share a vertex");
  }
}

bool Matching::contains(Edge e) const noexcept {
  return std::binary_search(edges_.begin(), edges_.end(), make_edge(e.u, e.v));
}

std::vector<std::optional<Vertex>> Matching::partners(std::size_t n) const {
  std::vector<std::optional<Vertex>> partner(n);
  for (const auto& e : edges_) {
    check_vertex(e.v, n);
    partner[e.u] = e.v;
    partner[e.v] = e.u;
  }
  return partner;
}

VertexSet Matching::covered_vertices() const {
  VertexSet out;
  for (const auto& e : edges_) {
    out.push_back(e.u);
    out.push_back(e.v);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool Graph::has_edge(Vertex a, Vertex b) const {
  if (a >= order() || b >= order()) return false;
  const auto& nb = adjacency_[a];
  return std::binary_search(nb.begin(), nb.end(), b);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < order(); ++u) {
    for (Vertex v : adjacency_[u]) {
      if (u < v) out.push_back({u, v});
    }
  }
  return out;
}

std::size_t Graph::min_degree() const {
  std::size_t best = order() == 0 ? 0 : SIZE_MAX;
  for (const auto& nb : adjacency_) best = std::min(best, nb.size());
  return best;
}

std::size_t Graph::max_degree() const {
  std::size_t best = 0;
  for (const auto& nb : adjacency_) best = std::max(best, nb.size());
  return best;
}

VertexMask Graph::neighbour_mask(Vertex v) const {
  if (order() > kMaskBits) throw Error(ErrorCode::TooLarge, "bitmask needs n <= 64");
  VertexMask mask = 0;
  for (Vertex w : adjacency_[v]) mask |= VertexMask{1} << w;
  return mask;
}

bool Digraph::has_arc(Vertex from, Vertex to) const {
  if (from >= order() || to >= order()) return false;
  const auto& nb = out_[from];
  return std::binary_search(nb.begin(), nb.end(), to);
}

std::vector<Arc> Digraph::arcs() const {
  std::vector<Arc> out;
  out.reserve(arc_count_);
  for (Vertex u = 0; u < order(); ++u) {
    for (Vertex v : out_[u]) out.push_back({u, v});
  }
  return out;
}

Graph build_graph(std::size_t n, std::span<const Edge> edges) {
  Graph g(n);
  for (const auto& e : edges) {
    check_vertex(e.u, n);
    check_vertex(e.v, n);
    if (e.u == e.v) throw Error(ErrorCode::SelfLoop, "loop at " + std::to_string(e.u));
    g.adjacency_[e.u].push_back(e.v);
    g.adjacency_[e.v].push_back(e.u);
  }
  std::size_t twice = 0;
  for (auto& nb : g.adjacency_) {
    std::sort(nb.begin(), nb.end());
    nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
    twice += nb.size();
  }
  g.edge_count_ = twice / 2;
  return g;
}

Digraph build_digraph(std::size_t n, std::span<const Arc> arcs) {
  Digraph d(n);
  for (const auto& a : arcs) {
    check_vertex(a.from, n);
    check_vertex(a.to, n);
    if (a.from == a.to) throw Error(ErrorCode::SelfLoop, "loop at " + std::to_string(a.from));
    d.out_[a.from].push_back(a.to);
    d.in_[a.to].push_back(a.from);
  }
  std::size_t count = 0;
  for (auto* side : {&d.out_, &d.in_}) {
    for (auto& nb : *side) {
      std::sort(nb.begin(), nb.end());
      nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
    }
  }
  for (const auto& nb : d.out_) count += nb.size();
  d.arc_count_ = count;
  return d;
}

Graph complete_graph(std::size_t n) { return complete_multipartite(n, 1); }

Graph complete_multipartite(std::size_t parts, std::size_t part_size) {
  if (parts == 0 || part_size == 0) {
    throw Error(ErrorCode::InvalidParameter, "complete_multipartite needs a >= 1 and b >= 1");
  }
  const std::size_t n = parts * part_size;
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (u / part_size != v / part_size) edges.push_back({u, v});
    }
  }
  return build_graph(n, edges);
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw Error(ErrorCode::InvalidParameter, "cycle needs n >= 3");
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) edges.push_back(make_edge(v, (v + 1) % n));
  return build_graph(n, edges);
}

Graph path_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
  return build_graph(n, edges);
}

namespace {

// One attempt at a sparse d-regular graph via incremental pairing.
// Returns false on a dead end (no admissible pair among the leftover points).
bool try_pairing(std::size_t n, std::size_t d, Rng& rng, std::vector<Edge>& edges) {
  std::vector<Vertex> points;
  points.reserve(n * d);
  for (Vertex v = 0; v < n; ++v) points.insert(points.end(), d, v);
  std::vector<std::vector<bool>> adjacent(n, std::vector<bool>(n, false));
  edges.clear();

  auto admissible = [&](std::size_t i, std::size_t j) {
    const Vertex a = points[i];
    const Vertex b = points[j];
    return a != b && !adjacent[a][b];
  };
  auto take = [&](std::size_t i, std::size_t j) {
    const Vertex a = points[i];
    const Vertex b = points[j];
    adjacent[a][b] = adjacent[b][a] = true;
    edges.push_back(make_edge(a, b));
    if (i < j) std::swap(i, j);
    points[i] = points.back();
    points.pop_back();
    points[j] = points.back();
    points.pop_back();
  };

  constexpr int kQuickTries = 64;
  while (!points.empty()) {
    bool paired = false;
    for (int t = 0; t < kQuickTries && !paired; ++t) {
      const std::size_t i = uniform_below(rng, points.size());
      const std::size_t j = uniform_below(rng, points.size());
      if (i != j && admissible(i, j)) {
        take(i, j);
        paired = true;
      }
    }
    if (paired) continue;
    std::vector<std::pair<std::size_t, std::size_t>> options;
    for (std::size_t i = 0; i < points.size(); ++i) {
      for (std::size_t j = i + 1; j < points.size(); ++j) {
        if (admissible(i, j)) options.emplace_back(i, j);
      }
    }
    if (options.empty()) return false;
    const auto [i, j] = options[uniform_below(rng, options.size())];
    take(i, j);
  }
  return true;
}

}  // namespace

Graph random_regular(std::size_t n, std::size_t d, std::uint64_t seed) {
  if (d >= n || (n * d) % 2 != 0) {
    throw Error(ErrorCode::InfeasibleDegreeSequence,
                "no simple " + std::to_string(d) + "-regular graph on " + std::to_string(n) +
                    " vertices");
  }
  if (2 * d > n - 1) return complement(random_regular(n, n - 1 - d, seed));

  Rng rng(seed);
  std::vector<Edge> edges;
  for (std::size_t attempt = 0; attempt < kRandomRegularRestarts; ++attempt) {
    if (try_pairing(n, d, rng, edges)) return build_graph(n, edges);
  }
  throw Error(ErrorCode::GenerationTimeout,
              "pairing failed after " + std::to_string(kRandomRegularRestarts) + " restarts");
}

Graph complement(const Graph& g) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v = u + 1; v < g.order(); ++v) {
      if (!g.has_edge(u, v)) edges.push_back({u, v});
    }
  }
  return build_graph(g.order(), edges);
}

std::optional<std::size_t> regularity(const Graph& g) {
  if (g.order() == 0) return 0;
  const std::size_t d = g.degree(0);
  for (Vertex v = 1; v < g.order(); ++v) {
    if (g.degree(v) != d) return std::nullopt;
  }
  return d;
}

std::optional<std::size_t> regularity(const Digraph& dg) {
  if (dg.order() == 0) return 0;
  const std::size_t d = dg.out_degree(0);
  for (Vertex v = 0; v < dg.order(); ++v) {
    if (dg.out_degree(v) != d || dg.in_degree(v) != d) return std::nullopt;
  }
  return d;
}

Graph remove_edge_set(const Graph& g, const EdgeSet& removed) {
  for (const auto& e : removed) {
    if (!g.has_edge(e.u, e.v)) throw Error(ErrorCode::EdgeNotPresent, edge_str(e));
  }
  std::vector<Edge> kept;
  for (const auto& e : g.edges()) {
    if (!removed.contains(e)) kept.push_back(e);
  }
  return build_graph(g.order(), kept);
}

Graph add_edge_set(const Graph& g, const EdgeSet& added) {
  auto edges = g.edges();
  edges.insert(edges.end(), added.begin(), added.end());
  return build_graph(g.order(), edges);
}

Digraph symmetric_digraph(const Graph& g) {
  std::vector<Arc> arcs;
  for (const auto& e : g.edges()) {
    arcs.push_back({e.u, e.v});
    arcs.push_back({e.v, e.u});
  }
  return build_digraph(g.order(), arcs);
}

Digraph complete_digraph(std::size_t n) { return symmetric_digraph(complete_graph(n)); }

Digraph directed_cycle(std::size_t n) {
  const std::size_t step = 1;
  return circulant_digraph(n, std::span<const std::size_t>(&step, 1));
}

Digraph circulant_digraph(std::size_t n, std::span<const std::size_t> steps) {
  std::vector<Arc> arcs;
  for (Vertex v = 0; v < n; ++v) {
    for (std::size_t s : steps) {
      if (s % n == 0) throw Error(ErrorCode::SelfLoop, "step multiple of n");
      arcs.push_back({v, (v + s) % n});
    }
  }
  return build_digraph(n, arcs);
}

Bipartition make_bipartition(std::size_t n, VertexSet side_a) {
  std::sort(side_a.begin(), side_a.end());
  if (std::adjacent_find(side_a.begin(), side_a.end()) != side_a.end()) {
    throw Error(ErrorCode::InvalidParameter, "repeated vertex in bipartition side");
  }
  std::vector<bool> in_a(n, false);
  for (Vertex v : side_a) {
    check_vertex(v, n);
    in_a[v] = true;
  }
  Bipartition part;
  part.side_a = std::move(side_a);
  for (Vertex v = 0; v < n; ++v) {
    if (!in_a[v]) part.side_b.push_back(v);
  }
  return part;
}

bool respects(const Graph& g, const Bipartition& part) {
  std::vector<int> side(g.order(), -1);
  for (Vertex v : part.side_a) {
    if (v >= g.order()) return false;
    side[v] = 0;
  }
  for (Vertex v : part.side_b) {
    if (v >= g.order() || side[v] == 0) return false;
    side[v] = 1;
  }
  if (std::count(side.begin(), side.end(), -1) != 0) return false;
  for (const auto& e : g.edges()) {
    if (side[e.u] == side[e.v]) return false;
  }
  return true;
}

Bipartition multipartite_halves(std::size_t part_size) {
  VertexSet a(part_size);
  std::iota(a.begin(), a.end(), Vertex{0});
  return make_bipartition(2 * part_size, std::move(a));
}

bool is_perfect_matching(const Graph& g, const Matching& m) {
  if (2 * m.size() != g.order()) return false;
  for (const auto& e : m) {
    if (!g.has_edge(e.u, e.v)) return false;
  }
  return true;
}

}  // namespace matchlab
