#include "matchlab/switching.hpp"

#include <algorithm>
#include <string>

#include "matchlab/error.hpp"

namespace matchlab {

std::size_t f_of(const EdgeSet& n, std::size_t k) {
  if (k == 0) throw Error(ErrorCode::InvalidParameter, "f(N,k) needs k >= 1");
  if (!n.is_matching()) return n.size();
  return k - 1 > n.size() ? 0 : n.size() - (k - 1);
}

std::size_t SwitchGraph::edge_count() const {
  std::size_t total = 0;
  for (const auto& adj : left_adjacency) total += adj.size();
  return total;
}

std::size_t default_ell(std::size_t n) { return n / 2; }

namespace {

using AdjacencyMatrix = std::vector<std::vector<char>>;

AdjacencyMatrix edge_matrix(std::size_t n, const EdgeSet& edges) {
  AdjacencyMatrix mat(n, std::vector<char>(n, 0));
  for (const auto& e : edges) {
    if (e.v >= n) throw Error(ErrorCode::VertexOutOfRange, std::to_string(e.v));
    mat[e.u][e.v] = mat[e.v][e.u] = 1;
  }
  return mat;
}

std::vector<Vertex> partner_array(const Matching& m, std::size_t n) {
  std::vector<Vertex> partner(n, n);
  for (const auto& e : m) {
    partner[e.u] = e.v;
    partner[e.v] = e.u;
  }
  return partner;
}

// Switching relation on perfect matchings given as partner arrays.
bool related(const std::vector<Vertex>& pa, const std::vector<Vertex>& pb,
             const AdjacencyMatrix& in_n, std::size_t ell) {
  const std::size_t n = pa.size();
  std::size_t differing = 0;
  Vertex start = n;
  for (Vertex v = 0; v < n; ++v) {
    if (pa[v] != pb[v]) {
      ++differing;
      if (start == n) start = v;
    }
  }
  if (differing != 2 * ell) return false;

  std::size_t steps = 0;
  std::size_t n_edges_in_m = 0;
  std::size_t n_edges_in_m_prime = 0;
  Vertex x = start;
  do {
    const Vertex y = pa[x];
    n_edges_in_m += in_n[x][y];
    const Vertex next = pb[y];
    n_edges_in_m_prime += in_n[y][next];
    x = next;
    ++steps;
  } while (x != start && steps <= ell);
  return steps == ell && n_edges_in_m == 1 && n_edges_in_m_prime == 0;
}

void check_ell(std::size_t n, std::size_t ell) {
  if (ell < 2 || 2 * ell > n) {
    throw Error(ErrorCode::InvalidParameter,
                "ell must satisfy 2 <= ell and 2*ell <= n (ell=" + std::to_string(ell) + ")");
  }
}

}  // namespace

bool is_switch_pair(const Matching& m, const Matching& m_prime, const EdgeSet& n,
                    std::size_t ell) {
  std::size_t order = 0;
  for (const auto* mm : {&m, &m_prime}) {
    for (const auto& e : *mm) order = std::max(order, e.v + 1);
  }
  if (m.covered_vertices() != m_prime.covered_vertices()) return false;
  const auto pa = partner_array(m, order);
  const auto pb = partner_array(m_prime, order);
  AdjacencyMatrix in_n(order, std::vector<char>(order, 0));
  for (const auto& e : n) {
    if (e.v < order) in_n[e.u][e.v] = in_n[e.v][e.u] = 1;
  }
  return related(pa, pb, in_n, ell);
}

SwitchGraph build_switch_graph(const Graph& g, const EdgeSet& n, std::size_t k, std::size_t ell,
                               std::size_t cap) {
  if (k == 0) throw Error(ErrorCode::InvalidParameter, "k must be >= 1");
  check_ell(g.order(), ell);
  for (const auto& e : n) {
    if (!g.has_edge(e.u, e.v)) throw Error(ErrorCode::EdgeNotPresent, "N edge not in G");
  }
  SwitchGraph h;
  h.ell = ell;
  h.k = k;
  for (auto& m : enumerate_pm(g, cap)) {
    const std::size_t hits = intersection_size(m, n);
    if (hits == k) h.left.push_back(std::move(m));
    else if (hits + 1 == k) h.right.push_back(std::move(m));
  }

  const std::size_t order = g.order();
  const AdjacencyMatrix in_n = edge_matrix(order, n);
  std::vector<std::vector<Vertex>> right_partners;
  right_partners.reserve(h.right.size());
  for (const auto& m : h.right) right_partners.push_back(partner_array(m, order));

  h.left_adjacency.assign(h.left.size(), {});
  h.right_degree.assign(h.right.size(), 0);
  for (std::size_t i = 0; i < h.left.size(); ++i) {
    const auto pa = partner_array(h.left[i], order);
    for (std::size_t j = 0; j < h.right.size(); ++j) {
      if (related(pa, right_partners[j], in_n, ell)) {
        h.left_adjacency[i].push_back(j);
        ++h.right_degree[j];
      }
    }
  }
  return h;
}

namespace {

AuxDigraph assemble_aux(const Graph& g, const EdgeSet& n, const Matching& m_prime,
                        const VertexSet& domain) {
  const std::size_t order = g.order();
  const auto partner = partner_array(m_prime, order);
  std::vector<char> blocked(order, 0);  // covered by E(N) ∩ M'
  for (const auto& e : m_prime) {
    if (n.contains(e)) blocked[e.u] = blocked[e.v] = 1;
  }

  AuxDigraph aux;
  aux.from_host.assign(order, std::nullopt);
  for (Vertex v : domain) {
    if (blocked[v]) continue;
    aux.from_host[v] = aux.to_host.size();
    aux.to_host.push_back(v);
  }

  std::vector<Arc> arcs;
  for (Vertex x : aux.to_host) {
    for (Vertex y : g.neighbours(x)) {
      if (blocked[y] || y == partner[x] || n.contains(make_edge(x, y))) continue;
      const auto target = aux.from_host[partner[y]];
      if (target) arcs.push_back({*aux.from_host[x], *target});
    }
  }
  aux.digraph = build_digraph(aux.to_host.size(), arcs);

  std::vector<Edge> constraint;
  for (const auto& e : m_prime) {
    const auto a = aux.from_host[e.u];
    const auto b = aux.from_host[e.v];
    if (a && b) constraint.push_back(make_edge(*a, *b));
  }
  aux.constraint = Matching(std::move(constraint));
  return aux;
}

}  // namespace

AuxDigraph build_aux_digraph(const Graph& g, const EdgeSet& n, const Matching& m_prime) {
  if (!is_perfect_matching(g, m_prime)) {
    throw Error(ErrorCode::NotAPerfectMatching, "M' is not a perfect matching of G");
  }
  VertexSet all(g.order());
  for (Vertex v = 0; v < g.order(); ++v) all[v] = v;
  return assemble_aux(g, n, m_prime, all);
}

AuxDigraph build_aux_digraph_bipartite(const Graph& g, const EdgeSet& n,
                                       const Matching& m_prime, const VertexSet& side) {
  if (!is_perfect_matching(g, m_prime)) {
    throw Error(ErrorCode::NotAPerfectMatching, "M' is not a perfect matching of G");
  }
  const Bipartition part = make_bipartition(g.order(), side);
  if (!respects(g, part)) throw Error(ErrorCode::NotBipartite, "edge inside the chosen side");
  return assemble_aux(g, n, m_prime, part.side_a);
}

BigCount count_alternating_paths(const Graph& g, const Matching& m_prime, Vertex u, Vertex v,
                                 std::size_t length, const EdgeSet& forbidden) {
  const std::size_t order = g.order();
  if (u >= order || v >= order) throw Error(ErrorCode::VertexOutOfRange, "path endpoint");
  if (u == v || length % 2 != 0) return 0;
  const auto partner = partner_array(m_prime, order);
  const AdjacencyMatrix banned = edge_matrix(order, forbidden);
  std::vector<char> visited(order, 0);
  std::uint64_t count = 0;

  auto extend = [&](auto&& self, Vertex x, std::size_t depth) -> void {
    if (depth == length) {
      if (x == v) ++count;
      return;
    }
    if (x == v) return;
    visited[x] = 1;
    if (depth % 2 == 0) {
      for (Vertex y : g.neighbours(x)) {
        if (visited[y] || y == partner[x] || banned[x][y]) continue;
        self(self, y, depth + 1);
      }
    } else {
      const Vertex y = partner[x];
      if (y < order && !visited[y] && !banned[x][y]) self(self, y, depth + 1);
    }
    visited[x] = 0;
  };
  extend(extend, u, 0);
  return BigCount(static_cast<unsigned long>(count));
}

namespace {

DegreeStats degree_stats(const std::vector<std::size_t>& degrees) {
  DegreeStats stats;
  if (degrees.empty()) return stats;
  stats.min = *std::min_element(degrees.begin(), degrees.end());
  stats.max = *std::max_element(degrees.begin(), degrees.end());
  std::size_t sum = 0;
  for (auto d : degrees) sum += d;
  stats.mean = ExactProb(static_cast<unsigned long>(sum), static_cast<unsigned long>(degrees.size()));
  stats.mean.canonicalize();
  return stats;
}

}  // namespace

RatioReport ratio_report(const Graph& g, const EdgeSet& n, std::size_t k, std::size_t ell,
                         std::size_t cap) {
  const auto d = regularity(g);
  if (!d || *d == 0) throw Error(ErrorCode::NotRegular, "ratio report needs a regular graph");
  if (k == 0) throw Error(ErrorCode::InvalidParameter, "k must be >= 1");
  check_ell(g.order(), ell);

  const StrataCounts strata = stratify(g, n);
  RatioReport report;
  report.k = k;
  report.ell = ell;
  report.n = g.order();
  report.d = *d;
  report.f = f_of(n, k);
  report.stratum_k = strata.at(k);
  report.stratum_k_minus_1 = strata.at(k - 1);
  if (report.stratum_k == 0 || report.stratum_k_minus_1 == 0) {
    throw Error(ErrorCode::EmptyStratum, "M_" + std::to_string(k) + " or M_" +
                                             std::to_string(k - 1) + " is empty");
  }
  report.exact_ratio = ExactProb(report.stratum_k, report.stratum_k_minus_1);
  report.exact_ratio.canonicalize();
  report.predicted = ExactProb(static_cast<unsigned long>(report.f),
                               static_cast<unsigned long>(k * report.d));
  report.predicted.canonicalize();

  const SwitchGraph h = build_switch_graph(g, n, k, ell, cap);
  std::vector<std::size_t> left_degrees;
  for (std::size_t i = 0; i < h.left.size(); ++i) left_degrees.push_back(h.left_degree(i));
  report.left_stats = degree_stats(left_degrees);
  report.right_stats = degree_stats(h.right_degree);
  report.switch_edges = h.edge_count();

  std::size_t left_sum = 0;
  std::size_t right_sum = 0;
  for (auto x : left_degrees) left_sum += x;
  for (auto x : h.right_degree) right_sum += x;
  report.double_count_holds = left_sum == report.switch_edges && right_sum == report.switch_edges;

  const ExactProb order = static_cast<unsigned long>(g.order());
  const ExactProb degree = static_cast<unsigned long>(report.d);
  report.predicted_left_degree = static_cast<unsigned long>(k) * pow_exact(degree, ell) / order;
  report.predicted_right_degree =
      static_cast<unsigned long>(report.f) * pow_exact(degree, ell - 1) / order;
  return report;
}

}  // namespace matchlab
