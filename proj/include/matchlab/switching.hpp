#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "matchlab/graph.hpp"
#include "matchlab/numeric.hpp"
#include "matchlab/perfect_matchings.hpp"

namespace matchlab {

/// e(N) - (k-1) when N is a matching, e(N) otherwise. k >= 1.
std::size_t f_of(const EdgeSet& n, std::size_t k);

/// Bipartite graph H between M_k (left) and M_{k-1} (right): M ~ M' iff
/// M △ M' is a single cycle of length 2*ell whose only N-edge lies in M.
struct SwitchGraph {
  std::vector<Matching> left;
  std::vector<Matching> right;
  std::vector<std::vector<std::size_t>> left_adjacency;  // right indices, ascending
  std::vector<std::size_t> right_degree;
  std::size_t ell = 0;
  std::size_t k = 0;

  std::size_t edge_count() const;
  std::size_t left_degree(std::size_t i) const { return left_adjacency[i].size(); }
};

/// Largest ell with 2*ell <= n.
std::size_t default_ell(std::size_t n);

/// True iff `m` and `m_prime` satisfy the switching relation for N and ell.
bool is_switch_pair(const Matching& m, const Matching& m_prime, const EdgeSet& n,
                    std::size_t ell);

/// Exact H by pairwise tests over the enumerated strata. Requires
/// 2 <= ell, 2*ell <= n, k >= 1.
SwitchGraph build_switch_graph(const Graph& g, const EdgeSet& n, std::size_t k, std::size_t ell,
                               std::size_t cap = kDefaultEnumerationCap);

/// Digraph D on V(G) minus the vertices covered by E(N) ∩ M', with
/// x -> M'(y) for every y adjacent to x in G - E(N) - M' that lies in V(D).
/// Directed paths of length ell-1 in D that meet each M' edge at most once
/// correspond to alternating paths of length 2*ell-2 in G.
struct AuxDigraph {
  Digraph digraph;
  std::vector<Vertex> to_host;                  // D vertex -> G vertex
  std::vector<std::optional<Vertex>> from_host;  // G vertex -> D vertex
  Matching constraint;                           // M' \ E(N) restricted to D, in D ids
};

/// Throws NotAPerfectMatching unless `m_prime` is a perfect matching of G.
AuxDigraph build_aux_digraph(const Graph& g, const EdgeSet& n, const Matching& m_prime);

/// Bipartite variant: D lives on one partition class `side` minus the
/// vertices covered by E(N) ∩ M'; x -> M'(y) for y across the partition.
AuxDigraph build_aux_digraph_bipartite(const Graph& g, const EdgeSet& n,
                                       const Matching& m_prime, const VertexSet& side);

/// (u,v)-paths of the given length whose edges alternate between
/// E(G) \ (forbidden ∪ M') and M' \ forbidden, starting with a non-matching
/// edge. Zero for odd length or u == v.
BigCount count_alternating_paths(const Graph& g, const Matching& m_prime, Vertex u, Vertex v,
                                 std::size_t length, const EdgeSet& forbidden);

struct DegreeStats {
  std::size_t min = 0;
  std::size_t max = 0;
  ExactProb mean;
};

struct RatioReport {
  std::size_t k = 0;
  std::size_t ell = 0;
  std::size_t n = 0;
  std::size_t d = 0;
  std::size_t f = 0;
  BigCount stratum_k;
  BigCount stratum_k_minus_1;
  ExactProb exact_ratio;   // |M_k| / |M_{k-1}|
  ExactProb predicted;     // f(N,k) / (k d)
  std::size_t switch_edges = 0;
  DegreeStats left_stats;   // degrees in H of M_k
  DegreeStats right_stats;  // degrees in H of M_{k-1}
  ExactProb predicted_left_degree;   // k d^ell / n
  ExactProb predicted_right_degree;  // f d^(ell-1) / n
  bool double_count_holds = false;
};

/// Exact vs predicted stratum ratio plus the switching-graph degree profile.
/// Throws NotRegular, or EmptyStratum when M_k or M_{k-1} is empty.
RatioReport ratio_report(const Graph& g, const EdgeSet& n, std::size_t k, std::size_t ell,
                         std::size_t cap = kDefaultEnumerationCap);

}  // namespace matchlab
