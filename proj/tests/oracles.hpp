#pragma once

// Brute-force reference implementations used only by the tests. None of them
// share code paths with the library algorithms they check.

#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "matchlab/graph.hpp"
#include "matchlab/random.hpp"

namespace oracle {

using matchlab::Edge;
using matchlab::Graph;
using Pairing = std::vector<Edge>;

inline std::vector<std::vector<char>> adjacency_matrix(const Graph& g) {
  std::vector<std::vector<char>> adj(g.order(), std::vector<char>(g.order(), 0));
  for (const auto& e : g.edges()) adj[e.u][e.v] = adj[e.v][e.u] = 1;
  return adj;
}

// Every pairing of 0..n-1 (all (n-1)!! of them), independent of G.
inline void for_each_pairing(std::size_t n, const std::function<void(const Pairing&)>& visit) {
  if (n % 2 != 0) return;
  std::vector<std::size_t> rest(n);
  std::iota(rest.begin(), rest.end(), 0);
  Pairing current;
  std::function<void(std::vector<std::size_t>)> rec = [&](std::vector<std::size_t> left) {
    if (left.empty()) {
      Pairing sorted = current;
      std::sort(sorted.begin(), sorted.end());
      visit(sorted);
      return;
    }
    const std::size_t a = left.front();
    for (std::size_t i = 1; i < left.size(); ++i) {
      std::vector<std::size_t> next;
      for (std::size_t j = 1; j < left.size(); ++j) {
        if (j != i) next.push_back(left[j]);
      }
      current.push_back(matchlab::make_edge(a, left[i]));
      rec(next);
      current.pop_back();
    }
  };
  rec(rest);
}

// Perfect matchings of G as sorted edge lists, in sorted order.
inline std::vector<Pairing> perfect_matchings(const Graph& g) {
  const auto adj = adjacency_matrix(g);
  std::vector<Pairing> out;
  for_each_pairing(g.order(), [&](const Pairing& p) {
    for (const auto& e : p) {
      if (!adj[e.u][e.v]) return;
    }
    out.push_back(p);
  });
  std::sort(out.begin(), out.end());
  return out;
}

inline std::size_t overlap(const Pairing& m, const std::vector<Edge>& n) {
  std::size_t k = 0;
  for (const auto& e : m) k += std::count(n.begin(), n.end(), e);
  return k;
}

// |M_k| for k = 0..max overlap seen.
inline std::map<std::size_t, std::size_t> strata(const Graph& g, const std::vector<Edge>& n) {
  std::map<std::size_t, std::size_t> out;
  for (const auto& m : perfect_matchings(g)) ++out[overlap(m, n)];
  return out;
}

inline std::uint64_t derangements(std::size_t b) {
  std::vector<std::size_t> perm(b);
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t count = 0;
  do {
    bool fixed = false;
    for (std::size_t i = 0; i < b; ++i) fixed = fixed || perm[i] == i;
    count += fixed ? 0 : 1;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

// Decimal parameter as an exact rational, by rounding to 12 places.
inline mpq_class decimal(double x) {
  mpq_class q(static_cast<long>(std::llround(x * 1e12)), 1'000'000'000'000UL);
  q.canonicalize();
  return q;
}

// Robust expansion straight from the definition over all 2^n subsets.
// Returns every violating set (as a sorted vertex list).
inline std::vector<std::vector<std::size_t>> expansion_violations(const Graph& g, double nu,
                                                                  double tau) {
  const std::size_t n = g.order();
  const mpq_class nq(static_cast<unsigned long>(n));
  const mpq_class nu_n = decimal(nu) * nq;
  const mpq_class tau_n = decimal(tau) * nq;
  const auto adj = adjacency_matrix(g);
  std::vector<std::vector<std::size_t>> bad;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    std::vector<std::size_t> s;
    for (std::size_t v = 0; v < n; ++v) {
      if (mask >> v & 1U) s.push_back(v);
    }
    const mpq_class size(static_cast<unsigned long>(s.size()));
    if (size < tau_n || size > nq - tau_n) continue;
    unsigned long robust = 0;
    for (std::size_t v = 0; v < n; ++v) {
      unsigned long hits = 0;
      for (auto x : s) hits += adj[v][x];
      if (mpq_class(hits) >= nu_n) ++robust;
    }
    if (mpq_class(robust) < size + nu_n) bad.push_back(s);
  }
  std::sort(bad.begin(), bad.end());
  return bad;
}

// Symmetric difference of two perfect matchings is a single cycle of the
// given length, checked through degrees and connectivity.
inline bool single_cycle(const Pairing& a, const Pairing& b, std::size_t n, std::size_t length) {
  std::vector<Edge> diff;
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(diff));
  if (diff.size() != length) return false;
  std::vector<std::vector<std::size_t>> adj(n);
  for (const auto& e : diff) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  std::size_t start = n;
  std::size_t touched = 0;
  for (std::size_t v = 0; v < n; ++v) {
    if (adj[v].empty()) continue;
    if (adj[v].size() != 2) return false;
    ++touched;
    start = v;
  }
  if (start == n) return false;
  std::vector<char> seen(n, 0);
  std::vector<std::size_t> stack{start};
  std::size_t reached = 0;
  while (!stack.empty()) {
    const auto v = stack.back();
    stack.pop_back();
    if (seen[v]) continue;
    seen[v] = 1;
    ++reached;
    for (auto w : adj[v]) stack.push_back(w);
  }
  return reached == touched;
}

// Walk counts from integer adjacency-matrix powers.
inline std::vector<std::vector<mpz_class>> walk_matrix(const matchlab::Digraph& d, std::size_t ell) {
  const std::size_t n = d.order();
  std::vector<std::vector<mpz_class>> result(n, std::vector<mpz_class>(n, 0));
  for (std::size_t i = 0; i < n; ++i) result[i][i] = 1;
  for (std::size_t step = 0; step < ell; ++step) {
    std::vector<std::vector<mpz_class>> next(n, std::vector<mpz_class>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t l = 0; l < n; ++l) {
        if (result[i][l] == 0) continue;
        for (std::size_t j = 0; j < n; ++j) {
          if (d.has_arc(l, j)) next[i][j] += result[i][l];
        }
      }
    }
    result = std::move(next);
  }
  return result;
}

// Simple (u,v)-paths of the given length in G, as vertex sequences, found by
// plain DFS without any alternation logic.
inline void for_each_simple_path(const Graph& g, std::size_t u, std::size_t v, std::size_t length,
                                 const std::function<void(const std::vector<std::size_t>&)>& visit) {
  std::vector<std::size_t> path{u};
  std::vector<char> on(g.order(), 0);
  on[u] = 1;
  std::function<void()> rec = [&] {
    if (path.size() == length + 1) {
      if (path.back() == v) visit(path);
      return;
    }
    for (auto w : g.neighbours(path.back())) {
      if (on[w]) continue;
      on[w] = 1;
      path.push_back(w);
      rec();
      path.pop_back();
      on[w] = 0;
    }
  };
  rec();
}

// G(n, p) with the test RNG; p given in percent.
inline Graph random_graph(std::size_t n, unsigned percent, std::uint64_t seed) {
  matchlab::Rng rng(seed);
  std::vector<Edge> edges;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      if (matchlab::uniform_below(rng, std::uint64_t{100}) < percent) edges.push_back({u, v});
    }
  }
  return matchlab::build_graph(n, edges);
}

}  // namespace oracle
