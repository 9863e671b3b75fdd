// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cmath>
#include <functional>
#include <set>
#include <iostream>
#include <sstream>
#include <string>

#include "matchlab/error.hpp"
#include "matchlab/expansion.hpp"
#include "matchlab/perfect_matchings.hpp"
#include "matchlab/stats.hpp"
#include "matchlab/switching.hpp"
#include "matchlab/walks.hpp"
#include "oracles.hpp"

using namespace matchlab;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct Criterion {
  int id;
  const char* name;
  double budget_seconds;
  std::function<Outcome()> check;
};

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(6);
  os << x;
  return os.str();
}

EdgeSet as_edges(const Matching& m) { return EdgeSet(std::vector<Edge>(m.begin(), m.end())); }

// 1. count_pm, enumerate_pm and stratify agree on random graphs.
Outcome oracle_equivalence() {
  std::size_t checked = 0;
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const std::size_t n = 2 + 2 * (seed % 6);
    const Graph g = oracle::random_graph(n, 45 + 5 * (seed % 8), seed * 7 + 1);
    const BigCount count = count_pm(g);
    if (count != static_cast<unsigned long>(enumerate_pm(g).size())) {
      return {false, "count_pm != |enumerate_pm| at seed " + std::to_string(seed)};
    }
    if (count != static_cast<unsigned long>(oracle::perfect_matchings(g).size())) {
      return {false, "count_pm disagrees with pairing enumeration at seed " + std::to_string(seed)};
    }
    std::vector<Edge> half;
    const auto edges = g.edges();
    for (std::size_t i = 0; i < edges.size(); i += 2) half.push_back(edges[i]);
    if (stratify(g, EdgeSet(half)).total() != count) {
      return {false, "strata do not sum to pma at seed " + std::to_string(seed)};
    }
    ++checked;
  }
  return {checked == 50, std::to_string(checked) + " graphs, n <= 12"};
}

// 2. P[e in M] = 1/d exactly on edge-transitive families.
Outcome edge_probability_symmetric() {
  std::vector<std::pair<std::string, Graph>> graphs;
  for (std::size_t n : {4, 6, 8, 10}) graphs.emplace_back("K_" + std::to_string(n), complete_graph(n));
  graphs.emplace_back("K_{2,2,2}", complete_multipartite(3, 2));
  graphs.emplace_back("K_{3,3}", complete_multipartite(2, 3));
  for (std::size_t n : {4, 6, 8, 10, 12}) graphs.emplace_back("C_" + std::to_string(n), cycle_graph(n));
  std::size_t edges = 0;
  for (const auto& [name, g] : graphs) {
    const ExactProb expected(1, static_cast<unsigned long>(*regularity(g)));
    for (const auto& e : g.edges()) {
      if (edge_probability(g, e) != expected) return {false, name + " edge off 1/d"};
      ++edges;
    }
  }
  return {true, std::to_string(graphs.size()) + " graphs, " + std::to_string(edges) + " edges"};
}

// 3. Avoidance ratios: 8/15 on K_6 and D_b/b! on K_{b,b}.
Outcome avoidance_ratios() {
  const Graph k6 = complete_graph(6);
  const AvoidanceRatio a6 = avoidance_ratio(k6, as_edges(*first_perfect_matching(k6)));
  if (a6.exact != ExactProb(8, 15)) return {false, "K_6 ratio " + to_fraction(a6.exact)};
  std::string detail = "K_6 8/15";
  double last_gap = 0;
  for (std::size_t b = 3; b <= 6; ++b) {
    const Graph g = complete_multipartite(2, b);
    const AvoidanceRatio a = avoidance_ratio(g, as_edges(*first_perfect_matching(g)));
    mpz_class fact = 1;
    for (std::size_t i = 2; i <= b; ++i) fact *= static_cast<unsigned long>(i);
    ExactProb expected(mpz_class(static_cast<unsigned long>(oracle::derangements(b))), fact);
    expected.canonicalize();
    if (a.exact != expected) return {false, "K_{b,b} ratio mismatch at b=" + std::to_string(b)};
    last_gap = std::fabs(a.exact.get_d() - a.reference);
    detail += ", b=" + std::to_string(b) + " " + to_fraction(a.exact);
  }
  detail += ", |D_6/720 - e^-1| = " + fmt(last_gap);
  return {last_gap <= 0.05 && last_gap <= 1e-3, detail};
}

// 4. Switching double count and single-cycle structure of every H-edge.
Outcome switching_identities() {
  struct Instance {
    Graph g;
    EdgeSet n;
    std::size_t k;
    std::size_t ell;
  };
  std::vector<Instance> instances;
  std::vector<Graph> hosts{complete_graph(6), complete_graph(8), complete_multipartite(3, 2),
                           complete_multipartite(2, 4), complete_multipartite(4, 2)};
  for (std::uint64_t seed = 0; seed < 4; ++seed) hosts.push_back(random_regular(8, 3 + seed % 3, seed));
  hosts.push_back(random_regular(10, 3, 11));
  hosts.push_back(random_regular(12, 3, 12));
  for (const auto& g : hosts) {
    const auto pm = *first_perfect_matching(g);
    const std::vector<Edge> pm_edges(pm.begin(), pm.end());
    for (std::size_t size = 1; size <= 2; ++size) {
      const EdgeSet n(std::vector<Edge>(pm_edges.begin(), pm_edges.begin() + size));
      for (std::size_t k = 1; k <= size; ++k) {
        for (std::size_t ell = 2; ell <= std::min<std::size_t>(3, g.order() / 2); ++ell) {
          instances.push_back({g, n, k, ell});
        }
      }
    }
  }
  std::size_t nonempty = 0;
  std::size_t h_edges = 0;
  for (const auto& inst : instances) {
    const SwitchGraph h = build_switch_graph(inst.g, inst.n, inst.k, inst.ell);
    std::size_t left_sum = 0;
    for (std::size_t i = 0; i < h.left.size(); ++i) {
      left_sum += h.left_degree(i);
      const oracle::Pairing a(h.left[i].begin(), h.left[i].end());
      for (std::size_t j : h.left_adjacency[i]) {
        const oracle::Pairing b(h.right[j].begin(), h.right[j].end());
        if (!oracle::single_cycle(a, b, inst.g.order(), 2 * inst.ell)) {
          return {false, "H-edge is not a single 2l-cycle"};
        }
        std::size_t n_in_cycle = 0;
        for (const auto& e : a) n_in_cycle += !h.right[j].contains(e) && inst.n.contains(e) ? 1 : 0;
        for (const auto& e : b) n_in_cycle += !h.left[i].contains(e) && inst.n.contains(e) ? 1 : 0;
        if (n_in_cycle != 1) return {false, "cycle carries " + std::to_string(n_in_cycle) + " N-edges"};
      }
    }
    std::size_t right_sum = 0;
    for (auto d : h.right_degree) right_sum += d;
    if (left_sum != h.edge_count() || right_sum != h.edge_count()) {
      return {false, "double count fails"};
    }
    nonempty += h.left.empty() ? 0 : 1;
    h_edges += h.edge_count();
  }
  return {nonempty >= 20, std::to_string(instances.size()) + " instances (" + std::to_string(nonempty) +
                              " with M_k nonempty), " + std::to_string(h_edges) + " H-edges"};
}

// 5. Alternating paths in G biject with constrained paths in the auxiliary digraph.
Outcome aux_bijection() {
  std::size_t probes = 0;
  std::size_t instances = 0;
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    const std::size_t n = 8 + 2 * (seed % 2);
    const Graph g = random_regular(n, 4 + seed % 3, seed + 40);
    const auto pms = enumerate_pm(g);
    const Matching& mp = pms[seed % pms.size()];
    const EdgeSet n_set({*mp.begin()});
    const AuxDigraph aux = build_aux_digraph(g, n_set, mp);
    ++instances;
    for (std::size_t ell = 2; ell <= 4; ++ell) {
      for (Vertex w = 0; w < aux.digraph.order(); ++w) {
        for (Vertex v = 0; v < aux.digraph.order(); ++v) {
          if (w == v) continue;
          const BigCount in_g =
              count_alternating_paths(g, mp, aux.to_host[w], aux.to_host[v], 2 * ell - 2, n_set);
          const BigCount in_d = count_paths(aux.digraph, w, v, ell - 1, aux.constraint);
          if (in_g != in_d) return {false, "mismatch at seed " + std::to_string(seed)};
          ++probes;
        }
      }
    }
  }
  return {probes >= 100 && instances >= 10,
          std::to_string(probes) + " probes over " + std::to_string(instances) + " instances"};
}

struct CertifiedDigraph {
  std::string name;
  Digraph d;
  double nu;
  double tau;
};

Digraph symmetric_multipartite(std::size_t a, std::size_t b) {
  return symmetric_digraph(complete_multipartite(a, b));
}

// Regular digraphs that pass the exact outexpander sweep with min degree >= tau n.
std::vector<CertifiedDigraph> certified_digraphs() {
  std::vector<std::pair<std::string, Digraph>> candidates;
  for (std::size_t n : {6, 8, 10}) candidates.emplace_back("K_" + std::to_string(n), complete_digraph(n));
  {
    const std::vector<std::size_t> steps{1, 2, 4, 7};
    candidates.emplace_back("Circ(10;1,2,4,7)", circulant_digraph(10, steps));
    const std::vector<std::size_t> steps9{1, 2, 4, 5, 7};
    candidates.emplace_back("Circ(9;1,2,4,5,7)", circulant_digraph(9, steps9));
  }
  candidates.emplace_back("K_3x3", symmetric_multipartite(3, 3));
  candidates.emplace_back("K_2x4", symmetric_multipartite(2, 4));
  std::vector<CertifiedDigraph> out;
  for (const auto& [name, d] : candidates) {
    for (double nu : {0.2, 0.25}) {
      for (double tau : {0.25, 0.3, 0.35}) {
        if (nu > tau) continue;
        std::size_t min_deg = d.order();
        for (Vertex v = 0; v < d.order(); ++v) min_deg = std::min(min_deg, d.out_degree(v));
        if (ExactProb(static_cast<unsigned long>(min_deg)) <
            exact_from_decimal(tau) * static_cast<unsigned long>(d.order())) {
          continue;
        }
        if (certify_exact(d, ExpansionParams{nu, tau}).verdict == Verdict::Pass) {
          out.push_back({name, d, nu, tau});
        }
      }
    }
  }
  return out;
}

// 6. Walk lower bound (nu n)^(l-1) on certified digraphs.
Outcome walk_lower_bound() {
  const auto certified = certified_digraphs();
  if (certified.empty()) return {false, "no certified digraph"};
  std::size_t checks = 0;
  for (const auto& c : certified) {
    const std::size_t n = c.d.order();
    const ExactProb nu = exact_from_decimal(c.nu);
    const ExactProb inv = 1 / nu;
    mpz_class lo_z;
    mpz_cdiv_q(lo_z.get_mpz_t(), inv.get_num_mpz_t(), inv.get_den_mpz_t());
    const std::size_t lo = lo_z.get_ui() + 1;
    const double hi_real = std::min(static_cast<double>(n), inv.get_d() + 4);
    const auto hi = static_cast<std::size_t>(std::floor(hi_real + 1e-12));
    for (std::size_t ell = lo; ell <= hi; ++ell) {
      const ExactProb bound = pow_exact(nu * static_cast<unsigned long>(n), ell - 1);
      for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = 0; v < n; ++v) {
          if (u == v) continue;
          if (ExactProb(count_walks(c.d, u, v, ell)) < bound) {
            return {false, c.name + " nu=" + fmt(c.nu) + " l=" + std::to_string(ell) + " below bound"};
          }
          ++checks;
        }
      }
    }
  }
  return {checks > 0, std::to_string(certified.size()) + " certified (digraph, nu, tau), " +
                          std::to_string(checks) + " pair checks"};
}

bool all_positive(const StochasticMatrix& p) {
  for (std::size_t i = 0; i < p.dimension(); ++i) {
    for (std::size_t j = 0; j < p.dimension(); ++j) {
      if (p(i, j) == 0) return false;
    }
  }
  return true;
}

std::size_t positive_power(const StochasticMatrix& q) {
  for (std::size_t k = 1; k <= q.dimension(); ++k) {
    if (all_positive(matrix_power(q, k))) return k;
  }
  return 0;
}

// 7. Mixing bound for P = Q^k on certified regular outexpanders.
Outcome mixing_bound() {
  const auto certified = certified_digraphs();
  if (certified.empty()) return {false, "no certified digraph"};
  std::set<std::string> done;
  std::size_t steps = 0;
  for (const auto& c : certified) {
    if (!done.insert(c.name).second) continue;
    const StochasticMatrix q = transition_matrix(c.d);
    const std::size_t k = positive_power(q);
    if (k == 0) return {false, c.name + " has no positive power"};
    const StochasticMatrix p = matrix_power(q, k);
    const auto sigma = uniform_distribution(c.d.order());
    const MixingParams params = mixing_params(p, sigma);
    const auto start = static_cast<std::size_t>(std::ceil(params.threshold));
    for (std::size_t t = start; t <= start + 10; ++t) {
      const MixingReport r = mixing_bound_check(p, sigma, t);
      if (!r.holds) return {false, c.name + " t=" + std::to_string(t)};
      ++steps;
    }
  }
  return {true, std::to_string(done.size()) + " digraphs, " + std::to_string(steps) + " steps"};
}

// 8. Sandwich bound on the same certified instances.
Outcome sandwich_bound() {
  const auto certified = certified_digraphs();
  if (certified.empty()) return {false, "no certified digraph"};
  std::size_t checks = 0;
  for (const auto& c : certified) {
    // the bound is promised for 1/nu + 1 <= k <= 2/nu
    const ExactProb inv = 1 / exact_from_decimal(c.nu);
    mpz_class lo_z;
    mpz_class hi_z;
    mpz_cdiv_q(lo_z.get_mpz_t(), inv.get_num_mpz_t(), inv.get_den_mpz_t());
    mpz_fdiv_q(hi_z.get_mpz_t(), mpz_class(2 * inv.get_num()).get_mpz_t(), inv.get_den_mpz_t());
    for (std::size_t power = lo_z.get_ui() + 1; power <= hi_z.get_ui(); ++power) {
      const SandwichReport r = sandwich_check(c.d, power, c.nu);
      if (!r.holds) {
        return {false, c.name + " nu=" + fmt(c.nu) + " k=" + std::to_string(power) + " min " +
                           to_fraction(r.min_scaled) + " < lower " + to_fraction(r.lower)};
      }
      ++checks;
    }
  }
  return {true, std::to_string(checks) + " (digraph, nu, k) checks"};
}

double tv_complete(std::size_t n) {
  const Graph g = complete_graph(n);
  const EdgeSet n_set = as_edges(*first_perfect_matching(g));
  const Pmf exact = intersection_pmf(g, n_set);
  const double lambda = poisson_lambda(g, n_set);
  const TvDistance tv = tv_distance(exact, poisson_pmf(lambda, default_poisson_cutoff(exact, lambda)));
  return tv.value + tv.slack;
}

// 9. TV distance to Poisson shrinks from K_6 to K_12.
Outcome poisson_trend() {
  const double tv6 = tv_complete(6);
  const double tv12 = tv_complete(12);
  return {tv12 <= 0.05 + 1e-12 && tv12 < tv6, "TV(K_6) = " + fmt(tv6) + ", TV(K_12) = " + fmt(tv12)};
}

// 10. Disjointness: exact r=2 and Monte Carlo r=3 on K_6.
Outcome disjointness() {
  const Graph k6 = complete_graph(6);
  const auto two = disjoint_probability(k6, 2, DisjointMode::Exact, 0, 0);
  const AvoidanceRatio av = avoidance_ratio(k6, as_edges(*first_perfect_matching(k6)));
  if (!two.exact || *two.exact != ExactProb(8, 15) || *two.exact != av.exact) {
    return {false, "r=2 exact value is not 8/15"};
  }
  // ordered triples by enumeration
  const auto pms = oracle::perfect_matchings(k6);
  std::uint64_t good = 0;
  for (const auto& a : pms) {
    for (const auto& b : pms) {
      if (oracle::overlap(a, b) != 0) continue;
      for (const auto& c : pms) good += oracle::overlap(a, c) == 0 && oracle::overlap(b, c) == 0 ? 1 : 0;
    }
  }
  const double exact3 = static_cast<double>(good) / std::pow(static_cast<double>(pms.size()), 3);
  const auto mc = disjoint_probability(k6, 3, DisjointMode::MonteCarlo, 100000, 0);
  const double z = std::fabs(mc.value - exact3) / mc.std_error;
  return {z <= 3.0, "r=2 8/15; r=3 exact " + fmt(exact3) + ", MC " + fmt(mc.value) + " (" + fmt(z) +
                        " sigma)"};
}

double chi_square(const Graph& g, std::uint64_t seed, std::size_t draws) {
  const auto pms = enumerate_pm(g);
  const PerfectMatchingSampler sampler(g);
  Rng rng = derive_stream(seed, 0);
  std::vector<double> counts(pms.size(), 0.0);
  for (std::size_t i = 0; i < draws; ++i) {
    const auto m = sampler(rng);
    counts[static_cast<std::size_t>(std::find(pms.begin(), pms.end(), m) - pms.begin())] += 1;
  }
  const double expected = static_cast<double>(draws) / static_cast<double>(pms.size());
  double chi2 = 0;
  for (double c : counts) chi2 += (c - expected) * (c - expected) / expected;
  return chi2;
}

// 11. Sampler uniformity by chi-square at the 99% quantile.
Outcome sampler_uniformity() {
  const double k4 = chi_square(complete_graph(4), 0, 3000);
  const double k33 = chi_square(complete_multipartite(2, 3), 0, 3000);
  return {k4 < 9.21 && k33 < 15.086,
          "K_4 chi2 = " + fmt(k4) + " (< 9.21), K_{3,3} chi2 = " + fmt(k33) + " (< 15.086)"};
}

bool witness_revalidates(const Graph& g, const ExpansionCertificate& c) {
  if (!c.witness) return false;
  const auto& s = *c.witness;
  const SizeWindow w = size_window(g.order(), c.params.tau);
  if (s.size() < w.lo || s.size() > w.hi) return false;
  const auto rn = robust_neighbourhood(g, s, c.params.nu);
  return rn.size() < s.size() + robust_threshold(g.order(), c.params.nu);
}

// 12. Expansion certificates and witness re-validation.
Outcome expansion_certificates() {
  const ExpansionParams p{0.1, 0.3};
  if (certify_exact(complete_graph(6), p).verdict != Verdict::Pass) return {false, "K_6 does not pass"};
  const Graph triangles = build_graph(6, std::vector<Edge>{{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}});
  const auto fail = certify_exact(triangles, p);
  if (fail.verdict != Verdict::Fail || !witness_revalidates(triangles, fail)) {
    return {false, "two triangles: no valid witness"};
  }
  std::size_t fails = 1;
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const Graph g = oracle::random_graph(10, 30 + 10 * (seed % 5), seed + 500);
    const auto c = certify_exact(g, ExpansionParams{0.1 + 0.05 * (seed % 3), 0.3});
    if (c.verdict == Verdict::Fail) {
      if (!witness_revalidates(g, c)) return {false, "witness fails to re-validate"};
      ++fails;
    }
  }
  return {true, "K_6 Pass, two triangles Fail, " + std::to_string(fails) + " witnesses re-validated"};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "oracle equivalence", 10, oracle_equivalence},
      {2, "edge probability 1/d", 5, edge_probability_symmetric},
      {3, "avoidance ratios", 30, avoidance_ratios},
      {4, "switching identities", 60, switching_identities},
      {5, "aux digraph bijection", 60, aux_bijection},
      {6, "walk lower bound", 60, walk_lower_bound},
      {7, "mixing bound", 30, mixing_bound},
      {8, "sandwich bound", 30, sandwich_bound},
      {9, "Poisson trend", 60, poisson_trend},
      {10, "disjointness", 120, disjointness},
      {11, "sampler uniformity", 30, sampler_uniformity},
      {12, "expansion certificates", 10, expansion_certificates},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > c.budget_seconds) {
      o.pass = false;
      o.detail += "; over the " + fmt(c.budget_seconds) + " s budget";
    }
    failures += o.pass ? 0 : 1;
    std::cout << (o.pass ? "PASS" : "FAIL") << " AC" << c.id << " " << c.name << " [" << fmt(secs)
              << " s] " << o.detail << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
