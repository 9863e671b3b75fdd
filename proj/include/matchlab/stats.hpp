#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "matchlab/graph.hpp"
#include "matchlab/numeric.hpp"

namespace matchlab {

/// Probability mass function on 0..size()-1. Exact PMFs carry rationals and
/// a float mirror; float-only PMFs (Poisson references) record the mass cut
/// off beyond the last index.
struct Pmf {
  std::vector<ExactProb> exact;
  std::vector<double> probs;
  double truncated_mass = 0.0;

  bool is_exact() const noexcept { return !exact.empty(); }
  std::size_t size() const noexcept { return probs.size(); }
  double at(std::size_t k) const noexcept { return k < probs.size() ? probs[k] : 0.0; }
  /// Largest k with non-zero probability (0 for an empty PMF).
  std::size_t support_max() const noexcept;
};

Pmf exact_pmf(std::vector<ExactProb> probs);

/// P[e in M] = pma(G ∋ e) / pma(G), exactly.
ExactProb edge_probability(const Graph& g, Edge e);

/// Exact law of X = |M ∩ E(N)| for M uniform on P(G).
Pmf intersection_pmf(const Graph& g, const EdgeSet& n);

/// Exact mean of a rational PMF.
ExactProb mean(const Pmf& pmf);

/// Poisson(lambda) on 0..k_max, evaluated in log space.
Pmf poisson_pmf(double lambda, std::size_t k_max);

/// max(support of `exact`) + 10 lambda + 20.
std::size_t default_poisson_cutoff(const Pmf& exact, double lambda);

/// Half the l1 distance over the recorded indices. Mass cut off past a PMF's
/// range can only raise the true distance, by at most `slack` (half the
/// total truncated mass). Two exact PMFs are compared in rationals.
struct TvDistance {
  double value = 0.0;
  double slack = 0.0;
};
TvDistance tv_distance(const Pmf& p, const Pmf& q);

/// lambda = e(N) / d for a d-regular G. Throws NotRegular.
double poisson_lambda(const Graph& g, const EdgeSet& n);

struct AvoidanceRatio {
  BigCount avoiding;   // pma(G - N)
  BigCount total;      // pma(G)
  ExactProb exact;     // avoiding / total
  double lambda = 0.0;
  double reference = 0.0;  // e^{-lambda}
};

/// pma(G - N) / pma(G) = P[M ∩ N = ∅] against e^{-e(N)/d}.
AvoidanceRatio avoidance_ratio(const Graph& g, const EdgeSet& n);

enum class DisjointMode { Exact, MonteCarlo };

inline constexpr std::uint64_t kExactTupleBudget = 10'000'000;
inline constexpr std::size_t kMonteCarloStreams = 8;

struct DisjointProbability {
  std::size_t r = 0;
  DisjointMode mode = DisjointMode::Exact;
  std::optional<ExactProb> exact;
  double value = 0.0;
  double std_error = 0.0;  // binomial standard error; 0 in exact mode
  std::uint64_t samples = 0;
  double reference = 0.0;  // e^{-(n/2d) C(r,2)}, d the average degree
};

/// P[M_1, ..., M_r pairwise edge-disjoint] for independent uniform M_i.
/// Exact mode: r = 2 via E_M[pma(G - M)] / pma(G); r >= 3 by ordered-tuple
/// enumeration when pma(G)^r <= kExactTupleBudget, else ExactInfeasible.
/// Monte Carlo splits `samples` over kMonteCarloStreams seeded streams.
DisjointProbability disjoint_probability(const Graph& g, std::size_t r, DisjointMode mode,
                                         std::uint64_t samples, std::uint64_t seed);

struct EdgeFrequencies {
  std::map<Edge, double> frequency;
  std::uint64_t samples = 0;
  bool flagged = false;  // no samples drawn
};

EdgeFrequencies empirical_edge_freq(const Graph& g, std::uint64_t samples, std::uint64_t seed);

/// Rebuilds p_0..p_K from ratios r_k = p_k / p_{k-1} (k = 1..K) and
/// normalizes. All ratios must be positive.
Pmf pmf_from_ratios(std::span<const ExactProb> ratios);

}  // namespace matchlab
