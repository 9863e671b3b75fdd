#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "matchlab/graph.hpp"
#include "matchlab/numeric.hpp"

namespace matchlab {

inline constexpr std::size_t kMaxExactDimension = 64;
inline constexpr std::uint64_t kDefaultPathBudget = 100'000'000;

/// Dense square matrix of exact rationals, row-major.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  explicit RationalMatrix(std::size_t n) : n_(n), entries_(n * n) {}

  static RationalMatrix identity(std::size_t n);

  std::size_t dimension() const noexcept { return n_; }
  ExactProb& operator()(std::size_t i, std::size_t j) { return entries_[i * n_ + j]; }
  const ExactProb& operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }

  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
  bool operator==(const RationalMatrix&) const = default;

 private:
  std::size_t n_ = 0;
  std::vector<ExactProb> entries_;
};

/// Row-stochastic matrix: non-negative entries, every row sums to exactly 1.
class StochasticMatrix {
 public:
  /// Throws InvalidParameter if the invariant fails.
  explicit StochasticMatrix(RationalMatrix m);

  std::size_t dimension() const noexcept { return m_.dimension(); }
  const ExactProb& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }
  const RationalMatrix& matrix() const noexcept { return m_; }

  bool operator==(const StochasticMatrix&) const = default;

 private:
  RationalMatrix m_;
};

/// Simple random walk: P(u,v) = 1/d^+(u) on arcs. Throws SinkVertex.
StochasticMatrix transition_matrix(const Digraph& d);

/// P^k by repeated squaring; dimension capped at kMaxExactDimension.
StochasticMatrix matrix_power(const StochasticMatrix& p, std::size_t k);

/// Uniform distribution 1/n.
std::vector<ExactProb> uniform_distribution(std::size_t n);

/// sigma P == sigma, exactly.
bool is_stationary(const StochasticMatrix& p, std::span<const ExactProb> sigma);

/// Number of directed (u,v)-walks of length ell.
BigCount count_walks(const Digraph& d, Vertex u, Vertex v, std::size_t ell);

/// Number of simple directed (u,v)-paths of length ell; with a constraint
/// matching, every constraint edge meets the path in at most one endpoint.
/// Throws BudgetExceeded after `budget` DFS extension steps.
BigCount count_paths(const Digraph& d, Vertex u, Vertex v, std::size_t ell,
                     const std::optional<Matching>& constraint = std::nullopt,
                     std::uint64_t budget = kDefaultPathBudget);

/// alpha = min P(i,j)/sigma_k, beta = max P(i,j)/sigma_k, and the mixing
/// threshold 2 + 2 alpha^{-1} ln(beta).
struct MixingParams {
  ExactProb alpha;
  ExactProb beta;
  double threshold = 0.0;
};

/// Throws ZeroEntry if any entry of P or sigma is zero.
MixingParams mixing_params(const StochasticMatrix& p, std::span<const ExactProb> sigma);

struct MixingReport {
  std::size_t t = 0;
  MixingParams params;
  bool below_threshold = false;  // t < threshold: the bound is not promised
  double bound = 0.0;            // (1 - alpha/2)^t
  double max_relative_deviation = 0.0;
  bool holds = false;            // exact check of |P^t(j,i) - sigma_i| <= bound * sigma_i
};

MixingReport mixing_bound_check(const StochasticMatrix& p, std::span<const ExactProb> sigma,
                                std::size_t t);

struct SandwichReport {
  std::size_t k = 0;
  ExactProb lower;        // nu^{k-1} delta^{-k}
  ExactProb upper;        // delta^{-1}
  ExactProb min_scaled;   // min n * P^k(i,j)
  ExactProb max_scaled;   // max n * P^k(i,j)
  bool holds = false;
};

/// Checks nu^{k-1} delta^{-k} <= n P^k(i,j) <= delta^{-1} for all i,j with
/// delta = d/n taken exactly from the regular digraph. Throws NotRegular.
SandwichReport sandwich_check(const Digraph& d, std::size_t k, double nu);
/// Same with an explicitly supplied delta.
SandwichReport sandwich_check(const Digraph& d, std::size_t k, double nu, const ExactProb& delta);

}  // namespace matchlab
