#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "matchlab/graph.hpp"
#include "matchlab/numeric.hpp"

namespace matchlab {

inline constexpr std::size_t kDefaultExhaustiveLimit = 24;

/// Parameters of a robust (nu, tau)-expander; both strictly inside (0, 1).
struct ExpansionParams {
  double nu = 0.0;
  double tau = 0.0;

  /// Throws InvalidParameter unless 0 < nu, tau < 1.
  void validate() const;
};

enum class Verdict { Pass, Fail, Inconclusive };
std::string_view to_string(Verdict v) noexcept;

struct ExpansionCertificate {
  Verdict verdict = Verdict::Inconclusive;
  ExpansionParams params;
  std::optional<VertexSet> witness;  // present iff verdict == Fail
  std::uint64_t sets_checked = 0;
};

/// Integer form of the real bounds tau*n <= |S| <= (1-tau)*n, compared
/// exactly against the binary value of tau (no rounding of tau*n).
struct SizeWindow {
  std::size_t lo = 0;
  std::size_t hi = 0;
  bool empty() const noexcept { return lo > hi; }
};
SizeWindow size_window(std::size_t n, double tau);

/// Smallest integer c with c >= nu*n, evaluated exactly. "At least nu*n
/// neighbours" and "|RN(S)| >= |S| + nu*n" are both integer tests against c.
std::size_t robust_threshold(std::size_t n, double nu);

/// { v : |N(v) ∩ S| >= nu*n }, with n = g.order().
VertexSet robust_neighbourhood(const Graph& g, const VertexSet& s, double nu);
/// Same, measured against an explicit reference order (the side size for
/// bipartite expansion).
VertexSet robust_neighbourhood(const Graph& g, const VertexSet& s, double nu,
                               std::size_t reference_order);
/// { v : |N^-(v) ∩ S| >= nu*n }.
VertexSet robust_outneighbourhood(const Digraph& d, const VertexSet& s, double nu);

/// Exhaustive sweep of every S in the size window, in lexicographic order of
/// sorted vertex lists. Fail carries the first violating set.
ExpansionCertificate certify_exact(const Graph& g, const ExpansionParams& p,
                                   std::size_t exhaustive_limit = kDefaultExhaustiveLimit);
ExpansionCertificate certify_exact(const Digraph& d, const ExpansionParams& p,
                                   std::size_t exhaustive_limit = kDefaultExhaustiveLimit);

/// Random search for a violating S; never returns Pass.
ExpansionCertificate refute_sampled(const Graph& g, const ExpansionParams& p,
                                    std::uint64_t trials, std::uint64_t seed);
ExpansionCertificate refute_sampled(const Digraph& d, const ExpansionParams& p,
                                    std::uint64_t trials, std::uint64_t seed);

/// Bipartite robust expansion: S ranges over subsets of side A only, and
/// both the window and the thresholds use the side size n = |A| = |B|.
ExpansionCertificate certify_bipartite(const Graph& g, const Bipartition& part,
                                       const ExpansionParams& p,
                                       std::size_t exhaustive_limit = kDefaultExhaustiveLimit);

/// delta(G) >= (1/2 + eps) * n. Sufficient for robust expansion, not a certificate.
bool min_degree_sufficient(const Graph& g, double eps);

}  // namespace matchlab
