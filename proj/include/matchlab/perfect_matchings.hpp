#pragma once

#include <cstdint>
#include <functional>
#include <shared_mutex>
#include <unordered_map>
#include <vector>

#include "matchlab/graph.hpp"
#include "matchlab/numeric.hpp"
#include "matchlab/random.hpp"

namespace matchlab {

inline constexpr std::size_t kDefaultDpLimit = 26;
/// Every count the DP produces is at most (n-1)!!, and 55!! < 2^128, so a
/// 128-bit accumulator is exact up to here.
inline constexpr std::size_t kMaxDpVertices = 56;
inline constexpr std::size_t kDefaultEnumerationCap = 1'000'000;
inline constexpr std::size_t kDefaultStrataCap = 64;

/// Memoized perfect-matching counts of induced subgraphs G[alive], keyed by
/// the alive-vertex bitmask. Each state matches its lowest alive vertex with
/// every alive neighbour, so only a small fraction of the 2^n masks is ever
/// touched.
///
/// Thread-safe: lookups take a shared lock; a miss is filled under an
/// exclusive lock by a single writer.
class MatchingCounter {
 public:
  explicit MatchingCounter(const Graph& g, std::size_t vertex_limit = kDefaultDpLimit);

  std::size_t order() const noexcept { return adjacency_.size(); }
  VertexMask full_mask() const noexcept { return full_; }
  VertexMask neighbours(Vertex v) const { return adjacency_[v]; }

  BigCount count() const { return to_big(raw(full_)); }
  BigCount count(VertexMask alive) const { return to_big(raw(alive)); }
  u128 raw(VertexMask alive) const;

  std::size_t memo_size() const;

 private:
  u128 fill(VertexMask alive) const;  // caller holds the exclusive lock

  std::vector<VertexMask> adjacency_;
  VertexMask full_ = 0;
  mutable std::shared_mutex mutex_;
  mutable std::unordered_map<VertexMask, u128> memo_;
};

/// pma(G). Returns 0 for odd n. Throws TooLarge above `vertex_limit`.
BigCount count_pm(const Graph& g, std::size_t vertex_limit = kDefaultDpLimit);

/// Calls `visit` for every perfect matching, in canonical order (lexicographic
/// on sorted edge lists). Stops early if `visit` returns false.
void for_each_pm(const Graph& g, const std::function<bool(const Matching&)>& visit);

/// All perfect matchings in canonical order; TooManyMatchings above `cap`.
std::vector<Matching> enumerate_pm(const Graph& g, std::size_t cap = kDefaultEnumerationCap);

/// |{M in P(G) : F ⊆ M}| = pma(G - V(F)). Throws NotASubMatching.
BigCount count_pm_containing(const Graph& g, const Matching& f,
                             std::size_t vertex_limit = kDefaultDpLimit);

/// Exactly uniform sampler over P(G) by self-reducibility. The lowest
/// unmatched vertex u is matched to v with probability
/// pma(G[alive - u - v]) / pma(G[alive]); counts are shared across draws.
class PerfectMatchingSampler {
 public:
  explicit PerfectMatchingSampler(const Graph& g, std::size_t vertex_limit = kDefaultDpLimit);

  /// Throws NoPerfectMatching when pma(G) == 0.
  Matching operator()(Rng& rng) const;

  const MatchingCounter& counter() const noexcept { return counter_; }

 private:
  MatchingCounter counter_;
};

Matching sample_pm(const Graph& g, Rng& rng);

/// |M_k| for every k, where M_k holds the perfect matchings with exactly k
/// edges of N. Index k runs over 0..min(e(N), n/2).
struct StrataCounts {
  std::vector<BigCount> counts;

  BigCount at(std::size_t k) const { return k < counts.size() ? counts[k] : BigCount(0); }
  BigCount total() const;
  std::size_t max_k() const noexcept { return counts.empty() ? 0 : counts.size() - 1; }
};

struct StratifyOptions {
  std::size_t vertex_limit = kDefaultDpLimit;
  std::size_t max_k = kDefaultStrataCap;
};

/// Subset DP whose states carry a polynomial in the intersection counter k.
/// Throws EdgeNotPresent if E(N) ⊄ E(G), TooLarge past the limits.
StrataCounts stratify(const Graph& g, const EdgeSet& n, const StratifyOptions& options = {});

/// |M ∩ E(N)|.
std::size_t intersection_size(const Matching& m, const EdgeSet& n);

/// Canonically first perfect matching, or nullopt when none exists.
std::optional<Matching> first_perfect_matching(const Graph& g);

}  // namespace matchlab
