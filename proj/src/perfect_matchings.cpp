#include "matchlab/perfect_matchings.hpp"

#include <bit>
#include <mutex>
#include <string>

#include "matchlab/error.hpp"

namespace matchlab {

namespace {

constexpr VertexMask bit(Vertex v) { return VertexMask{1} << v; }

Vertex lowest(VertexMask m) { return static_cast<Vertex>(std::countr_zero(m)); }

void check_dp_size(std::size_t n, std::size_t limit) {
  const std::size_t cap = std::min(limit, kMaxDpVertices);
  if (n > cap) {
    throw Error(ErrorCode::TooLarge,
                std::to_string(n) + " vertices exceed the DP limit of " + std::to_string(cap));
  }
}

std::vector<VertexMask> adjacency_masks(const Graph& g) {
  std::vector<VertexMask> adj(g.order());
  for (Vertex v = 0; v < g.order(); ++v) adj[v] = g.neighbour_mask(v);
  return adj;
}

VertexMask all_of(std::size_t n) { return n == kMaskBits ? ~VertexMask{0} : bit(n) - 1; }

}  // namespace

MatchingCounter::MatchingCounter(const Graph& g, std::size_t vertex_limit) {
  check_dp_size(g.order(), vertex_limit);
  adjacency_ = adjacency_masks(g);
  full_ = all_of(g.order());
}

u128 MatchingCounter::raw(VertexMask alive) const {
  if ((alive & ~full_) != 0) throw Error(ErrorCode::VertexOutOfRange, "mask outside graph");
  if (alive == 0) return 1;
  if (std::popcount(alive) % 2 != 0) return 0;
  {
    std::shared_lock lock(mutex_);
    if (auto it = memo_.find(alive); it != memo_.end()) return it->second;
  }
  std::unique_lock lock(mutex_);
  return fill(alive);
}

u128 MatchingCounter::fill(VertexMask alive) const {
  if (alive == 0) return 1;
  if (auto it = memo_.find(alive); it != memo_.end()) return it->second;
  const Vertex u = lowest(alive);
  const VertexMask rest = alive & ~bit(u);
  u128 total = 0;
  for (VertexMask cand = adjacency_[u] & rest; cand != 0; cand &= cand - 1) {
    total += fill(rest & ~bit(lowest(cand)));
  }
  memo_.emplace(alive, total);
  return total;
}

std::size_t MatchingCounter::memo_size() const {
  std::shared_lock lock(mutex_);
  return memo_.size();
}

BigCount count_pm(const Graph& g, std::size_t vertex_limit) {
  check_dp_size(g.order(), vertex_limit);
  if (g.order() % 2 != 0) return 0;
  return MatchingCounter(g, vertex_limit).count();
}

void for_each_pm(const Graph& g, const std::function<bool(const Matching&)>& visit) {
  if (g.order() > kMaskBits) throw Error(ErrorCode::TooLarge, "enumeration needs n <= 64");
  if (g.order() % 2 != 0) return;
  const auto adj = adjacency_masks(g);
  std::vector<Edge> chosen;
  chosen.reserve(g.order() / 2);

  // Returns false when the visitor asked to stop.
  auto descend = [&](auto&& self, VertexMask alive) -> bool {
    if (alive == 0) return visit(Matching(chosen));
    const Vertex u = lowest(alive);
    const VertexMask rest = alive & ~bit(u);
    for (VertexMask cand = adj[u] & rest; cand != 0; cand &= cand - 1) {
      const Vertex v = lowest(cand);
      chosen.push_back({u, v});
      const bool go_on = self(self, rest & ~bit(v));
      chosen.pop_back();
      if (!go_on) return false;
    }
    return true;
  };
  descend(descend, all_of(g.order()));
}

std::vector<Matching> enumerate_pm(const Graph& g, std::size_t cap) {
  std::vector<Matching> out;
  for_each_pm(g, [&](const Matching& m) {
    if (out.size() == cap) {
      throw Error(ErrorCode::TooManyMatchings,
                  "more than " + std::to_string(cap) + " perfect matchings");
    }
    out.push_back(m);
    return true;
  });
  return out;
}

BigCount count_pm_containing(const Graph& g, const Matching& f, std::size_t vertex_limit) {
  VertexMask removed = 0;
  for (const auto& e : f) {
    if (!g.has_edge(e.u, e.v)) {
      throw Error(ErrorCode::NotASubMatching,
                  "edge " + std::to_string(e.u) + "-" + std::to_string(e.v) + " not in G");
    }
    removed |= bit(e.u) | bit(e.v);
  }
  check_dp_size(g.order(), vertex_limit);
  if (g.order() % 2 != 0) return 0;
  MatchingCounter counter(g, vertex_limit);
  return counter.count(counter.full_mask() & ~removed);
}

PerfectMatchingSampler::PerfectMatchingSampler(const Graph& g, std::size_t vertex_limit)
    : counter_(g, vertex_limit) {}

Matching PerfectMatchingSampler::operator()(Rng& rng) const {
  VertexMask alive = counter_.full_mask();
  if (counter_.order() % 2 != 0 || counter_.raw(alive) == 0) {
    throw Error(ErrorCode::NoPerfectMatching, "graph has no perfect matching");
  }
  std::vector<Edge> edges;
  edges.reserve(counter_.order() / 2);
  while (alive != 0) {
    const Vertex u = lowest(alive);
    const VertexMask rest = alive & ~bit(u);
    u128 r = uniform_below(rng, counter_.raw(alive));
    for (VertexMask cand = counter_.neighbours(u) & rest; cand != 0; cand &= cand - 1) {
      const Vertex v = lowest(cand);
      const u128 c = counter_.raw(rest & ~bit(v));
      if (r < c) {
        edges.push_back({u, v});
        alive = rest & ~bit(v);
        break;
      }
      r -= c;
    }
  }
  return Matching(std::move(edges));
}

Matching sample_pm(const Graph& g, Rng& rng) { return PerfectMatchingSampler(g)(rng); }

BigCount StrataCounts::total() const {
  BigCount sum = 0;
  for (const auto& c : counts) sum += c;
  return sum;
}

namespace {

// Per-state polynomial in the number of N-edges used: coefficient k counts
// perfect matchings of G[alive] containing exactly k edges of N.
class StrataDp {
 public:
  StrataDp(std::vector<VertexMask> adj, std::vector<VertexMask> n_adj, std::size_t width)
      : adj_(std::move(adj)), n_adj_(std::move(n_adj)), width_(width) {}

  const std::vector<u128>& solve(VertexMask alive) {
    if (auto it = memo_.find(alive); it != memo_.end()) return it->second;
    std::vector<u128> poly(width_, 0);
    if (alive == 0) {
      poly[0] = 1;
    } else {
      const Vertex u = lowest(alive);
      const VertexMask rest = alive & ~bit(u);
      for (VertexMask cand = adj_[u] & rest; cand != 0; cand &= cand - 1) {
        const Vertex v = lowest(cand);
        const std::size_t shift = (n_adj_[u] & bit(v)) != 0 ? 1 : 0;
        // unordered_map keeps element references valid across rehashing.
        const auto& sub = solve(rest & ~bit(v));
        for (std::size_t k = 0; k + shift < width_; ++k) poly[k + shift] += sub[k];
      }
    }
    return memo_.emplace(alive, std::move(poly)).first->second;
  }

 private:
  std::vector<VertexMask> adj_;
  std::vector<VertexMask> n_adj_;
  std::size_t width_;
  std::unordered_map<VertexMask, std::vector<u128>> memo_;
};

}  // namespace

StrataCounts stratify(const Graph& g, const EdgeSet& n, const StratifyOptions& options) {
  check_dp_size(g.order(), options.vertex_limit);
  std::vector<VertexMask> n_adj(g.order(), 0);
  for (const auto& e : n) {
    if (!g.has_edge(e.u, e.v)) {
      throw Error(ErrorCode::EdgeNotPresent,
                  "N edge " + std::to_string(e.u) + "-" + std::to_string(e.v) + " not in G");
    }
    n_adj[e.u] |= bit(e.v);
    n_adj[e.v] |= bit(e.u);
  }
  const std::size_t top = std::min(n.size(), g.order() / 2);
  if (top > options.max_k) {
    throw Error(ErrorCode::TooLarge, "intersection counter would exceed max_k = " +
                                         std::to_string(options.max_k));
  }
  StrataCounts strata;
  strata.counts.assign(top + 1, BigCount(0));
  if (g.order() % 2 != 0) return strata;
  StrataDp dp(adjacency_masks(g), std::move(n_adj), top + 1);
  const auto& poly = dp.solve(all_of(g.order()));
  for (std::size_t k = 0; k <= top; ++k) strata.counts[k] = to_big(poly[k]);
  return strata;
}

std::size_t intersection_size(const Matching& m, const EdgeSet& n) {
  std::size_t k = 0;
  for (const auto& e : m) {
    if (n.contains(e)) ++k;
  }
  return k;
}

std::optional<Matching> first_perfect_matching(const Graph& g) {
  std::optional<Matching> first;
  for_each_pm(g, [&](const Matching& m) {
    first = m;
    return false;
  });
  return first;
}

}  // namespace matchlab
