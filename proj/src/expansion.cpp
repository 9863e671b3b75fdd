#include "matchlab/expansion.hpp"

#include <algorithm>
#include <numeric>
#include <span>
#include <string>

#include "matchlab/error.hpp"
#include "matchlab/random.hpp"

namespace matchlab {

void ExpansionParams::validate() const {
  if (!(nu > 0.0 && nu < 1.0) || !(tau > 0.0 && tau < 1.0)) {
    throw Error(ErrorCode::InvalidParameter, "nu and tau must lie in (0, 1)");
  }
}

std::string_view to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::Pass: return "Pass";
    case Verdict::Fail: return "Fail";
    case Verdict::Inconclusive: return "Inconclusive";
  }
  return "Inconclusive";
}

SizeWindow size_window(std::size_t n, double tau) {
  const ExactProb t = exact_from_decimal(tau);
  const ExactProb order = static_cast<unsigned long>(n);
  const BigCount lo = ceil_exact(t * order);
  const BigCount hi = floor_exact((1 - t) * order);
  SizeWindow w;
  w.lo = lo < 0 ? 0 : lo.get_ui();
  if (hi < 0) {
    w.lo = 1;
    w.hi = 0;
  } else {
    w.hi = hi.get_ui();
  }
  return w;
}

std::size_t robust_threshold(std::size_t n, double nu) {
  const BigCount c = ceil_exact(exact_from_decimal(nu) * static_cast<unsigned long>(n));
  return c < 0 ? 0 : c.get_ui();
}

namespace {

// Successor lists through which adding u to S raises the robust count of
// each successor: neighbours for graphs, out-neighbours for digraphs.
struct GraphSuccessors {
  const Graph& g;
  std::span<const Vertex> operator()(Vertex v) const { return g.neighbours(v); }
  std::size_t order() const { return g.order(); }
};

struct DigraphSuccessors {
  const Digraph& d;
  std::span<const Vertex> operator()(Vertex v) const { return d.out_neighbours(v); }
  std::size_t order() const { return d.order(); }
};

template <class Successors>
VertexSet robust_set(const Successors& succ, const VertexSet& s, std::size_t need) {
  std::vector<std::size_t> hits(succ.order(), 0);
  for (Vertex u : s) {
    if (u >= succ.order()) throw Error(ErrorCode::VertexOutOfRange, std::to_string(u));
    for (Vertex w : succ(u)) ++hits[w];
  }
  VertexSet out;
  for (Vertex v = 0; v < succ.order(); ++v) {
    if (hits[v] >= need) out.push_back(v);
  }
  return out;
}

// Depth-first walk over subsets of `candidates` in lexicographic order of
// sorted vertex lists, maintaining |N(v) ∩ S| and |RN(S)| incrementally.
template <class Successors>
class Sweep {
 public:
  Sweep(const Successors& succ, std::span<const Vertex> candidates, std::size_t need,
        SizeWindow window)
      : succ_(succ), candidates_(candidates), need_(need), window_(window),
        hits_(succ.order(), 0), robust_size_(need == 0 ? succ.order() : 0) {}

  ExpansionCertificate run(const ExpansionParams& p) {
    ExpansionCertificate cert;
    cert.params = p;
    if (!window_.empty()) descend(0);
    cert.sets_checked = checked_;
    if (found_) {
      cert.verdict = Verdict::Fail;
      cert.witness = witness_;
    } else {
      cert.verdict = Verdict::Pass;
    }
    return cert;
  }

 private:
  void add(Vertex u) {
    chosen_.push_back(u);
    for (Vertex w : succ_(u)) {
      if (++hits_[w] == need_) ++robust_size_;
    }
  }

  void remove(Vertex u) {
    chosen_.pop_back();
    for (Vertex w : succ_(u)) {
      if (hits_[w]-- == need_) --robust_size_;
    }
  }

  // Returns true once a violating set is found.
  bool visit() {
    const std::size_t size = chosen_.size();
    if (size < window_.lo || size > window_.hi) return false;
    ++checked_;
    if (robust_size_ < size + need_) {
      found_ = true;
      witness_ = chosen_;
      return true;
    }
    return false;
  }

  bool descend(std::size_t next) {
    if (visit()) return true;
    if (chosen_.size() == window_.hi) return false;
    for (std::size_t i = next; i < candidates_.size(); ++i) {
      if (chosen_.size() + (candidates_.size() - i) < window_.lo) break;
      add(candidates_[i]);
      const bool stop = descend(i + 1);
      remove(candidates_[i]);
      if (stop) return true;
    }
    return false;
  }

  const Successors& succ_;
  std::span<const Vertex> candidates_;
  std::size_t need_;
  SizeWindow window_;
  std::vector<std::size_t> hits_;
  std::size_t robust_size_;
  VertexSet chosen_;
  VertexSet witness_;
  bool found_ = false;
  std::uint64_t checked_ = 0;
};

template <class Successors>
ExpansionCertificate exact_sweep(const Successors& succ, std::span<const Vertex> candidates,
                                 std::size_t reference_order, const ExpansionParams& p,
                                 std::size_t limit) {
  p.validate();
  if (candidates.size() > limit) {
    throw Error(ErrorCode::TooLargeForExactSweep,
                std::to_string(candidates.size()) + " candidate vertices exceed limit " +
                    std::to_string(limit));
  }
  const std::size_t need = robust_threshold(reference_order, p.nu);
  Sweep<Successors> sweep(succ, candidates, need, size_window(reference_order, p.tau));
  return sweep.run(p);
}

template <class Successors>
ExpansionCertificate sampled_search(const Successors& succ, const ExpansionParams& p,
                                    std::uint64_t trials, std::uint64_t seed) {
  p.validate();
  const std::size_t n = succ.order();
  ExpansionCertificate cert;
  cert.params = p;
  cert.verdict = Verdict::Inconclusive;
  const SizeWindow window = size_window(n, p.tau);
  if (trials == 0 || window.empty()) return cert;

  const std::size_t need = robust_threshold(n, p.nu);
  Rng rng(seed);
  VertexSet pool(n);
  for (std::uint64_t t = 0; t < trials; ++t) {
    std::iota(pool.begin(), pool.end(), Vertex{0});
    const std::size_t size = window.lo + uniform_below(rng, window.hi - window.lo + 1);
    for (std::size_t i = 0; i < size; ++i) {
      std::swap(pool[i], pool[i + uniform_below(rng, n - i)]);
    }
    VertexSet s(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(size));
    std::sort(s.begin(), s.end());
    const VertexSet rn = robust_set(succ, s, need);
    cert.sets_checked = t + 1;
    if (rn.size() < s.size() + need) {
      cert.verdict = Verdict::Fail;
      cert.witness = std::move(s);
      return cert;
    }
  }
  return cert;
}

VertexSet all_vertices(std::size_t n) {
  VertexSet v(n);
  std::iota(v.begin(), v.end(), Vertex{0});
  return v;
}

}  // namespace

VertexSet robust_neighbourhood(const Graph& g, const VertexSet& s, double nu) {
  return robust_neighbourhood(g, s, nu, g.order());
}

VertexSet robust_neighbourhood(const Graph& g, const VertexSet& s, double nu,
                               std::size_t reference_order) {
  return robust_set(GraphSuccessors{g}, s, robust_threshold(reference_order, nu));
}

VertexSet robust_outneighbourhood(const Digraph& d, const VertexSet& s, double nu) {
  return robust_set(DigraphSuccessors{d}, s, robust_threshold(d.order(), nu));
}

ExpansionCertificate certify_exact(const Graph& g, const ExpansionParams& p,
                                   std::size_t exhaustive_limit) {
  const VertexSet candidates = all_vertices(g.order());
  return exact_sweep(GraphSuccessors{g}, candidates, g.order(), p, exhaustive_limit);
}

ExpansionCertificate certify_exact(const Digraph& d, const ExpansionParams& p,
                                   std::size_t exhaustive_limit) {
  const VertexSet candidates = all_vertices(d.order());
  return exact_sweep(DigraphSuccessors{d}, candidates, d.order(), p, exhaustive_limit);
}

ExpansionCertificate refute_sampled(const Graph& g, const ExpansionParams& p,
                                    std::uint64_t trials, std::uint64_t seed) {
  return sampled_search(GraphSuccessors{g}, p, trials, seed);
}

ExpansionCertificate refute_sampled(const Digraph& d, const ExpansionParams& p,
                                    std::uint64_t trials, std::uint64_t seed) {
  return sampled_search(DigraphSuccessors{d}, p, trials, seed);
}

ExpansionCertificate certify_bipartite(const Graph& g, const Bipartition& part,
                                       const ExpansionParams& p,
                                       std::size_t exhaustive_limit) {
  if (part.side_a.size() != part.side_b.size() ||
      part.side_a.size() + part.side_b.size() != g.order()) {
    throw Error(ErrorCode::UnbalancedBipartition,
                "sides " + std::to_string(part.side_a.size()) + " and " +
                    std::to_string(part.side_b.size()));
  }
  if (!respects(g, part)) throw Error(ErrorCode::NotBipartite, "edge inside a side");
  return exact_sweep(GraphSuccessors{g}, part.side_a, part.side_a.size(), p, exhaustive_limit);
}

bool min_degree_sufficient(const Graph& g, double eps) {
  const ExactProb bound =
      (ExactProb(1, 2) + exact_from_decimal(eps)) * static_cast<unsigned long>(g.order());
  return ExactProb(static_cast<unsigned long>(g.min_degree())) >= bound;
}

}  // namespace matchlab
