#include "matchlab/stats.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <thread>

#include "matchlab/error.hpp"
#include "matchlab/perfect_matchings.hpp"
#include "matchlab/random.hpp"

namespace matchlab {

std::size_t Pmf::support_max() const noexcept {
  for (std::size_t k = probs.size(); k > 0; --k) {
    if (probs[k - 1] > 0.0 || (is_exact() && exact[k - 1] > 0)) return k - 1;
  }
  return 0;
}

Pmf exact_pmf(std::vector<ExactProb> probs) {
  Pmf pmf;
  pmf.probs.reserve(probs.size());
  for (auto& p : probs) {
    p.canonicalize();
    pmf.probs.push_back(p.get_d());
  }
  pmf.exact = std::move(probs);
  return pmf;
}

namespace {

BigCount require_pm(const Graph& g) {
  BigCount total = count_pm(g);
  if (total == 0) throw Error(ErrorCode::NoPerfectMatching, "pma(G) = 0");
  return total;
}

ExactProb ratio(const BigCount& num, const BigCount& den) {
  ExactProb q(num, den);
  q.canonicalize();
  return q;
}

double average_degree(const Graph& g) {
  if (g.order() == 0) return 0.0;
  return 2.0 * static_cast<double>(g.size()) / static_cast<double>(g.order());
}

}  // namespace

ExactProb edge_probability(const Graph& g, Edge e) {
  e = make_edge(e.u, e.v);
  if (e.v >= g.order()) throw Error(ErrorCode::VertexOutOfRange, std::to_string(e.v));
  if (!g.has_edge(e.u, e.v)) throw Error(ErrorCode::EdgeNotPresent, "edge not in G");
  const BigCount total = require_pm(g);
  return ratio(count_pm_containing(g, Matching({e})), total);
}

Pmf intersection_pmf(const Graph& g, const EdgeSet& n) {
  const StrataCounts strata = stratify(g, n);
  const BigCount total = strata.total();
  if (total == 0) throw Error(ErrorCode::NoPerfectMatching, "pma(G) = 0");
  std::vector<ExactProb> probs;
  probs.reserve(strata.counts.size());
  for (const auto& c : strata.counts) probs.push_back(ratio(c, total));
  return exact_pmf(std::move(probs));
}

ExactProb mean(const Pmf& pmf) {
  if (!pmf.is_exact()) throw Error(ErrorCode::InvalidParameter, "mean needs an exact PMF");
  ExactProb m = 0;
  for (std::size_t k = 0; k < pmf.exact.size(); ++k) {
    m += static_cast<unsigned long>(k) * pmf.exact[k];
  }
  return m;
}

Pmf poisson_pmf(double lambda, std::size_t k_max) {
  if (!(lambda >= 0.0) || !std::isfinite(lambda)) {
    throw Error(ErrorCode::InvalidParameter, "lambda must be finite and >= 0");
  }
  Pmf pmf;
  pmf.probs.assign(k_max + 1, 0.0);
  if (lambda == 0.0) {
    pmf.probs[0] = 1.0;
    return pmf;
  }
  const double log_lambda = std::log(lambda);
  auto term = [&](std::size_t k) {
    const double kk = static_cast<double>(k);
    return std::exp(-lambda + kk * log_lambda - std::lgamma(kk + 1.0));
  };
  for (std::size_t k = 0; k <= k_max; ++k) pmf.probs[k] = term(k);

  // Tail summed term by term; terms decrease once k exceeds lambda.
  double tail = 0.0;
  for (std::size_t k = k_max + 1;; ++k) {
    const double t = term(k);
    tail += t;
    if (static_cast<double>(k) > lambda && (t == 0.0 || t < 1e-20 * tail)) break;
  }
  pmf.truncated_mass = tail;
  return pmf;
}

std::size_t default_poisson_cutoff(const Pmf& exact, double lambda) {
  return exact.support_max() + static_cast<std::size_t>(std::ceil(10.0 * lambda)) + 20;
}

TvDistance tv_distance(const Pmf& p, const Pmf& q) {
  TvDistance tv;
  const std::size_t len = std::max(p.size(), q.size());
  if (p.is_exact() && q.is_exact()) {
    ExactProb sum = 0;
    for (std::size_t k = 0; k < len; ++k) {
      const ExactProb a = k < p.exact.size() ? p.exact[k] : ExactProb(0);
      const ExactProb b = k < q.exact.size() ? q.exact[k] : ExactProb(0);
      sum += abs(a - b);
    }
    tv.value = ExactProb(sum / 2).get_d();
  } else {
    double sum = 0.0;
    for (std::size_t k = 0; k < len; ++k) sum += std::fabs(p.at(k) - q.at(k));
    tv.value = sum / 2.0;
  }
  tv.slack = (p.truncated_mass + q.truncated_mass) / 2.0;
  return tv;
}

double poisson_lambda(const Graph& g, const EdgeSet& n) {
  const auto d = regularity(g);
  if (!d || *d == 0) throw Error(ErrorCode::NotRegular, "lambda = e(N)/d needs a regular graph");
  return static_cast<double>(n.size()) / static_cast<double>(*d);
}

AvoidanceRatio avoidance_ratio(const Graph& g, const EdgeSet& n) {
  AvoidanceRatio result;
  result.lambda = poisson_lambda(g, n);
  result.total = require_pm(g);
  result.avoiding = count_pm(remove_edge_set(g, n));
  result.exact = ratio(result.avoiding, result.total);
  result.reference = std::exp(-result.lambda);
  return result;
}

namespace {

using PartnerArray = std::vector<Vertex>;

PartnerArray partner_array(const Matching& m, std::size_t n) {
  PartnerArray partner(n, n);
  for (const auto& e : m) {
    partner[e.u] = e.v;
    partner[e.v] = e.u;
  }
  return partner;
}

bool edge_disjoint(const PartnerArray& a, const PartnerArray& b) {
  for (std::size_t v = 0; v < a.size(); ++v) {
    if (a[v] < a.size() && a[v] == b[v]) return false;
  }
  return true;
}

ExactProb exact_pair_probability(const Graph& g, const BigCount& total) {
  BigCount sum = 0;
  for_each_pm(g, [&](const Matching& m) {
    sum += count_pm(remove_edge_set(g, m));
    return true;
  });
  return ratio(sum, total * total);
}

// Ordered r-tuples of pairwise edge-disjoint perfect matchings.
ExactProb exact_tuple_probability(const Graph& g, std::size_t r, const BigCount& total) {
  BigCount budget = total;
  for (std::size_t i = 1; i < r; ++i) {
    budget *= total;
    if (budget > kExactTupleBudget) {
      throw Error(ErrorCode::ExactInfeasible, "pma(G)^r exceeds " +
                                                  std::to_string(kExactTupleBudget));
    }
  }
  const auto pms = enumerate_pm(g);
  const std::size_t count = pms.size();
  std::vector<PartnerArray> partners;
  partners.reserve(count);
  for (const auto& m : pms) partners.push_back(partner_array(m, g.order()));
  std::vector<std::vector<char>> compatible(count, std::vector<char>(count, 0));
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = i + 1; j < count; ++j) {
      compatible[i][j] = compatible[j][i] = edge_disjoint(partners[i], partners[j]) ? 1 : 0;
    }
  }

  std::vector<std::size_t> chosen;
  std::uint64_t hits = 0;
  auto extend = [&](auto&& self) -> void {
    if (chosen.size() == r) {
      ++hits;
      return;
    }
    for (std::size_t j = 0; j < count; ++j) {
      bool ok = true;
      for (auto i : chosen) {
        if (!compatible[i][j]) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      chosen.push_back(j);
      self(self);
      chosen.pop_back();
    }
  };
  extend(extend);
  BigCount denominator = 1;
  for (std::size_t i = 0; i < r; ++i) denominator *= total;
  return ratio(BigCount(static_cast<unsigned long>(hits)), denominator);
}

}  // namespace

DisjointProbability disjoint_probability(const Graph& g, std::size_t r, DisjointMode mode,
                                         std::uint64_t samples, std::uint64_t seed) {
  if (r == 0) throw Error(ErrorCode::InvalidParameter, "r must be >= 1");
  DisjointProbability result;
  result.r = r;
  result.mode = mode;
  const double d = average_degree(g);
  const double pairs = static_cast<double>(r) * static_cast<double>(r - 1) / 2.0;
  result.reference =
      r == 1 ? 1.0 : std::exp(-static_cast<double>(g.order()) / (2.0 * d) * pairs);

  if (mode == DisjointMode::Exact) {
    const BigCount total = require_pm(g);
    if (r == 1) {
      result.exact = ExactProb(1);
    } else if (r == 2) {
      result.exact = exact_pair_probability(g, total);
    } else {
      result.exact = exact_tuple_probability(g, r, total);
    }
    result.value = result.exact->get_d();
    return result;
  }

  const PerfectMatchingSampler sampler(g);
  if (sampler.counter().count() == 0) throw Error(ErrorCode::NoPerfectMatching, "pma(G) = 0");
  result.samples = samples;
  if (r == 1) {
    result.value = 1.0;
    return result;
  }
  if (samples == 0) return result;

  std::vector<std::uint64_t> hits(kMonteCarloStreams, 0);
  auto run_stream = [&](std::size_t stream) {
    const std::uint64_t quota =
        samples / kMonteCarloStreams + (stream < samples % kMonteCarloStreams ? 1 : 0);
    Rng rng = derive_stream(seed, stream);
    std::vector<PartnerArray> drawn(r);
    for (std::uint64_t s = 0; s < quota; ++s) {
      bool disjoint = true;
      for (std::size_t i = 0; i < r && disjoint; ++i) {
        drawn[i] = partner_array(sampler(rng), g.order());
        for (std::size_t j = 0; j < i && disjoint; ++j) disjoint = edge_disjoint(drawn[i], drawn[j]);
      }
      if (disjoint) ++hits[stream];
    }
  };
  {
    std::vector<std::jthread> workers;
    const std::size_t threads =
        std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, kMonteCarloStreams);
    for (std::size_t t = 0; t < threads; ++t) {
      workers.emplace_back([&, t] {
        for (std::size_t stream = t; stream < kMonteCarloStreams; stream += threads) {
          run_stream(stream);
        }
      });
    }
  }
  std::uint64_t total_hits = 0;
  for (auto h : hits) total_hits += h;
  const double n_samples = static_cast<double>(samples);
  result.value = static_cast<double>(total_hits) / n_samples;
  result.std_error = std::sqrt(result.value * (1.0 - result.value) / n_samples);
  return result;
}

EdgeFrequencies empirical_edge_freq(const Graph& g, std::uint64_t samples, std::uint64_t seed) {
  EdgeFrequencies result;
  result.samples = samples;
  for (const auto& e : g.edges()) result.frequency[e] = 0.0;
  const PerfectMatchingSampler sampler(g);
  if (sampler.counter().count() == 0) throw Error(ErrorCode::NoPerfectMatching, "pma(G) = 0");
  if (samples == 0) {
    result.flagged = true;
    return result;
  }
  std::map<Edge, std::uint64_t> hits;
  Rng rng = derive_stream(seed, 0);
  for (std::uint64_t s = 0; s < samples; ++s) {
    for (const auto& e : sampler(rng)) ++hits[e];
  }
  for (const auto& [e, h] : hits) {
    result.frequency[e] = static_cast<double>(h) / static_cast<double>(samples);
  }
  return result;
}

Pmf pmf_from_ratios(std::span<const ExactProb> ratios) {
  std::vector<ExactProb> weights{ExactProb(1)};
  for (const auto& r : ratios) {
    if (r <= 0) throw Error(ErrorCode::InvalidParameter, "ratios must be positive");
    weights.push_back(weights.back() * r);
  }
  ExactProb sum = 0;
  for (const auto& w : weights) sum += w;
  for (auto& w : weights) w /= sum;
  return exact_pmf(std::move(weights));
}

}  // namespace matchlab
