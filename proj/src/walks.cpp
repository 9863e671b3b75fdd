#include "matchlab/walks.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "matchlab/error.hpp"

namespace matchlab {

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  const std::size_t n = a.dimension();
  RationalMatrix c(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t l = 0; l < n; ++l) {
      const ExactProb& x = a(i, l);
      if (x == 0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (b(l, j) != 0) c(i, j) += x * b(l, j);
      }
    }
  }
  return c;
}

StochasticMatrix::StochasticMatrix(RationalMatrix m) : m_(std::move(m)) {
  for (std::size_t i = 0; i < m_.dimension(); ++i) {
    ExactProb row = 0;
    for (std::size_t j = 0; j < m_.dimension(); ++j) {
      if (m_(i, j) < 0) throw Error(ErrorCode::InvalidParameter, "negative entry");
      row += m_(i, j);
    }
    if (row != 1) throw Error(ErrorCode::InvalidParameter, "row " + std::to_string(i) + " sum != 1");
  }
}

namespace {

void check_dimension(std::size_t n) {
  if (n > kMaxExactDimension) {
    throw Error(ErrorCode::TooLarge, "exact matrices are capped at dimension " +
                                         std::to_string(kMaxExactDimension));
  }
}

}  // namespace

StochasticMatrix transition_matrix(const Digraph& d) {
  check_dimension(d.order());
  RationalMatrix m(d.order());
  for (Vertex u = 0; u < d.order(); ++u) {
    const std::size_t deg = d.out_degree(u);
    if (deg == 0) throw Error(ErrorCode::SinkVertex, "vertex " + std::to_string(u));
    for (Vertex v : d.out_neighbours(u)) m(u, v) = ExactProb(1, static_cast<unsigned long>(deg));
  }
  return StochasticMatrix(std::move(m));
}

StochasticMatrix matrix_power(const StochasticMatrix& p, std::size_t k) {
  check_dimension(p.dimension());
  RationalMatrix result = RationalMatrix::identity(p.dimension());
  RationalMatrix base = p.matrix();
  while (k > 0) {
    if (k & 1U) result = result * base;
    k >>= 1U;
    if (k > 0) base = base * base;
  }
  return StochasticMatrix(std::move(result));
}

std::vector<ExactProb> uniform_distribution(std::size_t n) {
  return std::vector<ExactProb>(n, ExactProb(1, static_cast<unsigned long>(n)));
}

bool is_stationary(const StochasticMatrix& p, std::span<const ExactProb> sigma) {
  const std::size_t n = p.dimension();
  if (sigma.size() != n) return false;
  for (std::size_t j = 0; j < n; ++j) {
    ExactProb mass = 0;
    for (std::size_t i = 0; i < n; ++i) mass += sigma[i] * p(i, j);
    if (mass != sigma[j]) return false;
  }
  return true;
}

BigCount count_walks(const Digraph& d, Vertex u, Vertex v, std::size_t ell) {
  if (u >= d.order() || v >= d.order()) throw Error(ErrorCode::VertexOutOfRange, "walk endpoint");
  std::vector<BigCount> reach(d.order(), 0);
  reach[u] = 1;
  for (std::size_t step = 0; step < ell; ++step) {
    std::vector<BigCount> next(d.order(), 0);
    for (Vertex x = 0; x < d.order(); ++x) {
      if (reach[x] == 0) continue;
      for (Vertex y : d.out_neighbours(x)) next[y] += reach[x];
    }
    reach = std::move(next);
  }
  return reach[v];
}

BigCount count_paths(const Digraph& d, Vertex u, Vertex v, std::size_t ell,
                     const std::optional<Matching>& constraint, std::uint64_t budget) {
  const std::size_t n = d.order();
  if (u >= n || v >= n) throw Error(ErrorCode::VertexOutOfRange, "path endpoint");
  if (u == v) return ell == 0 ? 1 : 0;
  std::vector<std::optional<Vertex>> partner(n);
  if (constraint) partner = constraint->partners(n);

  std::vector<char> on_path(n, 0);
  std::uint64_t steps = 0;
  std::uint64_t count = 0;

  // A vertex may join the path only if its constraint partner is not on it.
  auto admissible = [&](Vertex x) {
    return !on_path[x] && !(partner[x] && on_path[*partner[x]]);
  };
  auto extend = [&](auto&& self, Vertex x, std::size_t depth) -> void {
    if (depth == ell) {
      if (x == v) ++count;
      return;
    }
    if (x == v) return;
    for (Vertex y : d.out_neighbours(x)) {
      if (++steps > budget) {
        throw Error(ErrorCode::BudgetExceeded, "path enumeration exceeded " +
                                                   std::to_string(budget) + " steps");
      }
      if (!admissible(y)) continue;
      on_path[y] = 1;
      self(self, y, depth + 1);
      on_path[y] = 0;
    }
  };
  if (!admissible(u)) return 0;
  on_path[u] = 1;
  extend(extend, u, 0);
  return BigCount(static_cast<unsigned long>(count));
}

MixingParams mixing_params(const StochasticMatrix& p, std::span<const ExactProb> sigma) {
  const std::size_t n = p.dimension();
  if (sigma.size() != n || n == 0) {
    throw Error(ErrorCode::InvalidParameter, "sigma must match the matrix dimension");
  }
  ExactProb p_min = p(0, 0);
  ExactProb p_max = p(0, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (p(i, j) == 0) {
        throw Error(ErrorCode::ZeroEntry,
                    "P(" + std::to_string(i) + "," + std::to_string(j) + ") = 0");
      }
      p_min = std::min(p_min, p(i, j));
      p_max = std::max(p_max, p(i, j));
    }
  }
  ExactProb s_min = sigma[0];
  ExactProb s_max = sigma[0];
  for (const auto& s : sigma) {
    if (s <= 0) throw Error(ErrorCode::ZeroEntry, "sigma has a zero entry");
    s_min = std::min(s_min, s);
    s_max = std::max(s_max, s);
  }
  MixingParams params;
  params.alpha = p_min / s_max;
  params.beta = p_max / s_min;
  params.threshold = 2.0 + 2.0 / params.alpha.get_d() * std::log(params.beta.get_d());
  return params;
}

MixingReport mixing_bound_check(const StochasticMatrix& p, std::span<const ExactProb> sigma,
                                std::size_t t) {
  MixingReport report;
  report.t = t;
  report.params = mixing_params(p, sigma);
  report.below_threshold = static_cast<double>(t) < report.params.threshold;

  const ExactProb bound = pow_exact(1 - report.params.alpha / 2, t);
  report.bound = bound.get_d();
  const StochasticMatrix pt = matrix_power(p, t);
  report.holds = true;
  for (std::size_t j = 0; j < p.dimension(); ++j) {
    for (std::size_t i = 0; i < p.dimension(); ++i) {
      const ExactProb deviation = abs(pt(j, i) - sigma[i]);
      if (deviation > bound * sigma[i]) report.holds = false;
      const ExactProb relative = deviation / sigma[i];
      report.max_relative_deviation = std::max(report.max_relative_deviation, relative.get_d());
    }
  }
  return report;
}

SandwichReport sandwich_check(const Digraph& d, std::size_t k, double nu) {
  const auto deg = regularity(d);
  if (!deg) throw Error(ErrorCode::NotRegular, "sandwich check needs a regular digraph");
  ExactProb delta(static_cast<unsigned long>(*deg), static_cast<unsigned long>(d.order()));
  delta.canonicalize();
  return sandwich_check(d, k, nu, delta);
}

SandwichReport sandwich_check(const Digraph& d, std::size_t k, double nu, const ExactProb& delta) {
  if (!regularity(d)) throw Error(ErrorCode::NotRegular, "sandwich check needs a regular digraph");
  if (delta <= 0) throw Error(ErrorCode::InvalidParameter, "delta must be positive");
  if (k == 0) throw Error(ErrorCode::InvalidParameter, "sandwich check needs k >= 1");
  SandwichReport report;
  report.k = k;
  const ExactProb nu_exact = exact_from_decimal(nu);
  report.upper = 1 / delta;
  report.lower = pow_exact(nu_exact, k - 1) / pow_exact(delta, k);

  const StochasticMatrix pk = matrix_power(transition_matrix(d), k);
  const ExactProb n = static_cast<unsigned long>(d.order());
  report.min_scaled = n * pk(0, 0);
  report.max_scaled = report.min_scaled;
  for (std::size_t i = 0; i < pk.dimension(); ++i) {
    for (std::size_t j = 0; j < pk.dimension(); ++j) {
      const ExactProb scaled = n * pk(i, j);
      report.min_scaled = std::min(report.min_scaled, scaled);
      report.max_scaled = std::max(report.max_scaled, scaled);
    }
  }
  report.holds = report.min_scaled >= report.lower && report.max_scaled <= report.upper;
  return report;
}

}  // namespace matchlab
