#include "matchlab/serialize.hpp"

#include <cstdio>

#include "matchlab/error.hpp"

namespace matchlab {

Json rational_json(const ExactProb& q) {
  return Json{{"num", q.get_num().get_str(10)}, {"den", q.get_den().get_str(10)}};
}

ExactProb rational_from_json(const Json& j) {
  try {
    ExactProb q(BigCount(j.at("num").get<std::string>()), BigCount(j.at("den").get<std::string>()));
    if (q.get_den() == 0) throw Error(ErrorCode::ParseError, "zero denominator");
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument& e) {
    throw Error(ErrorCode::ParseError, e.what());
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

Json edge_json(const Edge& e) { return Json::array({e.u, e.v}); }

Json vertex_set_json(const VertexSet& s) { return Json(s); }

Json matching_json(const Matching& m) {
  Json out = Json::array();
  for (const auto& e : m) out.push_back(edge_json(e));
  return out;
}

Json certificate_json(const ExpansionCertificate& c) {
  return Json{{"verdict", std::string(to_string(c.verdict))},
              {"nu", c.params.nu},
              {"tau", c.params.tau},
              {"witness", c.witness ? vertex_set_json(*c.witness) : Json(nullptr)},
              {"sets_checked", c.sets_checked}};
}

Json strata_json(const StrataCounts& s) {
  Json out = Json::object();
  for (std::size_t k = 0; k < s.counts.size(); ++k) out[std::to_string(k)] = to_decimal(s.counts[k]);
  return out;
}

Json pmf_json(const Pmf& p) {
  Json out;
  if (p.is_exact()) {
    Json exact = Json::object();
    for (std::size_t k = 0; k < p.exact.size(); ++k) exact[std::to_string(k)] = rational_json(p.exact[k]);
    out["exact"] = exact;
  }
  Json floats = Json::object();
  for (std::size_t k = 0; k < p.probs.size(); ++k) floats[std::to_string(k)] = p.probs[k];
  out["float"] = floats;
  out["truncated_mass"] = p.truncated_mass;
  return out;
}

Json tv_json(const TvDistance& tv) { return Json{{"value", tv.value}, {"slack", tv.slack}}; }

Json avoidance_json(const AvoidanceRatio& a) {
  return Json{{"avoiding", to_decimal(a.avoiding)},
              {"total", to_decimal(a.total)},
              {"exact", to_fraction(a.exact)},
              {"exact_rational", rational_json(a.exact)},
              {"exact_float", a.exact.get_d()},
              {"lambda", a.lambda},
              {"reference", a.reference}};
}

Json disjoint_json(const DisjointProbability& d) {
  Json out{{"r", d.r},
           {"mode", d.mode == DisjointMode::Exact ? "exact" : "montecarlo"},
           {"value", d.value},
           {"std_error", d.std_error},
           {"samples", d.samples},
           {"reference", d.reference}};
  if (d.exact) {
    out["exact"] = to_fraction(*d.exact);
    out["exact_rational"] = rational_json(*d.exact);
  } else {
    out["exact"] = nullptr;
  }
  return out;
}

Json edge_freq_json(const EdgeFrequencies& f) {
  Json edges = Json::array();
  for (const auto& [e, x] : f.frequency) edges.push_back(Json{{"edge", edge_json(e)}, {"frequency", x}});
  return Json{{"samples", f.samples}, {"flagged", f.flagged}, {"edges", edges}};
}

Json degree_stats_json(const DegreeStats& s) {
  return Json{{"min", s.min}, {"max", s.max}, {"mean", rational_json(s.mean)}};
}

Json ratio_report_json(const RatioReport& r) {
  return Json{{"k", r.k},
              {"ell", r.ell},
              {"n", r.n},
              {"d", r.d},
              {"f", r.f},
              {"stratum_k", to_decimal(r.stratum_k)},
              {"stratum_k_minus_1", to_decimal(r.stratum_k_minus_1)},
              {"exact_ratio", rational_json(r.exact_ratio)},
              {"exact_ratio_float", r.exact_ratio.get_d()},
              {"predicted", rational_json(r.predicted)},
              {"predicted_float", r.predicted.get_d()},
              {"switch_edges", r.switch_edges},
              {"left_degrees", degree_stats_json(r.left_stats)},
              {"right_degrees", degree_stats_json(r.right_stats)},
              {"predicted_left_degree", rational_json(r.predicted_left_degree)},
              {"predicted_right_degree", rational_json(r.predicted_right_degree)},
              {"double_count_holds", r.double_count_holds}};
}

Json matrix_json(const RationalMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.dimension(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.dimension(); ++j) row.push_back(rational_json(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

Json mixing_params_json(const MixingParams& p) {
  return Json{{"alpha", rational_json(p.alpha)},
              {"alpha_float", p.alpha.get_d()},
              {"beta", rational_json(p.beta)},
              {"beta_float", p.beta.get_d()},
              {"threshold", p.threshold}};
}

Json mixing_report_json(const MixingReport& r) {
  return Json{{"t", r.t},
              {"params", mixing_params_json(r.params)},
              {"below_threshold", r.below_threshold},
              {"bound", r.bound},
              {"max_relative_deviation", r.max_relative_deviation},
              {"holds", r.holds}};
}

Json sandwich_json(const SandwichReport& r) {
  return Json{{"k", r.k},
              {"lower", rational_json(r.lower)},
              {"upper", rational_json(r.upper)},
              {"min_scaled", rational_json(r.min_scaled)},
              {"max_scaled", rational_json(r.max_scaled)},
              {"holds", r.holds}};
}

std::string format_float(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

}  // namespace matchlab
