#pragma once

#include <string>

#include <json.hpp>

#include "matchlab/expansion.hpp"
#include "matchlab/graph.hpp"
#include "matchlab/numeric.hpp"
#include "matchlab/perfect_matchings.hpp"
#include "matchlab/stats.hpp"
#include "matchlab/switching.hpp"
#include "matchlab/walks.hpp"

namespace matchlab {

using Json = nlohmann::json;

/// {"num": "...", "den": "..."}; big integers travel as decimal strings.
Json rational_json(const ExactProb& q);
ExactProb rational_from_json(const Json& j);

Json edge_json(const Edge& e);  // [u, v]
Json vertex_set_json(const VertexSet& s);
Json matching_json(const Matching& m);  // sorted [[u, v], ...]

Json certificate_json(const ExpansionCertificate& c);
/// {"0": "12", "1": "3", ...}
Json strata_json(const StrataCounts& s);
/// {"exact": {"k": {num, den}} (exact PMFs only), "float": {"k": x}, "truncated_mass": x}
Json pmf_json(const Pmf& p);
Json tv_json(const TvDistance& tv);
Json avoidance_json(const AvoidanceRatio& a);
Json disjoint_json(const DisjointProbability& d);
Json edge_freq_json(const EdgeFrequencies& f);
Json degree_stats_json(const DegreeStats& s);
Json ratio_report_json(const RatioReport& r);
Json matrix_json(const RationalMatrix& m);  // rows of {num, den}
Json mixing_params_json(const MixingParams& p);
Json mixing_report_json(const MixingReport& r);
Json sandwich_json(const SandwichReport& r);

/// Float rendered with 12 significant digits.
std::string format_float(double x);

}  // namespace matchlab
