#include "matchlab/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "matchlab/edge_list.hpp"
#include "matchlab/error.hpp"
#include "matchlab/expansion.hpp"
#include "matchlab/perfect_matchings.hpp"
#include "matchlab/serialize.hpp"
#include "matchlab/stats.hpp"
#include "matchlab/switching.hpp"
#include "matchlab/walks.hpp"

namespace matchlab {

EdgeSet parse_edge_spec(const std::string& text) {
  std::string cleaned;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) cleaned += c;
  }
  if (cleaned.empty() || cleaned == "none") return EdgeSet();
  std::vector<Edge> edges;
  std::stringstream ss(cleaned);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto dash = item.find('-');
    if (dash == std::string::npos || dash == 0 || dash + 1 == item.size()) {
      throw Error(ErrorCode::ParseError, "bad edge '" + item + "', expected u-v");
    }
    try {
      std::size_t pos_u = 0;
      std::size_t pos_v = 0;
      const std::string su = item.substr(0, dash);
      const std::string sv = item.substr(dash + 1);
      const unsigned long u = std::stoul(su, &pos_u);
      const unsigned long v = std::stoul(sv, &pos_v);
      if (pos_u != su.size() || pos_v != sv.size()) throw std::invalid_argument(item);
      if (u == v) throw Error(ErrorCode::SelfLoop, item);
      edges.push_back(make_edge(u, v));
    } catch (const std::logic_error&) {
      throw Error(ErrorCode::ParseError, "bad edge '" + item + "'");
    }
  }
  return EdgeSet(std::move(edges));
}

namespace {

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

struct Report {
  Json json;
  Table table;
};

struct Options {
  std::string family;
  std::string file;
  std::size_t a = 0;
  std::size_t b = 0;
  std::size_t n = 0;
  std::size_t d = 0;
  std::uint64_t seed = 0;
  double nu = 0.0;
  double tau = 0.0;
  std::size_t ell = 0;
  std::size_t k = 0;
  std::size_t r = 2;
  std::uint64_t samples = 100'000;
  std::string mode = "exact";
  std::string n_edges;
  std::string edge;
  std::string sizes;
  std::size_t max_n = 0;
  std::size_t t = 0;
  std::uint64_t trials = 0;
  bool bipartite = false;
  bool empty_n = false;
  std::string out;
  std::string format;

  // presence of optional flags, filled after parsing
  bool has_n_edges = false;
  bool has_edge = false;
  bool has_ell = false;
  bool has_k = false;
  bool has_t = false;
  bool has_nu = false;
  bool has_tau = false;
  bool has_max_n = false;
};

struct LoadedGraph {
  Graph graph;
  std::optional<Bipartition> part;
  std::string label;
};

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

void write_csv(std::ostream& os, const Table& table) {
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) os << ',';
      os << csv_field(cells[i]);
    }
    os << '\n';
  };
  line(table.header);
  for (const auto& row : table.rows) line(row);
}

std::string str(std::size_t x) { return std::to_string(x); }
std::string flt(double x) { return format_float(x); }

std::string matching_text(const Matching& m) {
  std::string s;
  for (const auto& e : m) {
    if (!s.empty()) s += ' ';
    s += std::to_string(e.u) + "-" + std::to_string(e.v);
  }
  return s;
}

Json edges_json(const EdgeSet& es) {
  Json out = Json::array();
  for (const auto& e : es) out.push_back(edge_json(e));
  return out;
}

void require(bool ok, const std::string& message) {
  if (!ok) throw Error(ErrorCode::InvalidParameter, message);
}

LoadedGraph load_graph(const Options& o) {
  std::string family = o.family;
  if (family.empty()) family = o.file.empty() ? "" : "file";
  LoadedGraph lg;
  if (family == "file") {
    require(!o.file.empty(), "--family file needs --file");
    auto parsed = read_edge_list_file(o.file);
    lg.graph = std::move(parsed.graph);
    lg.part = std::move(parsed.bipartition);
    lg.label = o.file;
  } else if (family == "complete") {
    require(o.n > 0, "--family complete needs -n");
    lg.graph = complete_graph(o.n);
    lg.label = "K_" + str(o.n);
  } else if (family == "multipartite") {
    require(o.a > 0 && o.b > 0, "--family multipartite needs -a and -b");
    lg.graph = complete_multipartite(o.a, o.b);
    if (o.a == 2) lg.part = multipartite_halves(o.b);
    lg.label = "K_" + str(o.a) + "x" + str(o.b);
  } else if (family == "random_regular") {
    require(o.n > 0, "--family random_regular needs -n and -d");
    lg.graph = random_regular(o.n, o.d, o.seed);
    lg.label = "RR(" + str(o.n) + "," + str(o.d) + ",seed=" + std::to_string(o.seed) + ")";
  } else {
    throw Error(ErrorCode::InvalidParameter, "unknown or missing --family '" + family + "'");
  }
  return lg;
}

void check_size(const Graph& g, std::size_t cap) {
  if (g.order() > cap) {
    throw Error(ErrorCode::TooLarge, "n = " + str(g.order()) + " exceeds the cap " + str(cap) +
                                         " (raise with --max-n)");
  }
}

std::size_t cap_or(const Options& o, std::size_t fallback) { return o.has_max_n ? o.max_n : fallback; }

// N from --n-edges when given, else the canonically first perfect matching.
EdgeSet choose_n(const Options& o, const Graph& g) {
  if (o.empty_n) return EdgeSet();
  if (o.has_n_edges) return parse_edge_spec(o.n_edges);
  const auto pm = first_perfect_matching(g);
  if (!pm) throw Error(ErrorCode::NoPerfectMatching, "G has no perfect matching to use as N");
  return *pm;
}

Report cmd_count(const Options& o) {
  const auto lg = load_graph(o);
  const std::size_t cap = cap_or(o, kDefaultDpLimit);
  check_size(lg.graph, cap);
  const BigCount pma = count_pm(lg.graph, std::max(cap, std::size_t{1}));
  Report r;
  r.json = Json{{"graph", lg.label}, {"n", lg.graph.order()}, {"m", lg.graph.size()},
                {"pma", to_decimal(pma)}};
  r.table.header = {"graph", "n", "m", "pma"};
  r.table.rows.push_back({lg.label, str(lg.graph.order()), str(lg.graph.size()), to_decimal(pma)});
  return r;
}

Report cmd_enumerate(const Options& o) {
  const auto lg = load_graph(o);
  check_size(lg.graph, cap_or(o, 20));
  const auto pms = enumerate_pm(lg.graph);
  Report r;
  Json list = Json::array();
  r.table.header = {"index", "matching"};
  for (std::size_t i = 0; i < pms.size(); ++i) {
    list.push_back(matching_json(pms[i]));
    r.table.rows.push_back({str(i), matching_text(pms[i])});
  }
  r.json = Json{{"graph", lg.label}, {"count", pms.size()}, {"matchings", list}};
  return r;
}

Report cmd_edge_prob(const Options& o) {
  const auto lg = load_graph(o);
  check_size(lg.graph, cap_or(o, kDefaultDpLimit));
  const auto d = regularity(lg.graph);
  std::vector<Edge> edges;
  if (o.has_edge) {
    const EdgeSet one = parse_edge_spec(o.edge);
    edges.assign(one.begin(), one.end());
  } else {
    edges = lg.graph.edges();
  }
  Report r;
  Json list = Json::array();
  r.table.header = {"u", "v", "exact", "float", "inverse_degree"};
  for (const auto& e : edges) {
    const ExactProb p = edge_probability(lg.graph, e);
    const Json inv = d && *d > 0 ? Json(1.0 / static_cast<double>(*d)) : Json(nullptr);
    list.push_back(Json{{"edge", edge_json(e)}, {"exact", to_fraction(p)},
                        {"exact_rational", rational_json(p)}, {"float", p.get_d()},
                        {"inverse_degree", inv}});
    r.table.rows.push_back({str(e.u), str(e.v), to_fraction(p), flt(p.get_d()),
                            d && *d > 0 ? flt(1.0 / static_cast<double>(*d)) : ""});
  }
  r.json = Json{{"graph", lg.label}, {"d", d ? Json(*d) : Json(nullptr)}, {"edges", list}};
  return r;
}

Report cmd_pmf(const Options& o) {
  const auto lg = load_graph(o);
  check_size(lg.graph, cap_or(o, kDefaultDpLimit));
  const EdgeSet n_set = choose_n(o, lg.graph);
  const Pmf exact = intersection_pmf(lg.graph, n_set);
  const auto d = regularity(lg.graph);

  Report r;
  r.json = Json{{"graph", lg.label}, {"n_edges", edges_json(n_set)}, {"pmf", pmf_json(exact)},
                {"mean", rational_json(mean(exact))}};
  std::optional<Pmf> poisson;
  if (d && *d > 0) {
    const double lambda = poisson_lambda(lg.graph, n_set);
    poisson = poisson_pmf(lambda, default_poisson_cutoff(exact, lambda));
    r.json["lambda"] = lambda;
    r.json["poisson"] = pmf_json(*poisson);
    r.json["tv"] = tv_json(tv_distance(exact, *poisson));
  } else {
    r.json["lambda"] = nullptr;
  }
  r.table.header = {"k", "exact", "float", "poisson"};
  for (std::size_t k = 0; k < exact.size(); ++k) {
    r.table.rows.push_back({str(k), to_fraction(exact.exact[k]), flt(exact.probs[k]),
                            poisson ? flt(poisson->at(k)) : ""});
  }
  return r;
}

std::vector<std::string> avoidance_header() {
  return {"graph", "n", "d", "e_N", "avoiding", "total", "exact", "exact_float", "lambda",
          "reference", "abs_diff"};
}

std::vector<std::string> avoidance_row(const std::string& label, const Graph& g,
                                       const EdgeSet& n_set, const AvoidanceRatio& a) {
  const double x = a.exact.get_d();
  return {label, str(g.order()), str(regularity(g).value_or(0)), str(n_set.size()),
          to_decimal(a.avoiding), to_decimal(a.total), to_fraction(a.exact), flt(x),
          flt(a.lambda), flt(a.reference), flt(std::fabs(x - a.reference))};
}

Report cmd_avoidance(const Options& o) {
  const auto lg = load_graph(o);
  check_size(lg.graph, cap_or(o, kDefaultDpLimit));
  const EdgeSet n_set = choose_n(o, lg.graph);
  const AvoidanceRatio a = avoidance_ratio(lg.graph, n_set);
  Report r;
  r.json = avoidance_json(a);
  r.json["graph"] = lg.label;
  r.json["n_edges"] = edges_json(n_set);
  r.table.header = avoidance_header();
  r.table.rows.push_back(avoidance_row(lg.label, lg.graph, n_set, a));
  return r;
}

Report cmd_disjoint(const Options& o) {
  const auto lg = load_graph(o);
  check_size(lg.graph, cap_or(o, kDefaultDpLimit));
  DisjointMode mode;
  if (o.mode == "exact") mode = DisjointMode::Exact;
  else if (o.mode == "montecarlo") mode = DisjointMode::MonteCarlo;
  else throw Error(ErrorCode::InvalidParameter, "--mode must be exact or montecarlo");
  if (mode == DisjointMode::Exact && o.r >= 3) check_size(lg.graph, cap_or(o, 20));
  const DisjointProbability p = disjoint_probability(lg.graph, o.r, mode, o.samples, o.seed);
  Report r;
  r.json = disjoint_json(p);
  r.json["graph"] = lg.label;
  r.json["seed"] = o.seed;
  r.table.header = {"graph", "r", "mode", "exact", "value", "std_error", "samples", "reference"};
  r.table.rows.push_back({lg.label, str(p.r), o.mode, p.exact ? to_fraction(*p.exact) : "",
                          flt(p.value), flt(p.std_error), std::to_string(p.samples),
                          flt(p.reference)});
  return r;
}

Report cmd_switching(const Options& o) {
  const auto lg = load_graph(o);
  check_size(lg.graph, cap_or(o, 20));
  const EdgeSet n_set = choose_n(o, lg.graph);
  const std::size_t k = o.has_k ? o.k : 1;
  const std::size_t ell = o.has_ell ? o.ell : default_ell(lg.graph.order());
  const RatioReport rep = ratio_report(lg.graph, n_set, k, ell);
  Report r;
  r.json = ratio_report_json(rep);
  r.json["graph"] = lg.label;
  r.json["n_edges"] = edges_json(n_set);
  r.table.header = {"graph", "n", "d", "k", "ell", "f", "stratum_k", "stratum_k_minus_1",
                    "exact_ratio", "exact_ratio_float", "predicted", "predicted_float",
                    "switch_edges", "double_count_holds"};
  r.table.rows.push_back({lg.label, str(rep.n), str(rep.d), str(rep.k), str(rep.ell), str(rep.f),
                          to_decimal(rep.stratum_k), to_decimal(rep.stratum_k_minus_1),
                          to_fraction(rep.exact_ratio), flt(rep.exact_ratio.get_d()),
                          to_fraction(rep.predicted), flt(rep.predicted.get_d()),
                          str(rep.switch_edges), rep.double_count_holds ? "true" : "false"});
  return r;
}

bool all_positive(const StochasticMatrix& p) {
  for (std::size_t i = 0; i < p.dimension(); ++i) {
    for (std::size_t j = 0; j < p.dimension(); ++j) {
      if (p(i, j) == 0) return false;
    }
  }
  return true;
}

Report cmd_walks(const Options& o) {
  const auto lg = load_graph(o);
  const Digraph dg = symmetric_digraph(lg.graph);
  const StochasticMatrix q = transition_matrix(dg);
  std::size_t power = o.has_k ? o.k : 0;
  if (power == 0) {
    // smallest power with a strictly positive matrix
    StochasticMatrix acc = q;
    for (std::size_t k = 1; k <= dg.order(); ++k) {
      if (all_positive(acc)) {
        power = k;
        break;
      }
      acc = StochasticMatrix(acc.matrix() * q.matrix());
    }
    if (power == 0) throw Error(ErrorCode::ZeroEntry, "no power of the walk matrix is positive");
  }
  const StochasticMatrix p = matrix_power(q, power);
  const auto sigma = uniform_distribution(dg.order());
  const MixingParams params = mixing_params(p, sigma);
  const std::size_t t = o.has_t ? o.t : static_cast<std::size_t>(std::ceil(params.threshold));
  const MixingReport mix = mixing_bound_check(p, sigma, t);
  const double nu = o.has_nu ? o.nu : 0.1;
  const SandwichReport sandwich = sandwich_check(dg, power, nu);

  Report r;
  r.json = Json{{"graph", lg.label}, {"n", dg.order()}, {"power", power},
                {"stationary_uniform", is_stationary(q, sigma)}, {"mixing", mixing_report_json(mix)},
                {"nu", nu}, {"sandwich", sandwich_json(sandwich)}};
  r.table.header = {"graph", "n", "power", "t", "alpha", "beta", "threshold", "bound",
                    "max_relative_deviation", "mixing_holds", "sandwich_lower", "sandwich_upper",
                    "sandwich_holds"};
  r.table.rows.push_back({lg.label, str(dg.order()), str(power), str(t),
                          to_fraction(params.alpha), to_fraction(params.beta),
                          flt(params.threshold), flt(mix.bound), flt(mix.max_relative_deviation),
                          mix.holds ? "true" : "false", to_fraction(sandwich.lower),
                          to_fraction(sandwich.upper), sandwich.holds ? "true" : "false"});

  if (o.has_ell) {
    // every u != v is joined by at least (nu n)^(ell-1) walks of length ell
    const ExactProb bound = pow_exact(exact_from_decimal(nu) * static_cast<unsigned long>(dg.order()),
                                      o.ell == 0 ? 0 : o.ell - 1);
    std::optional<BigCount> least;
    for (Vertex u = 0; u < dg.order(); ++u) {
      for (Vertex v = 0; v < dg.order(); ++v) {
        if (u == v) continue;
        const BigCount c = count_walks(dg, u, v, o.ell);
        if (!least || c < *least) least = c;
      }
    }
    r.json["walks"] = Json{{"ell", o.ell},
                           {"min_count", least ? to_decimal(*least) : "0"},
                           {"bound", rational_json(bound)},
                           {"holds", !least || ExactProb(*least) >= bound}};
  }
  return r;
}

Report cmd_expander(const Options& o) {
  const auto lg = load_graph(o);
  require(o.has_nu && o.has_tau, "expander needs --nu and --tau");
  const ExpansionParams params{o.nu, o.tau};
  params.validate();
  const std::size_t limit = cap_or(o, kDefaultExhaustiveLimit);
  ExpansionCertificate cert;
  std::string mode = "exact";
  if (o.bipartite) {
    if (!lg.part) throw Error(ErrorCode::NotBipartite, "no bipartition known for this graph");
    cert = certify_bipartite(lg.graph, *lg.part, params, limit);
    mode = "bipartite";
  } else if (o.trials > 0) {
    cert = refute_sampled(lg.graph, params, o.trials, o.seed);
    mode = "sampled";
  } else {
    cert = certify_exact(lg.graph, params, limit);
  }
  Report r;
  r.json = certificate_json(cert);
  r.json["graph"] = lg.label;
  r.json["n"] = lg.graph.order();
  r.json["mode"] = mode;
  std::string witness;
  if (cert.witness) {
    for (auto v : *cert.witness) witness += (witness.empty() ? "" : " ") + str(v);
  }
  r.table.header = {"graph", "n", "mode", "nu", "tau", "verdict", "witness", "sets_checked"};
  r.table.rows.push_back({lg.label, str(lg.graph.order()), mode, flt(o.nu), flt(o.tau),
                          std::string(to_string(cert.verdict)), witness,
                          std::to_string(cert.sets_checked)});
  return r;
}

Report cmd_suite_multipartite(const Options& o) {
  const std::size_t max_n = cap_or(o, 20);
  require(max_n <= kDefaultDpLimit, "suite sizes are capped at " + str(kDefaultDpLimit));
  Report r;
  r.table.header = {"a", "b", "n", "d", "e_N", "pma", "pma_avoiding", "exact", "exact_float",
                    "lambda", "reference", "abs_diff"};
  Json rows = Json::array();
  for (std::size_t a = 2; a <= max_n; ++a) {
    for (std::size_t b = 1; a * b <= max_n; ++b) {
      if ((a * b) % 2 != 0) continue;
      const Graph g = complete_multipartite(a, b);
      const EdgeSet n_set = *first_perfect_matching(g);
      const AvoidanceRatio av = avoidance_ratio(g, n_set);
      const double x = av.exact.get_d();
      const std::size_t d = *regularity(g);
      r.table.rows.push_back({str(a), str(b), str(a * b), str(d), str(n_set.size()),
                              to_decimal(av.total), to_decimal(av.avoiding), to_fraction(av.exact),
                              flt(x), flt(av.lambda), flt(av.reference),
                              flt(std::fabs(x - av.reference))});
      Json row = avoidance_json(av);
      row["a"] = a;
      row["b"] = b;
      row["n"] = a * b;
      row["d"] = d;
      rows.push_back(row);
    }
  }
  r.json = Json{{"rows", rows}};
  return r;
}

std::vector<std::size_t> parse_sizes(const std::string& text) {
  std::vector<std::size_t> sizes;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      sizes.push_back(std::stoul(item));
    } catch (const std::logic_error&) {
      throw Error(ErrorCode::ParseError, "bad size '" + item + "'");
    }
  }
  require(!sizes.empty(), "--sizes is empty");
  return sizes;
}

Report cmd_suite_tv(const Options& o) {
  const std::string family = o.family.empty() ? "complete" : o.family;
  const auto sizes = parse_sizes(o.sizes.empty() ? "6,8,10,12" : o.sizes);
  const std::size_t max_n = cap_or(o, 20);
  Report r;
  r.table.header = {"graph", "n", "d", "e_N", "lambda", "p0_exact", "p0_float", "tv", "slack",
                    "degenerate", "trend"};
  Json rows = Json::array();
  std::optional<double> previous;
  for (std::size_t size : sizes) {
    Options instance = o;
    instance.family = family;
    if (family == "multipartite") instance.b = size;
    else instance.n = size;
    const auto lg = load_graph(instance);
    check_size(lg.graph, max_n);
    const EdgeSet n_set = choose_n(o, lg.graph);
    const Pmf exact = intersection_pmf(lg.graph, n_set);
    const double lambda = poisson_lambda(lg.graph, n_set);
    const Pmf poisson = poisson_pmf(lambda, default_poisson_cutoff(exact, lambda));
    const TvDistance tv = tv_distance(exact, poisson);
    std::size_t nonzero = 0;
    for (const auto& p : exact.exact) nonzero += p > 0 ? 1 : 0;
    const bool degenerate = nonzero == 1;
    std::string trend;
    if (previous) trend = tv.value < *previous ? "down" : (tv.value > *previous ? "up" : "flat");
    previous = tv.value;
    const std::size_t d = regularity(lg.graph).value_or(0);
    r.table.rows.push_back({lg.label, str(lg.graph.order()), str(d), str(n_set.size()),
                            flt(lambda), to_fraction(exact.exact[0]), flt(exact.probs[0]),
                            flt(tv.value), flt(tv.slack), degenerate ? "true" : "false", trend});
    rows.push_back(Json{{"graph", lg.label}, {"n", lg.graph.order()}, {"d", d},
                        {"e_N", n_set.size()}, {"lambda", lambda}, {"pmf", pmf_json(exact)},
                        {"tv", tv_json(tv)}, {"degenerate", degenerate}, {"trend", trend}});
  }
  r.json = Json{{"family", family}, {"rows", rows}};
  return r;
}

Report cmd_generate(const Options& o, std::string& edge_list) {
  const auto lg = load_graph(o);
  std::ostringstream os;
  write_edge_list(os, lg.graph, lg.part);
  edge_list = os.str();
  Report r;
  r.json = Json{{"graph", lg.label}, {"n", lg.graph.order()}, {"m", lg.graph.size()}};
  return r;
}

void add_graph_options(CLI::App* app, Options& o) {
  app->add_option("--family", o.family, "complete, multipartite, random_regular or file")
      ->check(CLI::IsMember({"complete", "multipartite", "random_regular", "file"}));
  app->add_option("--file", o.file, "edge-list file");
  app->add_option("-a", o.a, "number of parts");
  app->add_option("-b", o.b, "part size");
  app->add_option("-n", o.n, "number of vertices");
  app->add_option("-d", o.d, "degree");
  app->add_option("--seed", o.seed, "random seed")->default_val(0);
  app->add_option("--max-n", o.max_n, "size cap");
  app->add_option("--out", o.out, "write the report to this file");
  app->add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
}

void add_n_options(CLI::App* app, Options& o) {
  app->add_option("--n-edges", o.n_edges, "N as u-v,u-v,... (default: first perfect matching)");
  app->add_flag("--empty-n", o.empty_n, "use N = empty set");
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact perfect-matching statistics, switchings, walks and expansion checks",
               "matchlab"};
  app.require_subcommand(1);
  Options o;

  struct Command {
    CLI::App* app;
    std::function<Report()> run;
    std::string default_format;
  };
  std::vector<Command> commands;
  std::string edge_list;

  auto add = [&](const std::string& name, const std::string& help, std::function<Report()> run,
                 std::string default_format = "json") {
    CLI::App* sub = app.add_subcommand(name, help);
    add_graph_options(sub, o);
    commands.push_back({sub, std::move(run), std::move(default_format)});
    return sub;
  };

  add("count", "number of perfect matchings", [&] { return cmd_count(o); });
  add("enumerate", "list every perfect matching", [&] { return cmd_enumerate(o); });
  add("edge-prob", "exact edge-inclusion probabilities", [&] { return cmd_edge_prob(o); })
      ->add_option("--edge", o.edge, "single edge u-v");
  add_n_options(add("pmf", "exact law of |M ∩ N| against Poisson", [&] { return cmd_pmf(o); }), o);
  add_n_options(add("avoidance", "pma(G - N) / pma(G)", [&] { return cmd_avoidance(o); }), o);
  {
    auto* sub = add("disjoint", "probability that r uniform perfect matchings are edge-disjoint",
                    [&] { return cmd_disjoint(o); });
    sub->add_option("--r", o.r, "number of matchings")->default_val(2);
    sub->add_option("--mode", o.mode, "exact or montecarlo")->default_val("exact");
    sub->add_option("--samples", o.samples, "Monte Carlo samples")->default_val(100000);
  }
  {
    auto* sub = add("switching", "stratum ratio and switching-graph degrees",
                    [&] { return cmd_switching(o); });
    add_n_options(sub, o);
    sub->add_option("--k", o.k, "stratum index (default 1)");
    sub->add_option("--ell", o.ell, "half cycle length (default n/2)");
  }
  {
    auto* sub = add("walks", "random-walk mixing and sandwich bounds on the symmetric digraph",
                    [&] { return cmd_walks(o); });
    sub->add_option("--k", o.k, "matrix power (default: smallest positive power)");
    sub->add_option("--t", o.t, "mixing step (default: ceil of the threshold)");
    sub->add_option("--nu", o.nu, "nu for the sandwich and walk bounds (default 0.1)");
    sub->add_option("--ell", o.ell, "also check walk counts of this length");
  }
  {
    auto* sub = add("expander", "robust expansion certificate", [&] { return cmd_expander(o); });
    sub->add_option("--nu", o.nu, "robustness parameter");
    sub->add_option("--tau", o.tau, "size window parameter");
    sub->add_flag("--bipartite", o.bipartite, "bipartite robust expansion");
    sub->add_option("--trials", o.trials, "random refutation trials instead of a full sweep");
  }
  add("generate", "write the graph as an edge list", [&] { return cmd_generate(o, edge_list); });
  add("suite-multipartite", "avoidance ratios over K_{a x b}",
      [&] { return cmd_suite_multipartite(o); }, "csv");
  {
    auto* sub = add("suite-tv", "TV distance to Poisson across sizes", [&] { return cmd_suite_tv(o); },
                    "csv");
    sub->add_option("--sizes", o.sizes, "comma-separated n (or b for multipartite)");
    add_n_options(sub, o);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitInputError;
  }

  for (const auto& cmd : commands) {
    if (!cmd.app->parsed()) continue;
    auto given = [&](const char* flag) {
      const CLI::Option* opt = cmd.app->get_option_no_throw(flag);
      return opt != nullptr && opt->count() > 0;
    };
    o.has_n_edges = given("--n-edges");
    o.has_edge = given("--edge");
    o.has_ell = given("--ell");
    o.has_k = given("--k");
    o.has_t = given("--t");
    o.has_nu = given("--nu");
    o.has_tau = given("--tau");
    o.has_max_n = given("--max-n");
    if (o.has_nu && o.has_tau && o.nu > o.tau) {
      err << "warning: nu > tau; the walk lower bound assumes nu <= tau\n";
    }
    try {
      const Report report = cmd.run();
      std::ofstream file;
      std::ostream* sink = &out;
      if (!o.out.empty()) {
        file.open(o.out);
        if (!file) throw Error(ErrorCode::InvalidParameter, "cannot open " + o.out);
        sink = &file;
      }
      if (cmd.app->get_name() == "generate") {
        *sink << edge_list;
      } else if ((o.format.empty() ? cmd.default_format : o.format) == "csv") {
        write_csv(*sink, report.table);
      } else {
        *sink << report.json.dump(2) << '\n';
      }
      return kExitOk;
    } catch (const Error& e) {
      err << "error: " << e.what() << '\n';
      return is_size_error(e.code()) ? kExitSizeError : kExitInputError;
    } catch (const std::bad_alloc&) {
      err << "error: out of memory\n";
      return kExitSizeError;
    } catch (const std::exception& e) {
      err << "error: " << e.what() << '\n';
      return kExitInputError;
    }
  }
  return kExitInputError;
}

}  // namespace matchlab
