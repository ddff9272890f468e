// Batch frontend over the cyclelab library: spectra, expander checks and
// extraction, avoidant connection, exact-length paths, adjusters, balanced
// subdivisions, property-P sweeps and a corpus runner.
//
// Exit codes: 0 success (NotFound/Unknown verdicts are data, not errors),
// 2 malformed input or domain error, 3 capacity error.

#include <cmath>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "cyclelab/adjuster.hpp"
#include "cyclelab/connect.hpp"
#include "cyclelab/exact_path.hpp"
#include "cyclelab/expander.hpp"
#include "cyclelab/expansion.hpp"
#include "cyclelab/families.hpp"
#include "cyclelab/graph.hpp"
#include "cyclelab/io.hpp"
#include "cyclelab/spectrum.hpp"
#include "cyclelab/subdivision.hpp"

using nlohmann::json;
using namespace cyclelab;

namespace {

struct CommonOptions {
  std::string input_path;
  std::vector<std::string> family;  // name then numeric parameters
  std::string output_path;
  std::string dot_path;
  std::uint64_t seed = 0;
  double eps1 = 0.5;
  double eps2 = 0.1;
  double k = 2.0;
  int d = 2;
};

void add_common(CLI::App* cmd, CommonOptions& opt, bool needs_graph = true) {
  if (needs_graph) {
    cmd->add_option("--input", opt.input_path, "graph file (edge list or JSON)")
        ->envname("CYCLELAB_INPUT");
    cmd->add_option("--family", opt.family,
                    "named graph family and its numeric parameters, e.g. "
                    "--family complete_bipartite 5 5")
        ->expected(1, 4);
  }
  cmd->add_option("--output", opt.output_path, "write the JSON report here instead of stdout");
  cmd->add_option("--dot", opt.dot_path, "write a DOT rendering with witness overlays");
  cmd->add_option("--seed", opt.seed, "seed for all randomized search")
      ->envname("CYCLELAB_SEED");
}

void add_expansion_params(CLI::App* cmd, CommonOptions& opt) {
  cmd->add_option("--eps1", opt.eps1, "expansion parameter eps1")->envname("CYCLELAB_EPS1");
  cmd->add_option("--eps2", opt.eps2, "expansion parameter eps2")->envname("CYCLELAB_EPS2");
  cmd->add_option("--k", opt.k, "expansion parameter k")->envname("CYCLELAB_K");
  cmd->add_option("--d", opt.d, "degree parameter d")->envname("CYCLELAB_D");
}

Graph family_graph(const std::vector<std::string>& family, std::uint64_t seed) {
  std::vector<double> params;
  for (std::size_t i = 1; i < family.size(); ++i) params.push_back(std::stod(family[i]));
  return make_family(family[0], params, seed);
}

Graph load_graph(const CommonOptions& opt) {
  if (!opt.family.empty()) return family_graph(opt.family, opt.seed);
  if (!opt.input_path.empty()) return load_graph_file(opt.input_path);
  throw DomainError("no graph given: use --input or --family");
}

void emit(const CommonOptions& opt, const json& doc) {
  std::string text = doc.dump(2);
  if (opt.output_path.empty()) {
    std::cout << text << "\n";
  } else {
    std::ofstream out(opt.output_path);
    if (!out) throw DomainError("cannot write output file: " + opt.output_path);
    out << text << "\n";
  }
}

void emit_dot(const CommonOptions& opt, const Graph& g,
              std::span<const DotOverlay> overlays = {},
              std::span<const Path> paths = {}) {
  if (opt.dot_path.empty()) return;
  std::ofstream out(opt.dot_path);
  if (!out) throw DomainError("cannot write DOT file: " + opt.dot_path);
  out << graph_to_dot(g, overlays, paths);
}

json vertices_json(const Graph& g, const VertexSet& s) {
  json arr = json::array();
  for (int v : s) arr.push_back(g.label(v));
  return arr;
}

json path_json(const Graph& g, const Path& p) {
  json arr = json::array();
  for (int v : p.vertices) arr.push_back(g.label(v));
  return arr;
}

VertexSet parse_vertex_list(const Graph& g, const std::string& text) {
  VertexSet out;
  std::stringstream stream(text);
  std::string token;
  while (std::getline(stream, token, ',')) {
    if (token.empty()) continue;
    out.push_back(g.id_of_label(std::stoi(token)));
  }
  return as_vertex_set(std::move(out));
}

json graph_summary(const Graph& g) {
  auto deg = degrees(g);
  return json{{"n", g.order()},
              {"edges", g.edge_count()},
              {"min_degree", deg.min},
              {"avg_degree", deg.avg.str()},
              {"max_degree", deg.max}};
}

// -- spectrum ------------------------------------------------------------

struct SpectrumOptions {
  CommonOptions common;
  bool exact = false;
  std::uint64_t budget = 0;
  int dp_cap = 24;
  int cc_cap = 16;
  std::string residue;   // "a,b"
  std::string sequence;  // pow2 | arith:a,d | geom:first,c | list:v1,v2,...
  bool witnesses = false;
};

SequenceSpec parse_sequence(const std::string& text) {
  if (text == "pow2") return SequenceSpec::powers_of_two_spec();
  auto colon = text.find(':');
  std::string kind = text.substr(0, colon);
  std::vector<long long> nums;
  if (colon != std::string::npos) {
    std::stringstream stream(text.substr(colon + 1));
    std::string token;
    while (std::getline(stream, token, ',')) nums.push_back(std::stoll(token));
  }
  if (kind == "arith" && nums.size() == 2) {
    return SequenceSpec::arithmetic_spec(nums[0], nums[1]);
  }
  if (kind == "geom" && nums.size() == 2) {
    return SequenceSpec::geometric_spec(nums[0], static_cast<double>(nums[1]));
  }
  if (kind == "list" && !nums.empty()) return SequenceSpec::explicit_spec(nums);
  throw DomainError("bad --sequence; use pow2 | arith:a,d | geom:first,c | list:v1,v2,...");
}

json spectrum_report(const Graph& g, const SpectrumOptions& opt) {
  CycleSpectrum s;
  if (opt.exact || opt.budget == 0) {
    s = cycle_spectrum_exact(g, opt.dp_cap, true);
  } else {
    s = cycle_spectrum_lower(g, opt.budget, opt.common.seed, opt.cc_cap);
  }
  json doc;
  doc["command"] = "spectrum";
  doc["graph"] = graph_summary(g);
  doc["seed"] = opt.common.seed;
  doc["method"] = s.method;
  doc["exact"] = s.exact;
  doc["lengths"] = s.lengths;
  doc["harmonic_sum"] = harmonic_sum(s.lengths);

  auto even = even_interval_report(s, degrees(g).avg.to_double());
  doc["even_interval"] = {{"best_ell", even.best_ell},
                          {"holds", even.holds},
                          {"missing_evens", even.missing},
                          {"degenerate_regime", even.degenerate_regime},
                          {"one_sided", even.one_sided}};
  if (even.degree_guarantee) {
    doc["even_interval"]["avg_degree_guarantee"] = *even.degree_guarantee;
    doc["even_interval"]["avg_degree_guarantee_vacuous"] = even.degree_guarantee_vacuous;
  }
  auto odd = odd_interval_report(s);
  doc["odd_runs"] =
      odd.empty ? json{{"empty", true}}
                : json{{"empty", false}, {"ell", odd.ell}, {"ratio", odd.ratio}};

  if (!opt.residue.empty()) {
    auto comma = opt.residue.find(',');
    if (comma == std::string::npos) throw DomainError("--residue expects a,b");
    int a = std::stoi(opt.residue.substr(0, comma));
    int b = std::stoi(opt.residue.substr(comma + 1));
    doc["residue"] = {{"a", a}, {"b", b}, {"lengths", residue_spectrum(s, a, b)}};
  }
  if (!opt.sequence.empty()) {
    auto spec = parse_sequence(opt.sequence);
    auto hit = hits_sequence(s, spec);
    json h;
    h["sequence"] = opt.sequence;
    if (hit.first_hit) {
      h["first_hit"] = *hit.first_hit;
    } else {
      h["first_hit"] = nullptr;
      h["miss_is_proved"] = !hit.exactness_caveat;
    }
    h["growth"] = {{"within_exp_tenth_root", hit.growth.within_exp_tenth_root},
                   {"witnessed_ratio_bound", hit.growth.witnessed_ratio_bound}};
    doc["sequence_hits"] = h;
  }
  if (opt.witnesses) {
    json w = json::object();
    for (const auto& [len, cyc] : s.witnesses) {
      w[std::to_string(len)] = vertices_json(g, cyc.vertices);
    }
    doc["witnesses"] = w;
  }
  if (!opt.common.dot_path.empty() && !s.witnesses.empty()) {
    const auto& longest = s.witnesses.rbegin()->second;
    Path closed{longest.vertices};
    closed.vertices.push_back(longest.vertices.front());
    std::vector<Path> marked{closed};
    emit_dot(opt.common, g, {}, marked);
  } else {
    emit_dot(opt.common, g);
  }
  return doc;
}

// -- expander ------------------------------------------------------------

struct ExpanderCheckOptions {
  CommonOptions common;
  std::string mode = "exhaustive";
  std::uint64_t budget = 10000;
  int cap = 24;
  int threads = 2;
  bool use_eps2d = false;
};

json expander_check_report(const Graph& g, const ExpanderCheckOptions& opt) {
  ExpansionParams params = opt.use_eps2d
                               ? ExpansionParams::bipartite_form(opt.common.eps1,
                                                                 opt.common.eps2, opt.common.d)
                               : ExpansionParams(opt.common.eps1, opt.common.k);
  CheckSettings settings;
  settings.mode = opt.mode == "sampled" ? CheckSettings::Mode::sampled
                                        : CheckSettings::Mode::exhaustive;
  settings.budget = opt.budget;
  settings.seed = opt.common.seed;
  settings.exhaustive_cap = opt.cap;
  settings.threads = opt.threads;

  auto verdict = check_expander(g, params, settings);
  json doc;
  doc["command"] = "expander-check";
  doc["graph"] = graph_summary(g);
  doc["mode"] = opt.mode;
  doc["seed"] = opt.common.seed;
  doc["params"] = {{"eps1", params.eps1}, {"k", params.k}};
  if (params.eps2) doc["params"]["eps2"] = *params.eps2;
  if (params.d) doc["params"]["d"] = *params.d;
  doc["regime_flags"] = {
      {"n_within_exhaustive_cap", g.order() <= opt.cap},
      {"k_at_most_n", params.k <= g.order()},
  };
  if (std::holds_alternative<ExpanderCertificate>(verdict)) {
    const auto& cert = std::get<ExpanderCertificate>(verdict);
    doc["verdict"] = "expander";
    doc["subsets_checked"] = cert.subsets_checked;
    emit_dot(opt.common, g);
  } else {
    const auto& w = std::get<NonExpansionWitness>(verdict);
    doc["verdict"] = "witness";
    doc["witness"] = {{"X", vertices_json(g, w.x)},
                      {"boundary", w.boundary},
                      {"required", w.required},
                      {"revalidates", revalidate_witness(g, params, w)}};
    std::vector<DotOverlay> overlays{{"witness X", "red", w.x}};
    emit_dot(opt.common, g, overlays);
  }
  return doc;
}

struct ExtractOptions {
  CommonOptions common;
  std::string what = "expander";
  std::uint64_t budget = 10000;
  int cap = 24;
  std::string save_graph;
};

json extract_report(const Graph& g, const ExtractOptions& opt) {
  json doc;
  doc["command"] = "extract";
  doc["what"] = opt.what;
  doc["graph"] = graph_summary(g);
  doc["seed"] = opt.common.seed;

  CheckSettings settings;
  settings.budget = opt.budget;
  settings.seed = opt.common.seed;
  settings.exhaustive_cap = opt.cap;

  Graph result;
  if (opt.what == "bipartite") {
    result = extract_bipartite(g, opt.common.seed);
    doc["cross_edge_count"] = result.edge_count();
  } else if (opt.what == "expander") {
    auto res = extract_expander(g, ExpansionParams(opt.common.eps1, opt.common.k), settings);
    result = res.subgraph;
    doc["certificate_mode"] =
        res.certificate_mode == ExpanderCertificate::Mode::exhaustive ? "exhaustive" : "sampled";
    doc["repair_steps"] = res.repair_steps;
    doc["residual_witness"] = res.residual_witness.has_value();
  } else if (opt.what == "bipartite-expander") {
    auto res = extract_bipartite_expander(g, opt.common.eps1, opt.common.eps2, opt.common.d,
                                          settings);
    result = res.subgraph;
    doc["certificate_mode"] =
        res.certificate_mode == ExpanderCertificate::Mode::exhaustive ? "exhaustive" : "sampled";
    doc["repair_steps"] = res.repair_steps;
    doc["residual_witness"] = res.residual_witness.has_value();
  } else {
    throw DomainError("--what must be expander | bipartite | bipartite-expander");
  }
  doc["subgraph"] = graph_summary(result);
  doc["subgraph"]["vertices"] = result.labels();
  if (!opt.save_graph.empty()) {
    std::ofstream out(opt.save_graph);
    if (!out) throw DomainError("cannot write graph file: " + opt.save_graph);
    out << graph_to_json(result) << "\n";
  }
  emit_dot(opt.common, g);
  return doc;
}

// -- connect -------------------------------------------------------------

struct ConnectOptions {
  CommonOptions common;
  std::string op = "path";
  std::string from, to, avoid, contact, xs, ys, zs;
  int depth = 8;
  int target = 0;
};

json connect_report(const Graph& g, const ConnectOptions& opt) {
  json doc;
  doc["command"] = "connect";
  doc["op"] = opt.op;
  doc["graph"] = graph_summary(g);

  if (opt.op == "path") {
    VertexSet a = parse_vertex_list(g, opt.from);
    VertexSet b = parse_vertex_list(g, opt.to);
    VertexSet w = parse_vertex_list(g, opt.avoid);
    auto p = connect_avoiding(g, a, b, w);
    if (p) {
      doc["found"] = true;
      doc["path"] = path_json(g, *p);
      doc["length"] = p->length();
      double bound = (40.0 / opt.common.eps1) *
                     std::pow(std::log(std::max(3, g.order())), 3);
      doc["within_connect_bound"] = p->length() <= bound;
      doc["connect_bound"] = bound;
      std::vector<Path> marked{*p};
      std::vector<DotOverlay> overlays{{"A", "lightblue", a}, {"B", "lightgreen", b},
                                       {"W", "gray", w}};
      emit_dot(opt.common, g, overlays, marked);
    } else {
      doc["found"] = false;
      doc["verdict"] = "no_path";
    }
  } else if (opt.op == "profile") {
    VertexSet a = parse_vertex_list(g, opt.from);
    VertexSet z = parse_vertex_list(g, opt.contact);
    auto prof = contact_profile(g, a, z, opt.depth);
    doc["per_level"] = prof.per_level;
    doc["minimal_k"] = prof.minimal_k;
  } else if (opt.op == "grow") {
    VertexSet a = parse_vertex_list(g, opt.from);
    GrowthHypotheses hyp{ExpansionParams(opt.common.eps1, opt.common.k),
                         std::max(1, static_cast<int>(opt.common.k))};
    auto trace = grow_avoiding(g, a, parse_vertex_list(g, opt.xs),
                               parse_vertex_list(g, opt.ys), parse_vertex_list(g, opt.zs),
                               opt.depth, hyp);
    doc["levels"] = trace.levels;
    doc["halted_at"] = trace.halted_at;
    doc["reason"] = trace.reason == GrowthTrace::Reason::reached_half_n ? "reached_half_n"
                    : trace.reason == GrowthTrace::Reason::stalled      ? "stalled"
                                                                        : "depth_exhausted";
    if (trace.diagnostics) {
      const auto& di = *trace.diagnostics;
      doc["diagnostics"] = {{"m", di.m},
                            {"ell0", di.ell0},
                            {"hyp_x_small", di.hyp_x_small},
                            {"hyp_y_far_and_bounded", di.hyp_y_far_and_bounded},
                            {"hyp_z_limited", di.hyp_z_limited},
                            {"concl_ball_ell0", di.concl_ball_ell0},
                            {"concl_half_n", di.concl_half_n}};
    }
  } else if (opt.op == "core") {
    VertexSet w = parse_vertex_list(g, opt.avoid);
    CoreSettings cs;
    if (opt.target > 0) cs.target = opt.target;
    cs.params = ExpansionParams(opt.common.eps1, opt.common.k);
    auto core = low_diameter_core(g, w, cs);
    if (core) {
      doc["found"] = true;
      doc["center"] = g.label(core->center);
      doc["radius"] = core->radius;
      doc["size"] = core->members.size();
      doc["members"] = vertices_json(g, core->members);
      double two_m = (100.0 / opt.common.eps1) *
                     std::pow(std::log(std::max(3, g.order())), 3);
      doc["within_2m_bound"] = core->radius <= two_m;
    } else {
      doc["found"] = false;
      doc["verdict"] = "not_found";
    }
  } else {
    throw DomainError("--op must be path | profile | grow | core");
  }
  return doc;
}

// -- exact-path ----------------------------------------------------------

struct ExactPathOptions {
  CommonOptions common;
  int from = 0;
  int to = 1;
  int length = 1;
  std::string avoid;
  std::string avoid_file;
  std::string backend = "both";
  int adj_d = 2;
  std::uint64_t oracle_budget = 50'000'000;
};

json exact_path_report(const Graph& g, const ExactPathOptions& opt) {
  VertexSet avoid = parse_vertex_list(g, opt.avoid);
  if (!opt.avoid_file.empty()) {
    std::ifstream in(opt.avoid_file);
    if (!in) throw DomainError("cannot open avoid file: " + opt.avoid_file);
    int label;
    while (in >> label) avoid.push_back(g.id_of_label(label));
    avoid = as_vertex_set(std::move(avoid));
  }
  int x = g.id_of_label(opt.from);
  int y = g.id_of_label(opt.to);

  json doc;
  doc["command"] = "exact-path";
  doc["graph"] = graph_summary(g);
  doc["from"] = opt.from;
  doc["to"] = opt.to;
  doc["length"] = opt.length;
  doc["backend"] = opt.backend;
  doc["seed"] = opt.common.seed;

  std::optional<Path> constructive;
  std::optional<OracleResult> oracle;
  if (opt.backend == "constructive" || opt.backend == "both") {
    ExactPathSettings settings;
    settings.adjuster.d = opt.adj_d;
    VertexExpansion f1{x, {x}, 1};
    VertexExpansion f2{y, {y}, 1};
    constructive = exact_length_path(g, avoid, f1, f2, opt.length, settings);
    json c;
    c["found"] = constructive.has_value();
    if (constructive) {
      c["path"] = path_json(g, *constructive);
      c["revalidates"] =
          validate_path(g, *constructive) && constructive->length() == opt.length;
    }
    doc["constructive"] = c;
  }
  if (opt.backend == "oracle" || opt.backend == "both") {
    oracle = exact_length_path_oracle(g, x, y, opt.length, avoid, opt.oracle_budget);
    json o;
    o["status"] = oracle->status == OracleStatus::found              ? "found"
                  : oracle->status == OracleStatus::not_found_proved ? "not_found_proved"
                                                                     : "unknown";
    o["nodes_visited"] = oracle->nodes_visited;
    if (oracle->path) o["path"] = path_json(g, *oracle->path);
    doc["oracle"] = o;
  }
  if (opt.backend == "both") {
    // a constructive success against a proved oracle absence would be the
    // one forbidden disagreement
    doc["agreement"] =
        !(constructive.has_value() && oracle->status == OracleStatus::not_found_proved);
  }
  if (constructive) {
    std::vector<Path> marked{*constructive};
    emit_dot(opt.common, g, {}, marked);
  } else if (oracle && oracle->path) {
    std::vector<Path> marked{*oracle->path};
    emit_dot(opt.common, g, {}, marked);
  }
  return doc;
}

// -- adjuster ------------------------------------------------------------

struct AdjusterOptions {
  CommonOptions common;
  std::string op = "find";
  int x1 = -1;
  int x2 = -1;
  std::string avoid;
  int r = 1;
  int adj_d = 2;
};

json adjuster_json(const Graph& g, const Adjuster& adj) {
  return json{{"v1", g.label(adj.v1())},
              {"v2", g.label(adj.v2())},
              {"f1", vertices_json(g, adj.f1.members)},
              {"f2", vertices_json(g, adj.f2.members)},
              {"core", vertices_json(g, adj.core)},
              {"capacity", adj.capacity},
              {"base_length", adj.base_length},
              {"d", adj.declared_d},
              {"m", adj.declared_m}};
}

json adjuster_report(const Graph& g, const AdjusterOptions& opt) {
  json doc;
  doc["command"] = "adjuster";
  doc["op"] = opt.op;
  doc["graph"] = graph_summary(g);
  doc["seed"] = opt.common.seed;
  VertexSet avoid = parse_vertex_list(g, opt.avoid);
  AdjusterSearchSettings settings;
  settings.d = opt.adj_d;

  std::optional<Adjuster> adj;
  if (opt.op == "build") {
    auto cycle = shortest_cycle(g, avoid);
    if (!cycle) {
      doc["found"] = false;
      doc["verdict"] = "acyclic";
      return doc;
    }
    if (opt.x1 < 0 || opt.x2 < 0) throw DomainError("build needs --x1 and --x2");
    adj = build_simple_adjuster(g, *cycle, g.id_of_label(opt.x1), g.id_of_label(opt.x2),
                                settings, avoid);
  } else if (opt.op == "find") {
    adj = find_adjuster_avoiding(g, avoid, settings);
  } else if (opt.op == "chain") {
    auto chained = chain_adjusters(g, avoid, opt.r, settings);
    doc["achieved_capacity"] = chained.achieved_capacity;
    if (!chained.failure.empty()) doc["failure_point"] = chained.failure;
    adj = chained.adjuster ? chained.adjuster : chained.partial;
  } else {
    throw DomainError("--op must be build | find | chain");
  }

  doc["regime_flags"] = {
      {"avoid_within_10D",
       static_cast<long long>(avoid.size()) <= 10LL * std::max(1, opt.adj_d)}};
  doc["found"] = adj.has_value();
  if (!adj) {
    doc["verdict"] = "not_found";
    return doc;
  }
  doc["adjuster"] = adjuster_json(g, *adj);
  auto report = validate_adjuster(g, *adj);
  doc["validation"] = {{"ok", report.ok()},
                       {"a1_disjoint", report.a1_disjoint},
                       {"a2_expansions", report.a2_expansions},
                       {"a3_core_size", report.a3_core_size},
                       {"a4_ladder", report.a4_ladder},
                       {"base_minimal", report.base_minimal},
                       {"exhaustive", report.exhaustive},
                       {"failures", report.failures}};
  std::vector<DotOverlay> overlays{{"F1", "lightgreen", adj->f1.members},
                                   {"F2", "lightblue", adj->f2.members},
                                   {"core A", "salmon", adj->core}};
  emit_dot(opt.common, g, overlays);
  return doc;
}

// -- tk ------------------------------------------------------------------

struct TkOptions {
  CommonOptions common;
  std::string mode = "search";
  int k = 3;
  int ell_min = 1;
  int ell_max = 4;
  int ell = 2;
  double alpha = 1.1;
  std::uint64_t budget = 50'000'000;
};

json subdivision_json(const Graph& g, const BalancedSubdivision& s) {
  json paths = json::array();
  for (const auto& bp : s.paths) {
    paths.push_back(
        {{"a", g.label(bp.a)}, {"b", g.label(bp.b)}, {"path", path_json(g, bp.path)}});
  }
  return json{{"k", s.k},
              {"ell", s.ell},
              {"branch_vertices", vertices_json(g, s.branch_vertices)},
              {"paths", paths}};
}

json tk_report(const Graph& g, const TkOptions& opt) {
  json doc;
  doc["command"] = "tk";
  doc["mode"] = opt.mode;
  doc["graph"] = graph_summary(g);
  doc["k"] = opt.k;
  doc["seed"] = opt.common.seed;

  std::optional<BalancedSubdivision> sub;
  if (opt.mode == "search") {
    auto res = find_balanced_subdivision(g, opt.k, opt.ell_min, opt.ell_max, opt.budget);
    doc["status"] = res.status == SearchStatus::found              ? "found"
                    : res.status == SearchStatus::not_found_proved ? "not_found_proved"
                                                                   : "unknown";
    doc["nodes"] = res.nodes;
    sub = res.subdivision;
  } else if (opt.mode == "construct") {
    ConstructSettings settings;
    settings.alpha = opt.alpha;
    auto res = construct_balanced_subdivision_expander(g, opt.k, opt.ell, settings);
    doc["status"] = res.subdivision ? "found" : "not_found";
    if (res.failed_pair) {
      doc["failed_pair"] = {g.label(res.failed_pair->first), g.label(res.failed_pair->second)};
    }
    sub = res.subdivision;
  } else {
    throw DomainError("--mode must be search | construct");
  }
  if (sub) {
    doc["subdivision"] = subdivision_json(g, *sub);
    auto report = validate_subdivision(g, *sub);
    doc["validation"] = {{"ok", report.ok}, {"violations", report.violations}};
    std::vector<Path> marked;
    for (const auto& bp : sub->paths) marked.push_back(bp.path);
    std::vector<DotOverlay> overlays{{"branch", "gold", sub->branch_vertices}};
    emit_dot(opt.common, g, overlays, marked);
  }
  return doc;
}

// -- property-p ----------------------------------------------------------

struct PropertyPOptions {
  CommonOptions common;
  int ell = 1;
  int upper = 3;
  int cap = 12;
};

json property_p_report(const Graph& g, const PropertyPOptions& opt) {
  auto report = property_p_check(g, opt.ell, opt.upper, opt.cap);
  json doc;
  doc["command"] = "property-p";
  doc["graph"] = graph_summary(g);
  doc["ell"] = opt.ell;
  doc["upper"] = opt.upper;
  doc["holds"] = report.holds;
  doc["pairs_checked"] = report.pairs_checked;
  if (report.counterexample) {
    auto [u, v, t] = *report.counterexample;
    doc["counterexample"] = {{"u", g.label(u)}, {"v", g.label(v)}, {"t", t}};
  }
  return doc;
}

// -- sweep ---------------------------------------------------------------

struct SweepOptions {
  CommonOptions common;
  std::string families;  // semicolon-separated name:digits,digits
  std::string commands = "spectrum,expander-check";
  int workers = 2;
};

std::vector<std::pair<std::string, Graph>> sweep_corpus(const SweepOptions& opt) {
  std::vector<std::pair<std::string, Graph>> corpus;
  std::stringstream stream(opt.families);
  std::string item;
  Rng master(opt.common.seed);
  while (std::getline(stream, item, ';')) {
    if (item.empty()) continue;
    auto colon = item.find(':');
    std::string name = item.substr(0, colon);
    std::vector<double> params;
    if (colon != std::string::npos) {
      std::stringstream ps(item.substr(colon + 1));
      std::string tok;
      while (std::getline(ps, tok, ',')) params.push_back(std::stod(tok));
    }
    corpus.emplace_back(item, make_family(name, params, master.next_u64()));
  }
  if (corpus.empty()) throw DomainError("sweep needs --families");
  return corpus;
}

std::string sweep_cell(const std::string& command, const Graph& g, const CommonOptions& common,
                       std::uint64_t cell_seed) {
  std::ostringstream out;
  try {
    if (command == "spectrum") {
      if (g.order() <= 24) {
        auto s = cycle_spectrum_exact(g, 24, false);
        out << "exact lengths=" << s.lengths.size() << " harmonic=" << harmonic_sum(s.lengths);
      } else {
        auto s = cycle_spectrum_lower(g, 64, cell_seed, 12);
        out << "lower lengths=" << s.lengths.size() << " harmonic=" << harmonic_sum(s.lengths);
      }
    } else if (command == "expander-check") {
      ExpansionParams params(common.eps1, common.k);
      CheckSettings settings;
      settings.mode =
          g.order() <= 24 ? CheckSettings::Mode::exhaustive : CheckSettings::Mode::sampled;
      settings.seed = cell_seed;
      settings.budget = 2000;
      auto verdict = check_expander(g, params, settings);
      out << (std::holds_alternative<ExpanderCertificate>(verdict) ? "expander" : "witness");
    } else if (command == "extract") {
      CheckSettings settings;
      settings.mode = CheckSettings::Mode::sampled;
      settings.budget = 500;
      settings.seed = cell_seed;
      settings.threads = 1;
      auto res = extract_expander(g, ExpansionParams(common.eps1, common.k), settings);
      out << "n'=" << res.subgraph.order() << " d'=" << degrees(res.subgraph).avg.str();
    } else if (command == "girth") {
      out << "girth=" << girth_or_zero(g);
    } else {
      out << "unknown-command";
    }
  } catch (const CapacityError& e) {
    out << "capacity: " << e.what();
  }
  return out.str();
}

int run_sweep(const SweepOptions& opt) {
  auto corpus = sweep_corpus(opt);
  std::vector<std::string> commands;
  std::stringstream cs(opt.commands);
  std::string tok;
  while (std::getline(cs, tok, ',')) {
    if (!tok.empty()) commands.push_back(tok);
  }
  if (commands.empty()) throw DomainError("sweep needs --commands");

  struct Cell {
    std::size_t index;
    std::string family;
    std::string command;
    const Graph* graph;
  };
  std::vector<Cell> cells;
  for (const auto& [name, g] : corpus) {
    for (const auto& c : commands) {
      cells.push_back({cells.size(), name, c, &g});
    }
  }
  std::vector<std::string> results(cells.size());
  std::mutex next_mutex;
  std::size_t next = 0;
  Rng master(opt.common.seed);
  std::vector<std::uint64_t> cell_seeds;
  for (std::size_t i = 0; i < cells.size(); ++i) cell_seeds.push_back(master.fork(i).next_u64());

  auto worker = [&]() {
    while (true) {
      std::size_t mine;
      {
        std::lock_guard<std::mutex> lock(next_mutex);
        if (next >= cells.size()) return;
        mine = next++;
      }
      const auto& cell = cells[mine];
      results[mine] = sweep_cell(cell.command, *cell.graph, opt.common, cell_seeds[mine]);
    }
  };
  std::vector<std::thread> pool;
  int workers = std::max(1, opt.workers);
  for (int i = 0; i < workers; ++i) pool.emplace_back(worker);
  for (auto& t : pool) t.join();

  std::ostream* out = &std::cout;
  std::ofstream file;
  if (!opt.common.output_path.empty()) {
    file.open(opt.common.output_path);
    if (!file) throw DomainError("cannot write output file: " + opt.common.output_path);
    out = &file;
  }
  *out << "family,command,n,edges,seed,result\n";
  for (const auto& cell : cells) {
    *out << "\"" << cell.family << "\"," << cell.command << "," << cell.graph->order() << ","
         << cell.graph->edge_count() << "," << cell_seeds[cell.index] << ",\""
         << results[cell.index] << "\"\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"graph toolkit: sublinear expanders, cycle spectra, adjusters, "
               "exact-length paths and balanced subdivisions"};
  app.set_config("--config", "", "key=value config file; subcommand flags go in a [subcommand] section");
  app.require_subcommand(1);

  SpectrumOptions spectrum_opt;
  auto* spectrum_cmd = app.add_subcommand("spectrum", "cycle-length spectrum and reports");
  add_common(spectrum_cmd, spectrum_opt.common);
  spectrum_cmd->add_flag("--exact", spectrum_opt.exact, "force the exact subset-DP method");
  spectrum_cmd->add_option("--budget", spectrum_opt.budget,
                           "sampled lower-bound budget (0 = exact)");
  spectrum_cmd->add_option("--dp-cap", spectrum_opt.dp_cap, "exact method size cap");
  spectrum_cmd->add_option("--cc-cap", spectrum_opt.cc_cap, "color-coding length cap");
  spectrum_cmd->add_option("--residue", spectrum_opt.residue, "report lengths = a mod b");
  spectrum_cmd->add_option("--sequence", spectrum_opt.sequence,
                           "pow2 | arith:a,d | geom:first,c | list:v1,v2,...");
  spectrum_cmd->add_flag("--witnesses", spectrum_opt.witnesses, "include witness cycles");

  ExpanderCheckOptions check_opt;
  auto* check_cmd =
      app.add_subcommand("expander-check", "certify or refute the expansion predicate");
  add_common(check_cmd, check_opt.common);
  add_expansion_params(check_cmd, check_opt.common);
  check_cmd->add_option("--mode", check_opt.mode, "exhaustive | sampled");
  check_cmd->add_option("--budget", check_opt.budget, "sampled candidate sets");
  check_cmd->add_option("--cap", check_opt.cap, "exhaustive size cap");
  check_cmd->add_option("--threads", check_opt.threads, "threads for the exhaustive scan");
  check_cmd->add_flag("--eps2d", check_opt.use_eps2d, "interpret (eps1, eps2*d) parameters");

  ExtractOptions extract_opt;
  auto* extract_cmd = app.add_subcommand("extract", "expander / bipartite subgraph extraction");
  add_common(extract_cmd, extract_opt.common);
  add_expansion_params(extract_cmd, extract_opt.common);
  extract_cmd->add_option("--what", extract_opt.what,
                          "expander | bipartite | bipartite-expander");
  extract_cmd->add_option("--budget", extract_opt.budget, "sampled check budget");
  extract_cmd->add_option("--cap", extract_opt.cap, "exhaustive check cap");
  extract_cmd->add_option("--save-graph", extract_opt.save_graph,
                          "write the extracted subgraph as JSON");

  ConnectOptions connect_opt;
  auto* connect_cmd = app.add_subcommand("connect", "avoidant connection and ball growth");
  add_common(connect_cmd, connect_opt.common);
  add_expansion_params(connect_cmd, connect_opt.common);
  connect_cmd->add_option("--op", connect_opt.op, "path | profile | grow | core");
  connect_cmd->add_option("--from", connect_opt.from, "comma-separated vertex set A");
  connect_cmd->add_option("--to", connect_opt.to, "comma-separated vertex set B");
  connect_cmd->add_option("--avoid", connect_opt.avoid, "comma-separated removed set W");
  connect_cmd->add_option("--contact", connect_opt.contact, "contact set Z for profiles");
  connect_cmd->add_option("--x", connect_opt.xs, "role set X for grow");
  connect_cmd->add_option("--y", connect_opt.ys, "role set Y for grow");
  connect_cmd->add_option("--z", connect_opt.zs, "role set Z for grow");
  connect_cmd->add_option("--depth", connect_opt.depth, "depth for profile/grow");
  connect_cmd->add_option("--target", connect_opt.target, "core target size");

  ExactPathOptions exact_opt;
  auto* exact_cmd = app.add_subcommand("exact-path", "path of exactly the requested length");
  add_common(exact_cmd, exact_opt.common);
  exact_cmd->add_option("--from", exact_opt.from, "start vertex")->required();
  exact_cmd->add_option("--to", exact_opt.to, "end vertex")->required();
  exact_cmd->add_option("--length", exact_opt.length, "exact length")->required();
  exact_cmd->add_option("--avoid", exact_opt.avoid, "comma-separated avoided vertices");
  exact_cmd->add_option("--avoid-file", exact_opt.avoid_file, "file of avoided vertex ids");
  exact_cmd->add_option("--backend", exact_opt.backend, "constructive | oracle | both");
  exact_cmd->add_option("--adj-d", exact_opt.adj_d, "adjuster end size D");
  exact_cmd->add_option("--oracle-budget", exact_opt.oracle_budget, "oracle node budget");

  AdjusterOptions adjuster_opt;
  auto* adjuster_cmd = app.add_subcommand("adjuster", "build, find or chain adjusters");
  add_common(adjuster_cmd, adjuster_opt.common);
  adjuster_cmd->add_option("--op", adjuster_opt.op, "build | find | chain");
  adjuster_cmd->add_option("--x1", adjuster_opt.x1, "first anchor (build)");
  adjuster_cmd->add_option("--x2", adjuster_opt.x2, "second anchor (build)");
  adjuster_cmd->add_option("--avoid", adjuster_opt.avoid, "comma-separated avoided vertices");
  adjuster_cmd->add_option("--r", adjuster_opt.r, "target capacity (chain)");
  adjuster_cmd->add_option("--adj-d", adjuster_opt.adj_d, "end size D");

  TkOptions tk_opt;
  auto* tk_cmd = app.add_subcommand("tk", "balanced clique subdivisions");
  add_common(tk_cmd, tk_opt.common);
  tk_cmd->add_option("--mode", tk_opt.mode, "search | construct");
  tk_cmd->add_option("--k", tk_opt.k, "branch vertex count");
  tk_cmd->add_option("--ell-min", tk_opt.ell_min, "search: smallest per-edge length");
  tk_cmd->add_option("--ell-max", tk_opt.ell_max, "search: largest per-edge length");
  tk_cmd->add_option("--ell", tk_opt.ell, "construct: per-edge length");
  tk_cmd->add_option("--alpha", tk_opt.alpha, "construct: reservation factor");
  tk_cmd->add_option("--budget", tk_opt.budget, "search node budget");

  PropertyPOptions prop_opt;
  auto* prop_cmd = app.add_subcommand("property-p", "exhaustive path-length property check");
  add_common(prop_cmd, prop_opt.common);
  prop_cmd->add_option("--ell", prop_opt.ell, "interval lower end");
  prop_cmd->add_option("--upper", prop_opt.upper, "interval upper end");
  prop_cmd->add_option("--cap", prop_opt.cap, "host size cap");

  SweepOptions sweep_opt;
  auto* sweep_cmd = app.add_subcommand("sweep", "corpus x command matrix, CSV output");
  add_common(sweep_cmd, sweep_opt.common, false);
  add_expansion_params(sweep_cmd, sweep_opt.common);
  sweep_cmd->add_option("--families", sweep_opt.families,
                        "semicolon-separated families, e.g. petersen;cycle:12;random_gnp:20,0.3");
  sweep_cmd->add_option("--commands", sweep_opt.commands,
                        "comma-separated: spectrum,expander-check,extract,girth");
  sweep_cmd->add_option("--workers", sweep_opt.workers, "concurrent cells");

  CommonOptions generate_opt;
  auto* generate_cmd = app.add_subcommand("generate", "emit a named graph as JSON");
  add_common(generate_cmd, generate_opt);

  try {
    app.parse(argc, argv);

    if (spectrum_cmd->parsed()) {
      Graph g = load_graph(spectrum_opt.common);
      emit(spectrum_opt.common, spectrum_report(g, spectrum_opt));
    } else if (check_cmd->parsed()) {
      Graph g = load_graph(check_opt.common);
      emit(check_opt.common, expander_check_report(g, check_opt));
    } else if (extract_cmd->parsed()) {
      Graph g = load_graph(extract_opt.common);
      emit(extract_opt.common, extract_report(g, extract_opt));
    } else if (connect_cmd->parsed()) {
      Graph g = load_graph(connect_opt.common);
      emit(connect_opt.common, connect_report(g, connect_opt));
    } else if (exact_cmd->parsed()) {
      Graph g = load_graph(exact_opt.common);
      emit(exact_opt.common, exact_path_report(g, exact_opt));
    } else if (adjuster_cmd->parsed()) {
      Graph g = load_graph(adjuster_opt.common);
      emit(adjuster_opt.common, adjuster_report(g, adjuster_opt));
    } else if (tk_cmd->parsed()) {
      Graph g = load_graph(tk_opt.common);
      emit(tk_opt.common, tk_report(g, tk_opt));
    } else if (prop_cmd->parsed()) {
      Graph g = load_graph(prop_opt.common);
      emit(prop_opt.common, property_p_report(g, prop_opt));
    } else if (sweep_cmd->parsed()) {
      return run_sweep(sweep_opt);
    } else if (generate_cmd->parsed()) {
      Graph g = load_graph(generate_opt);
      if (generate_opt.output_path.empty()) {
        std::cout << graph_to_json(g) << "\n";
      } else {
        std::ofstream out(generate_opt.output_path);
        if (!out) throw DomainError("cannot write output file");
        out << graph_to_json(g) << "\n";
      }
      emit_dot(generate_opt, g);
    }
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const CapacityError& e) {
    std::cerr << "capacity error: " << e.what() << "\n";
    return 3;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
