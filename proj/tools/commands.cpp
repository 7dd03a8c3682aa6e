#include "commands.hpp"

#include <openssl/evp.h>

#include <CLI11.hpp>
#include <algorithm>
#include <charconv>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <json.hpp>
#include <optional>
#include <sstream>

#include "ricci/curvature.hpp"
#include "ricci/errors.hpp"
#include "ricci/families.hpp"
#include "ricci/graph.hpp"
#include "ricci/matching.hpp"
#include "ricci/randgraph.hpp"
#include "ricci/ricciflat.hpp"

#ifndef RICCI_VERSION
#define RICCI_VERSION "0.0.0"
#endif

namespace ricci::cli {

using json = nlohmann::ordered_json;

namespace {

std::string sha256_hex(const std::string& data) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr);
  std::ostringstream os;
  for (unsigned int i = 0; i < len; ++i) os << std::hex << std::setw(2) << std::setfill('0') << int(md[i]);
  return "sha256:" + os.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot open graph file '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::string shortest(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

json rational_json(const Rational& r) { return r.to_string(); }

void write_atomically(const std::string& path, const std::string& content) {
  std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw InvalidInput("cannot write '" + path + "'");
    out << content;
    if (!out.flush()) throw InvalidInput("cannot write '" + path + "'");
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) throw InvalidInput("cannot write '" + path + "'");
}

std::size_t oracle_cap_from_env() {
  const char* raw = std::getenv("RICCI_ORACLE_CAP");
  if (!raw || !*raw) return kDefaultOracleCap;
  std::size_t cap = 0;
  std::string_view text(raw);
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), cap);
  if (ec != std::errc() || ptr != text.data() + text.size() || cap == 0) {
    throw InvalidInput("RICCI_ORACLE_CAP must be a positive integer, got '" + std::string(text) + "'");
  }
  return cap;
}

struct Loaded {
  Graph graph;
  std::string digest;
};

Loaded load_graph(const std::string& path) {
  std::string text = read_file(path);
  std::istringstream in(text);
  return {read_edge_list(in), sha256_hex(text)};
}

json envelope(const std::vector<std::string>& args, const std::string& digest, json results,
              std::chrono::steady_clock::time_point start) {
  json env;
  env["command"] = args;
  env["version"] = RICCI_VERSION;
  env["input_digest"] = digest;
  env["results"] = std::move(results);
  env["timing"] = {{"wall_seconds",
                    std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count()}};
  return env;
}

// ---- curvature ----

CurvatureResult formula_for(const Graph& g, const GraphClass& cls, Vertex x, Vertex y) {
  std::string reasons;
  try {
    return ricci_girth6_formula(g, x, y);
  } catch (const NotApplicable& e) {
    reasons += e.what();
  }
  try {
    return ricci_bipartite_formula(g, cls, x, y);
  } catch (const NotApplicable& e) {
    reasons += std::string("; ") + e.what();
  }
  try {
    return ricci_girth5_formula(g, cls, x, y);
  } catch (const NotApplicable& e) {
    reasons += std::string("; ") + e.what();
  }
  throw NotApplicable("no closed-form formula applies to (" + std::to_string(x) + "," + std::to_string(y) +
                      "): " + reasons);
}

struct EdgeRow {
  CurvatureResult result;
  std::vector<BoundPair> bounds;
  bool verified = false;
};

EdgeRow evaluate(const Graph& g, const GraphClass& cls, Vertex x, Vertex y, const std::string& method, bool verify,
                 std::size_t cap) {
  EdgeRow row;
  CurvatureOptions opts;
  opts.oracle_cap = cap;
  if (method == "auto") {
    opts.verify = verify;
    row.result = ricci_auto(g, cls, x, y, opts);
  } else if (method == "lp") {
    opts.verify = verify;
    row.result = ricci_lp(g, x, y, opts);
  } else if (method == "oracle") {
    row.result = ricci_oracle(g, x, y, cap);
  } else {
    row.result = formula_for(g, cls, x, y);
  }
  if (verify && method != "auto" && method != "lp") {
    Rational lp = ricci_lp(g, x, y, opts).kappa;
    if (lp != row.result.kappa) {
      throw VerificationMismatch("edge (" + std::to_string(x) + "," + std::to_string(y) + "): " +
                                 std::string(to_string(row.result.method)) + " gives " + row.result.kappa.to_string() +
                                 ", LP gives " + lp.to_string());
    }
  }
  row.verified = verify;
  row.bounds = jost_liu_bounds(g, cls, x, y);
  row.bounds.push_back(matching_lower_bound(g, x, y));
  row.bounds.push_back(two_matching_lower_bound(g, x, y));
  if (cls.bipartite) row.bounds.push_back(bipartite_upper_bound(g, x, y));
  return row;
}

json row_json(const EdgeRow& row) {
  const auto& r = row.result;
  json j;
  j["edge"] = {r.x, r.y};
  j["kappa"] = rational_json(r.kappa);
  j["kappa_float"] = r.kappa.to_double();
  j["method"] = std::string(to_string(r.method));
  if (r.detail) {
    j["girth5"] = {{"kappa0", rational_json(r.detail->kappa0)}, {"kappa1", rational_json(r.detail->kappa1)}};
  }
  json bounds = json::object();
  for (const auto& b : row.bounds) {
    bounds[std::string(to_string(b.source))] = {{"lower", rational_json(b.lower)}, {"upper", rational_json(b.upper)}};
  }
  j["bounds"] = bounds;
  if (row.verified) j["verified"] = true;
  return j;
}

const std::vector<BoundSource> kCsvBounds = {BoundSource::jost_liu, BoundSource::matching, BoundSource::two_matching,
                                             BoundSource::bipartite_upper, BoundSource::cho_paeng_girth5};

std::string rows_csv(const std::vector<EdgeRow>& rows) {
  std::ostringstream os;
  os << "u,v,kappa,kappa_float,method";
  for (auto s : kCsvBounds) os << ',' << to_string(s) << "_lower," << to_string(s) << "_upper";
  os << '\n';
  for (const auto& row : rows) {
    const auto& r = row.result;
    os << r.x << ',' << r.y << ',' << r.kappa.to_string() << ',' << shortest(r.kappa.to_double()) << ','
       << to_string(r.method);
    for (auto s : kCsvBounds) {
      auto it = std::find_if(row.bounds.begin(), row.bounds.end(), [&](const BoundPair& b) { return b.source == s; });
      if (it == row.bounds.end()) {
        os << ",,";
      } else {
        os << ',' << it->lower.to_string() << ',' << it->upper.to_string();
      }
    }
    os << '\n';
  }
  return os.str();
}

// ---- experiment ----

json limit_json(const RegimeLimit& l) {
  json j;
  j["kind"] = std::string(to_string(l.kind));
  j["regime"] = std::string(to_string(l.regime));
  if (l.value) {
    j["value"] = rational_json(*l.value);
    j["value_float"] = l.value->to_double();
  }
  if (l.lambda) j["lambda"] = *l.lambda;
  return j;
}

json config_json(const ExperimentConfig& c, double p) {
  return {{"model", std::string(to_string(c.model))},
          {"n", c.n},
          {"p", p},
          {"scaling", {{"coefficient", c.scaling.coefficient}, {"exponent", c.scaling.exponent}}},
          {"replicates", c.replicates},
          {"seed", c.seed},
          {"core_budget", c.core_budget}};
}

std::string replicate_csv(const ExperimentReport& r) {
  std::ostringstream os;
  os << "index,n,p,kappa,kappa_float,method,core_size\n";
  for (const auto& rec : r.replicates) {
    os << rec.index << ',' << r.config.n << ',' << shortest(r.p) << ',';
    if (rec.kappa) {
      os << rec.kappa->to_string() << ',' << shortest(rec.kappa->to_double()) << ',' << to_string(rec.method);
    } else {
      os << ",,skipped";
    }
    os << ',' << rec.core_size << '\n';
  }
  return os.str();
}

Regime parse_regime(const std::string& tag) {
  static const std::vector<std::pair<std::string, Regime>> tags = {
      {"a", Regime::a}, {"b", Regime::b}, {"c", Regime::c}, {"d", Regime::d}, {"e", Regime::e}, {"f", Regime::f}};
  for (const auto& [name, r] : tags)
    if (name == tag) return r;
  throw InvalidInput("unknown regime '" + tag + "', expected one of a b c d e f");
}

}  // namespace

Outcome run(const std::vector<std::string>& args) {
  const auto start = std::chrono::steady_clock::now();
  CLI::App app{"Exact Ollivier-Ricci curvature of graph edges", "ricci"};
  app.set_version_flag("--version", RICCI_VERSION);
  app.require_subcommand(1);

  // curvature
  auto* curv = app.add_subcommand("curvature", "curvature of one edge or of every edge");
  std::string graph_path;
  std::vector<std::uint64_t> edge;
  bool all = false, verify = false;
  std::string method = "auto", format = "json";
  curv->add_option("--graph", graph_path, "edge-list file")->required();
  auto* edge_opt = curv->add_option("--edge", edge, "edge endpoints U V")->expected(2);
  auto* all_opt = curv->add_flag("--all", all, "every edge, in lexicographic order");
  edge_opt->excludes(all_opt);
  curv->add_option("--method", method, "auto | lp | formula | oracle")
      ->check(CLI::IsMember({"auto", "lp", "formula", "oracle"}));
  curv->add_option("--format", format, "json | csv")->check(CLI::IsMember({"json", "csv"}));
  curv->add_flag("--verify", verify, "cross-check against the LP; exit 5 on mismatch");

  // flat
  auto* flat = app.add_subcommand("flat", "Ricci-flatness report");
  flat->add_option("--graph", graph_path, "edge-list file")->required();

  // girth
  auto* gir = app.add_subcommand("girth", "girth and bipartiteness");
  gir->add_option("--graph", graph_path, "edge-list file")->required();

  // gen
  auto* gen = app.add_subcommand("gen", "write a named graph family as an edge list");
  std::string family, out_path;
  std::vector<std::int64_t> params;
  gen->add_option("--family", family, "path | cycle | star | hypercube | complete_bipartite | petersen | complete")
      ->required();
  gen->add_option("--params", params, "integer parameters of the family");
  gen->add_option("--out", out_path, "output file; stdout when absent");

  // experiment
  auto* exp = app.add_subcommand("experiment", "random-graph curvature experiment on a marked edge");
  std::string model = "gnp", regime_tag, csv_path;
  std::size_t n = 0, replicates = 100, budget = 20000;
  std::uint64_t seed = 0;
  double p = -1, alpha = -1, coefficient = 1.0, lambda = 3.0;
  unsigned threads = 0;
  exp->add_option("--model", model, "gnp | bipartite")->check(CLI::IsMember({"gnp", "bipartite"}));
  exp->add_option("--n", n, "vertices (gnp) or side size (bipartite)")->required()->check(CLI::PositiveNumber);
  auto* regime_opt = exp->add_option("--regime", regime_tag, "regime tag a-f with its canonical scaling");
  auto* p_opt = exp->add_option("--p", p, "edge probability; constant in n unless --regime b..e");
  auto* alpha_opt = exp->add_option("--alpha", alpha, "p = coefficient * n^-alpha");
  exp->add_option("--coefficient", coefficient, "coefficient of the scaling");
  exp->add_option("--lambda", lambda, "np for regime b");
  exp->add_option("--replicates", replicates, "number of replicates")->check(CLI::PositiveNumber);
  exp->add_option("--seed", seed, "64-bit seed");
  exp->add_option("--out", csv_path, "per-replicate CSV file");
  exp->add_option("--threads", threads, "worker threads, 0 = all cores");
  exp->add_option("--core-budget", budget, "skip replicates whose core exceeds this many vertices");
  alpha_opt->excludes(regime_opt);

  Outcome outcome;
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    outcome.out = app.help();
    for (auto* sub : app.get_subcommands())
      if (sub->parsed()) outcome.out = sub->help();
    return outcome;
  } catch (const CLI::CallForVersion&) {
    outcome.out = std::string(RICCI_VERSION) + "\n";
    return outcome;
  } catch (const CLI::ParseError& e) {
    outcome.code = kMalformedInput;
    outcome.err = std::string("error: ") + e.what() + "\n";
    return outcome;
  }

  try {
    if (curv->parsed()) {
      if (edge.empty() && !all) throw InvalidInput("one of --edge U V or --all is required");
      auto loaded = load_graph(graph_path);
      const Graph& g = loaded.graph;
      const std::size_t cap = oracle_cap_from_env();
      GraphClass cls = classify_graph(g);
      std::vector<EdgeRow> rows;
      if (all) {
        for (auto e : g.edges()) rows.push_back(evaluate(g, cls, e.u, e.v, method, verify, cap));
      } else {
        if (edge[0] > kMaxVertexId || edge[1] > kMaxVertexId) throw InvalidInput("vertex id out of range");
        rows.push_back(evaluate(g, cls, static_cast<Vertex>(edge[0]), static_cast<Vertex>(edge[1]), method, verify,
                                cap));
      }
      if (format == "csv") {
        outcome.out = rows_csv(rows);
      } else {
        json results = json::array();
        for (const auto& row : rows) results.push_back(row_json(row));
        outcome.out = envelope(args, loaded.digest, std::move(results), start).dump(2) + "\n";
      }
    } else if (flat->parsed()) {
      auto loaded = load_graph(graph_path);
      const Graph& g = loaded.graph;
      auto report = classify_girth5_flat(g);
      json results;
      results["is_flat"] = report.is_flat;
      results["witness_edge"] = report.witness_edge ? json{report.witness_edge->u, report.witness_edge->v} : json();
      results["witness_kappa"] = report.witness_kappa ? rational_json(*report.witness_kappa) : json();
      results["classification"] = std::string(to_string(*report.classification));
      if (!report.reason.empty()) results["reason"] = report.reason;
      json comps = json::array();
      for (const auto& c : is_ricci_flat_by_component(g)) {
        json cj;
        cj["vertices"] = c.vertices;
        cj["is_flat"] = c.report.is_flat;
        cj["witness_edge"] = c.report.witness_edge ? json{c.report.witness_edge->u, c.report.witness_edge->v} : json();
        comps.push_back(cj);
      }
      results["components"] = comps;
      try {
        auto reg = check_regular_girth4_flat(g);
        results["regular_girth4"] = {{"applicable", true}, {"is_flat", reg.is_flat}};
      } catch (const NotApplicable& e) {
        results["regular_girth4"] = {{"applicable", false}, {"reason", e.what()}};
      }
      outcome.out = envelope(args, loaded.digest, std::move(results), start).dump(2) + "\n";
    } else if (gir->parsed()) {
      auto loaded = load_graph(graph_path);
      const Graph& g = loaded.graph;
      auto gi = girth(g);
      json results = {{"vertices", g.vertex_count()},
                      {"edges", g.edge_count()},
                      {"girth", gi ? json(*gi) : json()},
                      {"bipartite", check_bipartite(g).bipartite}};
      outcome.out = envelope(args, loaded.digest, std::move(results), start).dump(2) + "\n";
    } else if (gen->parsed()) {
      Graph g = generate_family(family, params);
      std::ostringstream text;
      write_edge_list(text, g);
      if (out_path.empty()) {
        outcome.out = text.str();
      } else {
        write_atomically(out_path, text.str());
        json results = {{"family", family},
                        {"params", params},
                        {"vertices", g.vertex_count()},
                        {"edges", g.edge_count()},
                        {"out", out_path}};
        outcome.out = envelope(args, sha256_hex(text.str()), std::move(results), start).dump(2) + "\n";
      }
    } else if (exp->parsed()) {
      ExperimentConfig config;
      config.model = model == "gnp" ? Model::gnp : Model::bipartite;
      config.n = n;
      config.replicates = replicates;
      config.seed = seed;
      config.core_budget = budget;
      config.threads = threads;
      if (regime_opt->count()) {
        config.scaling = regime_scaling(config.model, parse_regime(regime_tag), lambda, p_opt->count() ? p : 0.5);
      } else if (alpha_opt->count()) {
        config.scaling = Scaling{coefficient, alpha};
      } else if (p_opt->count()) {
        config.scaling = Scaling{p, 0.0};
      } else {
        throw InvalidInput("one of --regime, --alpha or --p is required");
      }
      auto report = run_experiment(config);

      json results;
      results["config"] = config_json(config, report.p);
      results["limit"] = report.limit ? limit_json(*report.limit) : json();
      if (!report.limit_note.empty()) results["limit_note"] = report.limit_note;
      results["empirical_mean"] = report.empirical_mean;
      results["empirical_median"] = report.empirical_median;
      results["distance_to_limit"] = report.distance_to_limit ? json(*report.distance_to_limit) : json();
      results["isolated_fraction"] = report.isolated_fraction;
      results["positive_samples"] = report.positive_samples;
      results["skipped"] = report.skipped;
      json skips = json::array();
      for (const auto& rec : report.replicates)
        if (!rec.kappa) skips.push_back({{"index", rec.index}, {"reason", rec.skip_reason}});
      results["skips"] = skips;
      if (!csv_path.empty()) write_atomically(csv_path, replicate_csv(report));
      outcome.out = envelope(args, sha256_hex(config_json(config, report.p).dump()), std::move(results), start)
                        .dump(2) +
                    "\n";
    }
  } catch (const NotAnEdge& e) {
    outcome = {kNotAnEdge, "", std::string("error: ") + e.what() + "\n"};
  } catch (const InvalidInput& e) {
    outcome = {kMalformedInput, "", std::string("error: ") + e.what() + "\n"};
  } catch (const NotApplicable& e) {
    outcome = {kNotApplicable, "", std::string("error: ") + e.what() + "\n"};
  } catch (const VerificationMismatch& e) {
    outcome = {kVerificationMismatch, "", std::string("error: ") + e.what() + "\n"};
  } catch (const std::exception& e) {
    outcome = {kFailure, "", std::string("error: ") + e.what() + "\n"};
  }
  return outcome;
}

}  // namespace ricci::cli
