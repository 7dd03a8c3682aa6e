// Acceptance suite: one PASS/FAIL line per criterion. Exits nonzero if any
// criterion fails.

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <json.hpp>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "ricci/curvature.hpp"
#include "ricci/errors.hpp"
#include "ricci/families.hpp"
#include "ricci/graph.hpp"
#include "ricci/matching.hpp"
#include "ricci/randgraph.hpp"
#include "ricci/ricciflat.hpp"
#include "ricci/transport.hpp"
#include "support.hpp"

using namespace ricci;
using ricci::testing::full_corpus;

namespace {

struct Verdict {
  bool pass = true;
  std::vector<std::string> notes;

  void fail(const std::string& why) {
    pass = false;
    if (notes.size() < 25) notes.push_back(why);
  }
  void note(const std::string& s) { notes.push_back(s); }
};

std::string edge_name(const std::string& graph, Vertex x, Vertex y) {
  return graph + " (" + std::to_string(x) + "," + std::to_string(y) + ")";
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(double v, int digits = 4) {
  std::ostringstream os;
  os.precision(digits);
  os << std::fixed << v;
  return os.str();
}

bool connected(const Graph& g) {
  for (std::size_t label : connected_components(g))
    if (label != 0) return false;
  return true;
}

bool family_shaped(const Graph& g) {
  const std::size_t n = g.vertex_count();
  const std::size_t m = g.edge_count();
  std::size_t maxdeg = 0, ones = 0, twos = 0;
  for (Vertex v = 0; v < n; ++v) {
    maxdeg = std::max(maxdeg, g.degree(v));
    ones += g.degree(v) == 1;
    twos += g.degree(v) == 2;
  }
  if (m == n - 1 && maxdeg <= 2) return true;           // path
  if (m == n && twos == n) return true;                 // cycle
  if (m == n - 1 && maxdeg == n - 1 && ones == n - 1) return true;  // star
  return false;
}

Verdict criterion1() {
  Verdict v;
  auto t0 = std::chrono::steady_clock::now();
  auto corpus = full_corpus();
  std::size_t cap = 0;
  for (const auto& [name, g] : corpus)
    for (const Edge& e : g.edges()) cap = std::max(cap, core_neighborhood(g, e.u, e.v).size());

  std::size_t edges = 0, formula_checks = 0, formula_mismatches = 0;
  std::vector<std::string> mismatched;
  for (const auto& [name, g] : corpus) {
    const GraphClass cls = classify_graph(g);
    for (const Edge& e : g.edges()) {
      ++edges;
      const auto core = core_neighborhood(g, e.u, e.v);
      const Rational primal = w1_primal(core).value;
      const Rational dual = w1_dual_oracle(core, cap).value;
      if (primal != dual)
        v.fail("primal " + primal.to_string() + " != dual " + dual.to_string() + " on " + edge_name(name, e.u, e.v));
      const Rational kappa = Rational(1) - primal;

      auto compare = [&](const char* label, const Rational& f) {
        ++formula_checks;
        if (f != kappa) {
          ++formula_mismatches;
          mismatched.push_back(edge_name(name, e.u, e.v) + " " + label + " " + f.to_string() + " vs LP " +
                               kappa.to_string());
        }
      };
      const auto& p = core.partition;
      if (p.delta.empty() && p.n1_x.empty() && p.n1_y.empty() && p.n2_x.empty() && p.n2_y.empty() &&
          p.p_xy.empty())
        compare("girth6", ricci_girth6_formula(g, e.u, e.v).kappa);
      if (cls.bipartite) compare("bipartite", ricci_bipartite_formula(g, cls, e.u, e.v).kappa);
      if (cls.girth_at_least_5) compare("girth5", ricci_girth5_formula(g, cls, e.u, e.v).kappa);
    }
  }
  const double secs = seconds_since(t0);
  v.note(std::to_string(corpus.size()) + " graphs, " + std::to_string(edges) + " edges, oracle cap " +
         std::to_string(cap) + ", " + fmt(secs, 1) + " s");
  v.note("formula checks " + std::to_string(formula_checks) + ", mismatches " + std::to_string(formula_mismatches));
  for (const auto& m : mismatched) v.fail("formula mismatch: " + m);
  if (secs > 120) v.fail("runtime " + fmt(secs, 1) + " s exceeds 120 s");
  return v;
}

Verdict criterion2() {
  Verdict v;
  auto all_zero = [&](const std::string& name, const Graph& g) {
    for (const auto& r : curvature_all(g))
      if (r.kappa != Rational(0)) v.fail(edge_name(name, r.x, r.y) + " kappa " + r.kappa.to_string());
  };
  for (std::size_t p = 1; p <= 5; ++p)
    for (std::size_t q = 1; q <= 5; ++q)
      all_zero("K" + std::to_string(p) + "," + std::to_string(q), complete_bipartite_graph(p, q));
  all_zero("Q3", hypercube_graph(3));
  all_zero("Q4", hypercube_graph(4));
  for (std::size_t n = 4; n <= 12; ++n) all_zero("C" + std::to_string(n), cycle_graph(n));

  std::size_t tree_edges = 0;
  for (const auto& [name, g] : full_corpus()) {
    if (g.edge_count() + 1 != g.vertex_count() || !connected(g)) continue;
    for (const Edge& e : g.edges()) {
      ++tree_edges;
      Rational t = Rational(1) - Rational(1, g.degree(e.u)) - Rational(1, g.degree(e.v));
      Rational expected = t > Rational(0) ? Rational(-2) * t : Rational(0);
      Rational got = ricci_lp(g, e.u, e.v).kappa;
      if (got != expected)
        v.fail(edge_name(name, e.u, e.v) + " tree " + got.to_string() + " expected " + expected.to_string());
    }
  }
  v.note(std::to_string(tree_edges) + " tree edges");
  return v;
}

Verdict criterion3() {
  Verdict v;
  std::size_t checks = 0, cho_paeng = 0;
  for (const auto& [name, g] : full_corpus()) {
    const GraphClass cls = classify_graph(g);
    const bool girth5 = cls.girth_at_least_5;
    std::size_t min_degree = g.vertex_count() ? g.degree(0) : 0;
    for (Vertex u = 0; u < g.vertex_count(); ++u) min_degree = std::min(min_degree, g.degree(u));
    for (const Edge& e : g.edges()) {
      for (auto [x, y] : {std::pair{e.u, e.v}, std::pair{e.v, e.u}}) {
        const Rational kappa = ricci_lp(g, x, y).kappa;
        auto within = [&](const BoundPair& b, bool use_upper) {
          ++checks;
          if (b.lower > kappa)
            v.fail(edge_name(name, x, y) + " " + std::string(to_string(b.source)) + " lower " +
                   b.lower.to_string() + " > " + kappa.to_string());
          if (use_upper && b.upper < kappa)
            v.fail(edge_name(name, x, y) + " " + std::string(to_string(b.source)) + " upper " +
                   b.upper.to_string() + " < " + kappa.to_string());
        };
        bool saw_cho_paeng = false;
        for (const auto& b : jost_liu_bounds(g, cls, x, y)) {
          within(b, true);
          saw_cho_paeng |= b.source == BoundSource::cho_paeng_girth5;
        }
        within(matching_lower_bound(g, x, y), true);
        within(two_matching_lower_bound(g, x, y), false);
        if (girth5 && min_degree >= 2) {
          ++cho_paeng;
          const Rational cap = Rational(-1) + Rational(2, static_cast<std::int64_t>(min_degree));
          if (kappa > cap) v.fail(edge_name(name, x, y) + " exceeds -1+2/delta = " + cap.to_string());
          if (!saw_cho_paeng) v.fail(edge_name(name, x, y) + " missing girth-5 upper bound");
        }
      }
    }
  }
  v.note(std::to_string(checks) + " bound checks, " + std::to_string(cho_paeng) + " girth-5 upper checks");
  return v;
}

Verdict criterion4() {
  Verdict v;
  std::size_t edges = 0, perfect = 0;
  for (const auto& [name, g] : full_corpus()) {
    for (const Edge& e : g.edges()) {
      if (g.degree(e.u) != g.degree(e.v)) continue;
      ++edges;
      const auto d = static_cast<std::int64_t>(g.degree(e.u));
      const auto part = neighbor_partition(g, e.u, e.v);
      const Rational target(static_cast<std::int64_t>(part.delta.size()), d);
      const bool at_target = ricci_lp(g, e.u, e.v).kappa == target;
      const bool pm = has_perfect_matching_between_neighborhoods(g, e.u, e.v).perfect;
      perfect += pm;
      if (at_target != pm)
        v.fail(edge_name(name, e.u, e.v) + (pm ? " perfect matching but kappa != |D|/d"
                                               : " kappa = |D|/d without perfect matching"));
    }
  }
  v.note(std::to_string(edges) + " equal-degree edges, " + std::to_string(perfect) + " with perfect matching");
  return v;
}

Verdict criterion5() {
  Verdict v;
  std::mt19937_64 rng(5150);
  for (int t = 0; t < 200; ++t) {
    std::size_t a = std::uniform_int_distribution<std::size_t>(1, 10)(rng);
    std::size_t b = std::uniform_int_distribution<std::size_t>(1, 10)(rng);
    double p = std::uniform_real_distribution<double>(0.05, 0.6)(rng);
    MatchingInstance inst;
    for (Vertex i = 0; i < a; ++i) inst.left.push_back(i);
    for (Vertex j = 0; j < b; ++j) inst.right.push_back(100 + j);
    std::bernoulli_distribution coin(p);
    for (Vertex i = 0; i < a; ++i)
      for (Vertex j = 0; j < b; ++j)
        if (coin(rng)) inst.adjacency.emplace_back(i, 100 + j);
    const auto m = max_matching(inst);
    const std::size_t deficiency = hall_deficiency_bruteforce(inst);
    if (m.size != a - deficiency)
      v.fail("instance " + std::to_string(t) + ": matching " + std::to_string(m.size) + ", |A| - deficiency " +
             std::to_string(a - deficiency));
  }
  v.note("200 instances");
  return v;
}

Verdict criterion6() {
  Verdict v;
  auto expect = [&](const std::string& name, const Graph& g, FlatClass want) {
    auto r = classify_girth5_flat(g);
    if (!r.is_flat || r.classification != want)
      v.fail(name + " classified " + (r.classification ? std::string(to_string(*r.classification)) : "none") +
             (r.is_flat ? "" : ", not flat"));
  };
  for (std::size_t n = 2; n <= 20; ++n) expect("P" + std::to_string(n), path_graph(n), FlatClass::path);
  for (std::size_t n = 5; n <= 20; ++n) expect("C" + std::to_string(n), cycle_graph(n), FlatClass::cycle);
  for (std::size_t n = 3; n <= 20; ++n) expect("T" + std::to_string(n), star_graph(n), FlatClass::star);

  std::mt19937_64 rng(606);
  std::size_t found = 0, attempts = 0;
  while (found < 100 && attempts < 100000) {
    ++attempts;
    std::size_t n = std::uniform_int_distribution<std::size_t>(4, 9)(rng);
    Graph g = ricci::testing::random_girth5(n, 3 * n, rng);
    if (!connected(g) || family_shaped(g)) continue;
    ++found;
    auto r = classify_girth5_flat(g);
    if (r.is_flat || r.classification != FlatClass::not_flat)
      v.fail("random non-family girth-5 graph " + std::to_string(found) + " reported flat");
    bool any_nonzero = false;
    for (const Edge& e : g.edges()) any_nonzero |= ricci_lp(g, e.u, e.v).kappa != Rational(0);
    if (!any_nonzero) v.fail("random non-family girth-5 graph " + std::to_string(found) + " is flat by LP");
  }
  if (found < 100) v.fail("only " + std::to_string(found) + " random non-family graphs generated");
  v.note(std::to_string(found) + " random non-family graphs");
  return v;
}

Verdict criterion7() {
  Verdict v;
  auto t0 = std::chrono::steady_clock::now();

  {
    ExperimentConfig c;
    c.model = Model::bipartite;
    c.n = 5000;
    c.scaling = regime_scaling(Model::bipartite, Regime::b, 3.0);
    c.replicates = 500;
    c.seed = 2024;
    auto r = run_experiment(c);
    double d = r.distance_to_limit.value_or(1.0);
    v.note("(b) bipartite n=5000 lambda=3: KS " + fmt(d));
    if (!r.limit || r.limit->kind != RegimeLimit::Kind::tree_distribution) v.fail("(b) limit is not the tree law");
    if (d > 0.05) v.fail("(b) KS " + fmt(d) + " > 0.05");
  }
  {
    ExperimentConfig c;
    c.model = Model::gnp;
    c.n = 400;
    c.scaling = Scaling{0.5, 0.0};
    c.replicates = 100;
    c.seed = 2024;
    auto r = run_experiment(c);
    v.note("(f) gnp n=400 p=0.5: median " + fmt(r.empirical_median));
    if (std::abs(r.empirical_median - 0.5) > 0.05) v.fail("(f) median " + fmt(r.empirical_median));
  }
  {
    ExperimentConfig c;
    c.model = Model::gnp;
    c.n = 10000;
    c.scaling = regime_scaling(Model::gnp, Regime::a);
    c.replicates = 200;
    c.seed = 2024;
    auto r = run_experiment(c);
    v.note("(a) gnp n=10000 np=" + fmt(r.p * 10000, 3) + ": isolated " + fmt(r.isolated_fraction, 3));
    if (r.isolated_fraction < 0.95) v.fail("(a) isolated fraction " + fmt(r.isolated_fraction, 3));
  }
  for (Regime regime : {Regime::c, Regime::d, Regime::e}) {
    std::vector<double> medians;
    double target = 0;
    for (std::size_t n : {500, 1000, 2000}) {
      ExperimentConfig c;
      c.model = Model::gnp;
      c.n = n;
      c.scaling = regime_scaling(Model::gnp, regime);
      c.replicates = 200;
      c.seed = 2024;
      auto r = run_experiment(c);
      target = r.limit ? r.limit->value->to_double() : 0;
      medians.push_back(r.empirical_median);
    }
    const std::string label = "(" + std::string(to_string(regime)) + ")";
    v.note(label + " medians " + fmt(medians[0]) + ", " + fmt(medians[1]) + ", " + fmt(medians[2]) + " toward " +
           fmt(target, 0));
    for (std::size_t i = 0; i + 1 < medians.size(); ++i)
      if (std::abs(medians[i + 1] - target) >= std::abs(medians[i] - target))
        v.fail(label + " median does not move toward " + fmt(target, 0));
  }
  const double secs = seconds_since(t0);
  v.note(fmt(secs, 1) + " s");
  if (secs > 900) v.fail("runtime " + fmt(secs, 1) + " s exceeds 900 s");
  return v;
}

std::pair<int, std::string> capture(const std::string& command) {
  std::string out;
  FILE* pipe = ::popen(command.c_str(), "r");
  if (!pipe) return {-1, out};
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  int status = ::pclose(pipe);
  return {status, out};
}

std::string payload(const std::string& out) {
  if (out.empty() || out.front() != '{') return out;
  auto j = nlohmann::ordered_json::parse(out);
  j.erase("timing");
  return j.dump();
}

Verdict criterion8() {
  Verdict v;
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "ricci_acceptance";
  fs::create_directories(dir);
  const std::string pet = (dir / "petersen.txt").string();
  {
    std::ofstream out(pet);
    write_edge_list(out, petersen_graph());
  }
  const std::string exe = RICCI_CLI_PATH;
  const std::vector<std::string> commands = {
      "curvature --graph " + pet + " --all",
      "curvature --graph " + pet + " --all --format csv",
      "curvature --graph " + pet + " --edge 0 1 --verify",
      "flat --graph " + pet,
      "girth --graph " + pet,
      "gen --family hypercube --params 4",
      "experiment --model gnp --n 400 --p 0.5 --replicates 40 --seed 7",
      "experiment --model bipartite --regime b --n 1000 --replicates 60 --seed 3 --threads 2",
  };
  for (const auto& cmd : commands) {
    auto a = capture(exe + " " + cmd + " 2>/dev/null");
    auto b = capture(exe + " " + cmd + " 2>/dev/null");
    if (a.first != 0 || b.first != 0) {
      v.fail("'" + cmd + "' exited with status " + std::to_string(a.first));
      continue;
    }
    if (payload(a.second) != payload(b.second)) v.fail("'" + cmd + "' payloads differ");
  }

  const std::string csv1 = (dir / "a.csv").string(), csv2 = (dir / "b.csv").string();
  const std::string base = exe + " experiment --model gnp --n 300 --p 0.3 --replicates 30 --seed 11 --out ";
  capture(base + csv1 + " --threads 1");
  capture(base + csv2 + " --threads 4");
  auto slurp = [](const std::string& p) {
    std::ifstream in(p);
    return std::string(std::istreambuf_iterator<char>(in), {});
  };
  if (slurp(csv1).empty() || slurp(csv1) != slurp(csv2)) v.fail("experiment CSV differs across thread counts");
  v.note(std::to_string(commands.size()) + " commands run twice, plus CSV across thread counts");
  return v;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria = {
      {"1 triple agreement", criterion1},
      {"2 named values", criterion2},
      {"3 bound sandwich", criterion3},
      {"4 perfect matching characterisation", criterion4},
      {"5 Hall deficiency", criterion5},
      {"6 girth-5 flat classification", criterion6},
      {"7 random graph regimes", criterion7},
      {"8 determinism", criterion8},
  };
  int failures = 0;
  for (const auto& [name, run] : criteria) {
    Verdict v;
    try {
      v = run();
    } catch (const std::exception& e) {
      v.fail(std::string("exception: ") + e.what());
    }
    std::cout << (v.pass ? "PASS" : "FAIL") << "  criterion " << name << "\n";
    for (const auto& n : v.notes) std::cout << "      " << n << "\n";
    std::cout.flush();
    failures += !v.pass;
  }
  std::cout << (failures ? "FAIL" : "PASS") << "  " << (criteria.size() - failures) << "/" << criteria.size()
            << " criteria\n";
  return failures ? 1 : 0;
}
