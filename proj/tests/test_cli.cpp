#include <unistd.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "commands.hpp"
#include "doctest.h"
#include "ricci/families.hpp"
#include "ricci/graph.hpp"

using namespace ricci;
using ricci::cli::run;
using json = nlohmann::json;
namespace fs = std::filesystem;

namespace {

fs::path scratch() {
  static fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / ("ricci_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string write_graph(const std::string& name, const Graph& g) {
  std::string path = (scratch() / name).string();
  std::ofstream out(path);
  write_edge_list(out, g);
  return path;
}

json results_of(const cli::Outcome& o) {
  REQUIRE(o.code == cli::kOk);
  return json::parse(o.out)["results"];
}

}  // namespace

TEST_CASE("curvature command examples") {
  std::string pet = write_graph("petersen.txt", petersen_graph());
  auto r = results_of(run({"curvature", "--graph", pet, "--edge", "0", "1", "--format", "json"}));
  REQUIRE(r.size() == 1);
  CHECK(r[0]["kappa"] == "-1/3");
  CHECK(r[0]["edge"] == json::array({0, 1}));
  CHECK(r[0]["bounds"].contains("jost_liu"));

  std::string k33 = write_graph("k33.txt", complete_bipartite_graph(3, 3));
  auto csv = run({"curvature", "--graph", k33, "--all", "--format", "csv"});
  REQUIRE(csv.code == 0);
  std::istringstream lines(csv.out);
  std::string line;
  std::getline(lines, line);
  CHECK(line.rfind("u,v,kappa,kappa_float,method", 0) == 0);
  int rows = 0;
  while (std::getline(lines, line)) {
    ++rows;
    CHECK(line.find(",0/1,0,") != std::string::npos);
  }
  CHECK(rows == 9);

  std::string k4 = write_graph("k4.txt", complete_graph(4));
  auto f = run({"curvature", "--graph", k4, "--edge", "0", "1", "--method", "formula"});
  CHECK(f.code == cli::kNotApplicable);
  CHECK(f.out.empty());

  auto lp = results_of(run({"curvature", "--graph", k4, "--edge", "0", "1", "--method", "lp", "--verify"}));
  CHECK(lp[0]["kappa"] == "2/3");
  CHECK(lp[0]["verified"] == true);
}

TEST_CASE("curvature exit codes") {
  std::string pet = write_graph("petersen.txt", petersen_graph());
  CHECK(run({"curvature", "--graph", pet, "--edge", "0", "2"}).code == cli::kNotAnEdge);
  CHECK(run({"curvature", "--graph", pet}).code == cli::kMalformedInput);
  CHECK(run({"curvature", "--graph", (scratch() / "missing.txt").string(), "--all"}).code == cli::kMalformedInput);
  CHECK(run({"curvature", "--graph", pet, "--edge", "0"}).code == cli::kMalformedInput);
  CHECK(run({"curvature", "--graph", pet, "--all", "--method", "magic"}).code == cli::kMalformedInput);
  CHECK(run({"nonsense"}).code == cli::kMalformedInput);
  CHECK(run({}).code == cli::kMalformedInput);

  std::string bad = (scratch() / "bad.txt").string();
  std::ofstream(bad) << "0 1\n1 1\n";
  auto o = run({"girth", "--graph", bad});
  CHECK(o.code == cli::kMalformedInput);
  CHECK(o.out.empty());
  CHECK_FALSE(o.err.empty());

  // The displayed bipartite formula is not exact on this edge; --verify
  // must catch it.
  Graph cx = Graph::from_edges(std::vector<Edge>{{0, 4}, {0, 5}, {0, 6}, {0, 7}, {0, 8}, {1, 6},
                                                 {1, 8}, {2, 4}, {2, 5}, {2, 6}, {2, 8}, {3, 8}});
  std::string cxp = write_graph("counter.txt", cx);
  CHECK(run({"curvature", "--graph", cxp, "--edge", "0", "8", "--method", "formula", "--verify"}).code ==
        cli::kVerificationMismatch);
  auto formula = results_of(run({"curvature", "--graph", cxp, "--edge", "0", "8", "--method", "formula"}));
  CHECK(formula[0]["kappa"] == "-1/10");
  auto exact = results_of(run({"curvature", "--graph", cxp, "--edge", "0", "8", "--verify"}));
  CHECK(exact[0]["kappa"] == "-1/5");
}

TEST_CASE("oracle cap comes from the environment") {
  std::string pet = write_graph("petersen.txt", petersen_graph());
  ::setenv("RICCI_ORACLE_CAP", "5", 1);
  CHECK(run({"curvature", "--graph", pet, "--edge", "0", "1", "--method", "oracle"}).code == cli::kFailure);
  ::setenv("RICCI_ORACLE_CAP", "zero", 1);
  CHECK(run({"curvature", "--graph", pet, "--edge", "0", "1", "--method", "oracle"}).code == cli::kMalformedInput);
  ::setenv("RICCI_ORACLE_CAP", "30", 1);
  auto r = results_of(run({"curvature", "--graph", pet, "--edge", "0", "1", "--method", "oracle"}));
  CHECK(r[0]["kappa"] == "-1/3");
  CHECK(r[0]["method"] == "oracle");
  ::unsetenv("RICCI_ORACLE_CAP");
}

TEST_CASE("gen, flat and girth") {
  std::string c8 = (scratch() / "c8.txt").string();
  auto g = results_of(run({"gen", "--family", "cycle", "--params", "8", "--out", c8}));
  CHECK(g["edges"] == 8);
  auto flat = results_of(run({"flat", "--graph", c8}));
  CHECK(flat["classification"] == "cycle");
  CHECK(flat["is_flat"] == true);

  std::string pet = write_graph("petersen.txt", petersen_graph());
  CHECK(results_of(run({"girth", "--graph", pet}))["girth"] == 5);
  auto pf = results_of(run({"flat", "--graph", pet}));
  CHECK(pf["is_flat"] == false);
  CHECK(pf["classification"] == "not_flat");

  std::string q3 = write_graph("q3.txt", hypercube_graph(3));
  auto qf = results_of(run({"flat", "--graph", q3}));
  CHECK(qf["regular_girth4"]["applicable"] == true);
  CHECK(qf["regular_girth4"]["is_flat"] == true);
  CHECK(qf["classification"] == "not_girth5_applicable");

  CHECK(run({"gen", "--family", "nope"}).code == cli::kMalformedInput);
  CHECK(run({"gen", "--family", "cycle", "--params", "2"}).code == cli::kMalformedInput);
}

TEST_CASE("gen round trip reproduces every family") {
  const std::vector<std::pair<std::string, std::vector<std::int64_t>>> families = {
      {"path", {2}}, {"path", {9}}, {"cycle", {3}}, {"cycle", {12}}, {"star", {3}}, {"star", {7}},
      {"hypercube", {1}}, {"hypercube", {4}}, {"complete_bipartite", {2, 5}}, {"petersen", {}},
      {"complete", {2}}, {"complete", {6}}};
  for (const auto& [family, params] : families) {
    CAPTURE(family);
    std::vector<std::string> args{"gen", "--family", family};
    if (!params.empty()) {
      args.push_back("--params");
      for (auto p : params) args.push_back(std::to_string(p));
    }
    auto out = run(args);
    REQUIRE(out.code == 0);
    std::istringstream in(out.out);
    CHECK(read_edge_list(in) == generate_family(family, params));

    std::string path = (scratch() / (family + ".txt")).string();
    args.push_back("--out");
    args.push_back(path);
    REQUIRE(run(args).code == 0);
    CHECK(read_edge_list_file(path) == generate_family(family, params));
  }
}

TEST_CASE("experiment command") {
  std::string csv = (scratch() / "exp.csv").string();
  auto out = run({"experiment", "--model", "gnp", "--n", "400", "--p", "0.5", "--replicates", "100", "--seed", "7",
                  "--out", csv});
  auto r = results_of(out);
  CHECK(r["limit"]["value"] == "1/2");
  CHECK(r["limit"]["regime"] == "f");
  CHECK(std::abs(r["empirical_median"].get<double>() - 0.5) <= 0.05);
  std::ifstream in(csv);
  std::string header;
  std::getline(in, header);
  CHECK(header == "index,n,p,kappa,kappa_float,method,core_size");
  int rows = 0;
  for (std::string line; std::getline(in, line);) ++rows;
  CHECK(rows == 100);

  auto u = results_of(run({"experiment", "--n", "50", "--alpha", "0.5", "--replicates", "2"}));
  CHECK(u["limit"].is_null());
  CHECK(u["limit_note"].get<std::string>().rfind("regime undetermined", 0) == 0);

  CHECK(run({"experiment", "--n", "50"}).code == cli::kMalformedInput);
  CHECK(run({"experiment", "--n", "50", "--p", "1.5"}).code == cli::kMalformedInput);
  CHECK(run({"experiment", "--model", "bipartite", "--regime", "f", "--n", "50"}).code == cli::kMalformedInput);
  CHECK(run({"experiment", "--regime", "z", "--n", "50"}).code == cli::kMalformedInput);
}

TEST_CASE("identical inputs give identical payloads") {
  std::string pet = write_graph("petersen.txt", petersen_graph());
  const std::vector<std::vector<std::string>> commands = {
      {"curvature", "--graph", pet, "--all"},
      {"curvature", "--graph", pet, "--all", "--format", "csv"},
      {"flat", "--graph", pet},
      {"girth", "--graph", pet},
      {"gen", "--family", "hypercube", "--params", "3"},
      {"experiment", "--model", "bipartite", "--regime", "b", "--n", "300", "--replicates", "30", "--seed", "9"},
  };
  for (const auto& cmd : commands) {
    CAPTURE(cmd[0]);
    auto a = run(cmd);
    auto b = run(cmd);
    REQUIRE(a.code == 0);
    if (a.out.front() == '{') {
      auto ja = json::parse(a.out), jb = json::parse(b.out);
      ja.erase("timing");
      jb.erase("timing");
      CHECK(ja.dump() == jb.dump());
    } else {
      CHECK(a.out == b.out);
    }
  }
}
