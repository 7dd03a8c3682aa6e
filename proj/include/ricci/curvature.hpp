#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "ricci/graph.hpp"
#include "ricci/rational.hpp"
#include "ricci/transport.hpp"

namespace ricci {

enum class Method { lp, tree_girth6, bipartite, girth5, oracle };
std::string_view to_string(Method m);

/// kappa_0 and kappa_1 of the girth-5 formula; kappa_{-1} is always 0.
struct Girth5Breakdown {
  Rational kappa0;
  Rational kappa1;
};

struct CurvatureResult {
  Vertex x = 0;  // as queried
  Vertex y = 0;
  Rational kappa;
  Method method = Method::lp;
  std::optional<Girth5Breakdown> detail;
  std::optional<W1Result> certificates;
};

enum class BoundSource { jost_liu, triangle_free, matching, two_matching, bipartite_upper, cho_paeng_girth5 };
std::string_view to_string(BoundSource s);

struct BoundPair {
  Rational lower;
  Rational upper;
  BoundSource source = BoundSource::jost_liu;
  /// Only meaningful for bipartite_upper: R(x,y) has at most one component.
  bool r_connected = false;
};

struct CurvatureOptions {
  std::size_t oracle_cap = kDefaultOracleCap;
  /// Cross-check formula results against the LP (and the dual oracle when
  /// the core fits under oracle_cap); VerificationMismatch on disagreement.
  bool verify = false;
  /// Attach primal/dual certificates to LP results when the core fits.
  bool attach_certificates = false;
  std::size_t threads = 0;  // curvature_all only; 0 = hardware concurrency
};

/// Graph-wide facts the dispatcher needs; compute once per graph.
struct GraphClass {
  bool bipartite = false;
  bool girth_at_least_5 = false;
};
GraphClass classify_graph(const Graph& g);

/// kappa = 1 - W1 via the primal transport problem.
CurvatureResult ricci_lp(const Graph& g, Vertex x, Vertex y, const CurvatureOptions& opts = {});

/// kappa = 1 - W1 via the exhaustive dual search alone.
CurvatureResult ricci_oracle(const Graph& g, Vertex x, Vertex y, std::size_t cap = kDefaultOracleCap);

/// -2(1 - 1/dx - 1/dy)_+ ; NotApplicable unless delta, N1, N2 and P are all
/// empty for this edge.
CurvatureResult ricci_girth6_formula(const Graph& g, Vertex x, Vertex y);

/// Component formula for bipartite graphs, evaluated as displayed.
/// NotApplicable (naming an odd cycle) when g is not bipartite.
///
/// The value is always >= the true curvature. It is exact when
/// bipartite_formula_exact holds; otherwise a component of R admits a mixed
/// Lipschitz assignment the formula does not account for, and it can
/// overshoot.
CurvatureResult ricci_bipartite_formula(const Graph& g, Vertex x, Vertex y);
CurvatureResult ricci_bipartite_formula(const Graph& g, const GraphClass& cls, Vertex x, Vertex y);

/// kappa0 ^ kappa1 for graphs of girth >= 5; the components are those of
/// the core subgraph induced by N2(x) u N2(y) u P(x,y). Same caveat as the
/// bipartite formula, with girth5_formula_exact as the exactness test.
CurvatureResult ricci_girth5_formula(const Graph& g, Vertex x, Vertex y);
CurvatureResult ricci_girth5_formula(const Graph& g, const GraphClass& cls, Vertex x, Vertex y);

/// Every component of R(x,y) joins each of its N1(x) vertices to each of
/// its N1(y) vertices by an edge.
bool bipartite_formula_exact(const Graph& g, Vertex x, Vertex y);

/// Every component of Q(x,y) joins each of its N2(x) vertices to each of
/// its N2(y) vertices through a common neighbour in P(x,y).
bool girth5_formula_exact(const Graph& g, Vertex x, Vertex y);

/// General bounds: the jost_liu pair always; the triangle_free pair when
/// the edge has no common neighbours; the cho_paeng_girth5 upper bound
/// -1 + 2/delta (lower -2) when girth >= 5 and min degree >= 2.
std::vector<BoundPair> jost_liu_bounds(const Graph& g, Vertex x, Vertex y);
std::vector<BoundPair> jost_liu_bounds(const Graph& g, const GraphClass& cls, Vertex x, Vertex y);

/// -2(1 - 1/dx - 1/dy - (|N1(x)|/dx ^ |N1(y)|/dy))_+ for bipartite graphs,
/// with the triangle-free lower bound.
BoundPair bipartite_upper_bound(const Graph& g, Vertex x, Vertex y);

/// Girth-6 formula when no short cycle is supported on the edge; the
/// bipartite or girth-5 formula when the graph is in that class and the
/// exactness test passes; LP otherwise.
CurvatureResult ricci_auto(const Graph& g, Vertex x, Vertex y, const CurvatureOptions& opts = {});
CurvatureResult ricci_auto(const Graph& g, const GraphClass& cls, Vertex x, Vertex y,
                           const CurvatureOptions& opts = {});

/// ricci_auto on every edge, in Graph::edges() order, with x < y.
std::vector<CurvatureResult> curvature_all(const Graph& g, const CurvatureOptions& opts = {});

}  // namespace ricci
