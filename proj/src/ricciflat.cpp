#include "ricci/ricciflat.hpp"

#include <string>

#include "ricci/errors.hpp"
#include "ricci/matching.hpp"

namespace ricci {

std::string_view to_string(FlatClass c) {
  switch (c) {
    case FlatClass::path: return "path";
    case FlatClass::cycle: return "cycle";
    case FlatClass::star: return "star";
    case FlatClass::not_flat: return "not_flat";
    case FlatClass::not_girth5_applicable: return "not_girth5_applicable";
  }
  return "unknown";
}

namespace {

std::string edge_text(const Edge& e) { return "(" + std::to_string(e.u) + "," + std::to_string(e.v) + ")"; }

void record(FlatnessReport& r, const CurvatureResult& c) {
  if (c.kappa == Rational(0) || r.witness_edge) return;
  r.is_flat = false;
  r.witness_edge = Edge{std::min(c.x, c.y), std::max(c.x, c.y)};
  r.witness_kappa = c.kappa;
}

std::optional<FlatClass> family_of(const Graph& g) {
  const std::size_t n = g.vertex_count();
  const std::size_t m = g.edge_count();
  std::size_t deg1 = 0, deg2 = 0;
  for (Vertex v = 0; v < n; ++v) {
    if (g.degree(v) == 1) ++deg1;
    if (g.degree(v) == 2) ++deg2;
  }
  if (n >= 2 && m == n - 1 && deg1 == 2 && deg2 == n - 2) return FlatClass::path;
  if (n >= 5 && m == n && deg2 == n) return FlatClass::cycle;
  if (n >= 4 && m == n - 1 && deg1 == n - 1 && g.max_degree() == n - 1) return FlatClass::star;
  return std::nullopt;
}

}  // namespace

FlatnessReport is_ricci_flat(const Graph& g, const CurvatureOptions& opts) {
  FlatnessReport r;
  for (const auto& c : curvature_all(g, opts)) record(r, c);
  return r;
}

std::vector<ComponentFlatness> is_ricci_flat_by_component(const Graph& g, const CurvatureOptions& opts) {
  auto comp = connected_components(g);
  std::size_t count = 0;
  for (auto c : comp) count = std::max(count, c + 1);
  std::vector<ComponentFlatness> out(count);
  for (Vertex v = 0; v < g.vertex_count(); ++v) out[comp[v]].vertices.push_back(v);
  for (const auto& c : curvature_all(g, opts)) record(out[comp[c.x]].report, c);
  return out;
}

FlatnessReport classify_girth5_flat(const Graph& g, const CurvatureOptions& opts) {
  FlatnessReport r = is_ricci_flat(g, opts);
  auto not_applicable = [&](std::string why) {
    r.classification = FlatClass::not_girth5_applicable;
    r.reason = std::move(why);
    return r;
  };
  if (g.edge_count() == 0) return not_applicable("graph has no edges");
  if (!is_connected(g)) return not_applicable("graph is disconnected");
  if (!girth_at_least(g, 5)) return not_applicable("girth is " + std::to_string(*girth(g)));

  auto family = family_of(g);
  if (family.has_value() != r.is_flat) {
    throw VerificationMismatch(std::string("girth-5 flat classification: structure says ") +
                               (family ? std::string(to_string(*family)) : "not a path, cycle or star") +
                               " but edge-wise curvature says " + (r.is_flat ? "flat" : "not flat"));
  }
  r.classification = family.value_or(FlatClass::not_flat);
  return r;
}

FlatnessReport check_regular_girth4_flat(const Graph& g, const CurvatureOptions& opts) {
  if (g.edge_count() == 0) throw NotApplicable("graph has no edges");
  if (g.min_degree() != g.max_degree()) {
    throw NotApplicable("graph is not regular: degrees range from " + std::to_string(g.min_degree()) + " to " +
                        std::to_string(g.max_degree()));
  }
  auto gi = girth(g);
  if (gi != std::size_t{4}) {
    throw NotApplicable("girth is " + (gi ? std::to_string(*gi) : std::string("infinite")) + ", need 4");
  }

  FlatnessReport r;
  auto curv = curvature_all(g, opts);
  auto edges = g.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    bool perfect = has_perfect_matching_between_neighborhoods(g, edges[i].u, edges[i].v).perfect;
    bool zero = curv[i].kappa == Rational(0);
    if (perfect != zero) {
      throw VerificationMismatch("edge " + edge_text(edges[i]) + ": perfect matching " + (perfect ? "exists" : "absent") +
                                 " but kappa = " + curv[i].kappa.to_string());
    }
    if (!perfect && !r.witness_edge) {
      r.is_flat = false;
      r.witness_edge = edges[i];
      r.witness_kappa = curv[i].kappa;
    }
  }
  return r;
}

}  // namespace ricci
