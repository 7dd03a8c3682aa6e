#include "ricci/curvature.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "ricci/errors.hpp"
#include "ricci/parallel.hpp"

namespace ricci {

std::string_view to_string(Method m) {
  switch (m) {
    case Method::lp: return "lp";
    case Method::tree_girth6: return "tree_girth6";
    case Method::bipartite: return "bipartite";
    case Method::girth5: return "girth5";
    case Method::oracle: return "oracle";
  }
  return "unknown";
}

std::string_view to_string(BoundSource s) {
  switch (s) {
    case BoundSource::jost_liu: return "jost_liu";
    case BoundSource::triangle_free: return "triangle_free";
    case BoundSource::matching: return "matching";
    case BoundSource::two_matching: return "two_matching";
    case BoundSource::bipartite_upper: return "bipartite_upper";
    case BoundSource::cho_paeng_girth5: return "cho_paeng_girth5";
  }
  return "unknown";
}

GraphClass classify_graph(const Graph& g) {
  GraphClass cls;
  cls.bipartite = check_bipartite(g).bipartite;
  cls.girth_at_least_5 = girth_at_least(g, 5);
  return cls;
}

namespace {

struct Degrees {
  std::int64_t dx;
  std::int64_t dy;
};

Degrees degrees(const Graph& g, Vertex x, Vertex y) {
  return {static_cast<std::int64_t>(g.degree(x)), static_cast<std::int64_t>(g.degree(y))};
}

Rational frac(std::size_t count, std::int64_t d) { return Rational(static_cast<std::int64_t>(count), d); }

// comp ∩ upper, comp ∩ lower for each connected component of the subgraph
// of g induced by upper u lower u extra (all sorted, disjoint).
struct Component {
  std::vector<Vertex> upper;
  std::vector<Vertex> lower;
};

std::vector<Component> components(const Graph& g, const std::vector<Vertex>& upper,
                                             const std::vector<Vertex>& lower,
                                             const std::vector<Vertex>& extra = {}) {
  std::vector<Vertex> members;
  members.reserve(upper.size() + lower.size() + extra.size());
  members.insert(members.end(), upper.begin(), upper.end());
  members.insert(members.end(), lower.begin(), lower.end());
  members.insert(members.end(), extra.begin(), extra.end());
  std::sort(members.begin(), members.end());

  std::vector<std::size_t> parent(members.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  auto index_of = [&](Vertex v) -> std::size_t {
    auto it = std::lower_bound(members.begin(), members.end(), v);
    return it != members.end() && *it == v ? static_cast<std::size_t>(it - members.begin()) : members.size();
  };
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (Vertex w : g.neighbors(members[i])) {
      std::size_t j = index_of(w);
      if (j == members.size()) continue;
      std::size_t a = find(i), b = find(j);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }

  std::vector<std::size_t> slot(members.size(), members.size());
  std::vector<Component> out;
  for (std::size_t i = 0; i < members.size(); ++i) {
    std::size_t root = find(i);
    if (slot[root] == members.size()) {
      slot[root] = out.size();
      out.emplace_back();
    }
  }
  for (Vertex v : upper) out[slot[find(index_of(v))]].upper.push_back(v);
  for (Vertex v : lower) out[slot[find(index_of(v))]].lower.push_back(v);
  return out;
}

bool bipartite_exact(const Graph& g, const NeighborPartition& p) {
  for (const auto& c : components(g, p.n1_x, p.n1_y))
    for (Vertex u : c.upper)
      for (Vertex l : c.lower)
        if (!g.has_edge(u, l)) return false;
  return true;
}

bool girth5_exact(const Graph& g, const NeighborPartition& p) {
  auto in_p = [&](Vertex v) { return std::binary_search(p.p_xy.begin(), p.p_xy.end(), v); };
  for (const auto& c : components(g, p.n2_x, p.n2_y, p.p_xy)) {
    for (Vertex u : c.upper) {
      for (Vertex l : c.lower) {
        auto a = g.neighbors(u);
        auto b = g.neighbors(l);
        bool linked = false;
        for (auto i = a.begin(), j = b.begin(); i != a.end() && j != b.end() && !linked;) {
          if (*i < *j) ++i;
          else if (*j < *i) ++j;
          else linked = in_p(*i);
        }
        if (!linked) return false;
      }
    }
  }
  return true;
}

bool girth6_applies(const NeighborPartition& p) {
  return p.delta.empty() && p.n1_x.empty() && p.n1_y.empty() && p.n2_x.empty() && p.n2_y.empty() &&
         p.p_xy.empty();
}

Rational tree_value(Degrees d) {
  return Rational(-2) * positive_part(Rational(1) - Rational(1, d.dx) - Rational(1, d.dy));
}

CurvatureResult bipartite_from_partition(const Graph& g, const NeighborPartition& p) {
  const Degrees d = degrees(g, p.x, p.y);
  Rational inner = Rational(1) - Rational(1, d.dx) - Rational(1, d.dy) - frac(p.n1_y.size(), d.dy);
  for (const auto& c : components(g, p.n1_x, p.n1_y)) {
    Rational u = frac(c.upper.size(), d.dx);
    Rational l = frac(c.lower.size(), d.dy);
    if (u < l) inner += l - u;
  }
  CurvatureResult r;
  r.x = p.x;
  r.y = p.y;
  r.kappa = Rational(-2) * positive_part(inner);
  r.method = Method::bipartite;
  return r;
}

CurvatureResult girth5_from_partition(const Graph& g, const NeighborPartition& p) {
  const Degrees d = degrees(g, p.x, p.y);
  Girth5Breakdown b;
  b.kappa0 = -positive_part(Rational(1) - Rational(1, d.dx) - Rational(1, d.dy));
  Rational inner = Rational(2) - Rational(2, d.dx) - Rational(2, d.dy) - frac(p.n2_x.size(), d.dx);
  for (const auto& c : components(g, p.n2_x, p.n2_y, p.p_xy)) {
    Rational u = frac(c.upper.size(), d.dx);
    Rational l = frac(c.lower.size(), d.dy);
    if (u >= l) inner += u - l;
  }
  b.kappa1 = -positive_part(inner);
  CurvatureResult r;
  r.x = p.x;
  r.y = p.y;
  r.kappa = std::min(b.kappa0, b.kappa1);
  r.method = Method::girth5;
  r.detail = b;
  return r;
}

CurvatureResult girth6_from_partition(const Graph& g, const NeighborPartition& p) {
  if (!girth6_applies(p)) {
    throw NotApplicable("girth-6 formula not applicable: a 3-, 4- or 5-cycle is supported on (" +
                        std::to_string(p.x) + "," + std::to_string(p.y) + ")");
  }
  CurvatureResult r;
  r.x = p.x;
  r.y = p.y;
  r.kappa = tree_value(degrees(g, p.x, p.y));
  r.method = Method::tree_girth6;
  return r;
}

[[noreturn]] void throw_not_bipartite(const Graph& g) {
  auto check = check_bipartite(g);
  std::string cycle;
  for (Vertex v : check.odd_cycle) cycle += (cycle.empty() ? "" : " ") + std::to_string(v);
  throw NotApplicable("bipartite formula not applicable: odd cycle " + cycle);
}

}  // namespace

CurvatureResult ricci_lp(const Graph& g, Vertex x, Vertex y, const CurvatureOptions& opts) {
  auto core = core_neighborhood(g, x, y);
  CurvatureResult r;
  r.x = x;
  r.y = y;
  r.method = Method::lp;
  if ((opts.attach_certificates || opts.verify) && core.size() <= opts.oracle_cap) {
    W1Result w = verify_duality(core, opts.oracle_cap);
    r.kappa = Rational(1) - w.value;
    if (opts.attach_certificates) r.certificates = std::move(w);
  } else {
    r.kappa = Rational(1) - w1_primal(core).value;
  }
  return r;
}

CurvatureResult ricci_oracle(const Graph& g, Vertex x, Vertex y, std::size_t cap) {
  auto core = core_neighborhood(g, x, y);
  CurvatureResult r;
  r.x = x;
  r.y = y;
  r.method = Method::oracle;
  r.kappa = Rational(1) - w1_dual_oracle(core, cap).value;
  return r;
}

CurvatureResult ricci_girth6_formula(const Graph& g, Vertex x, Vertex y) {
  return girth6_from_partition(g, neighbor_partition(g, x, y));
}

CurvatureResult ricci_bipartite_formula(const Graph& g, Vertex x, Vertex y) {
  return ricci_bipartite_formula(g, classify_graph(g), x, y);
}

CurvatureResult ricci_bipartite_formula(const Graph& g, const GraphClass& cls, Vertex x, Vertex y) {
  auto p = neighbor_partition(g, x, y);
  if (!cls.bipartite) throw_not_bipartite(g);
  return bipartite_from_partition(g, p);
}

CurvatureResult ricci_girth5_formula(const Graph& g, Vertex x, Vertex y) {
  return ricci_girth5_formula(g, classify_graph(g), x, y);
}

CurvatureResult ricci_girth5_formula(const Graph& g, const GraphClass& cls, Vertex x, Vertex y) {
  auto p = neighbor_partition(g, x, y);
  if (!cls.girth_at_least_5) {
    throw NotApplicable("girth-5 formula not applicable: girth is " + std::to_string(*girth(g)));
  }
  return girth5_from_partition(g, p);
}

bool bipartite_formula_exact(const Graph& g, Vertex x, Vertex y) {
  return bipartite_exact(g, neighbor_partition(g, x, y));
}

bool girth5_formula_exact(const Graph& g, Vertex x, Vertex y) {
  return girth5_exact(g, neighbor_partition(g, x, y));
}

std::vector<BoundPair> jost_liu_bounds(const Graph& g, Vertex x, Vertex y) {
  return jost_liu_bounds(g, classify_graph(g), x, y);
}

std::vector<BoundPair> jost_liu_bounds(const Graph& g, const GraphClass& cls, Vertex x, Vertex y) {
  auto p = neighbor_partition(g, x, y);
  const Degrees d = degrees(g, x, y);
  const std::int64_t hi = std::max(d.dx, d.dy);
  const std::int64_t lo = std::min(d.dx, d.dy);
  const auto tri = static_cast<std::int64_t>(p.delta.size());
  const Rational base = Rational(1) - Rational(1, d.dx) - Rational(1, d.dy);

  std::vector<BoundPair> out;
  BoundPair jl;
  jl.upper = Rational(tri, hi);
  jl.lower = jl.upper - positive_part(base - Rational(tri, lo)) - positive_part(base - Rational(tri, hi));
  jl.source = BoundSource::jost_liu;
  out.push_back(jl);
  if (tri == 0) {
    BoundPair tf;
    tf.lower = Rational(-2) * positive_part(base);
    tf.upper = Rational(0);
    tf.source = BoundSource::triangle_free;
    out.push_back(tf);
  }
  if (cls.girth_at_least_5 && g.min_degree() >= 2) {
    BoundPair cp;
    cp.lower = Rational(-2);
    cp.upper = Rational(-1) + Rational(2, static_cast<std::int64_t>(g.min_degree()));
    cp.source = BoundSource::cho_paeng_girth5;
    out.push_back(cp);
  }
  return out;
}

BoundPair bipartite_upper_bound(const Graph& g, Vertex x, Vertex y) {
  auto p = neighbor_partition(g, x, y);
  if (!check_bipartite(g).bipartite) throw_not_bipartite(g);
  const Degrees d = degrees(g, x, y);
  const Rational base = Rational(1) - Rational(1, d.dx) - Rational(1, d.dy);
  BoundPair b;
  b.upper = Rational(-2) * positive_part(base - std::min(frac(p.n1_x.size(), d.dx), frac(p.n1_y.size(), d.dy)));
  b.lower = Rational(-2) * positive_part(base);
  b.source = BoundSource::bipartite_upper;
  b.r_connected = components(g, p.n1_x, p.n1_y).size() <= 1;
  return b;
}

CurvatureResult ricci_auto(const Graph& g, Vertex x, Vertex y, const CurvatureOptions& opts) {
  return ricci_auto(g, classify_graph(g), x, y, opts);
}

CurvatureResult ricci_auto(const Graph& g, const GraphClass& cls, Vertex x, Vertex y,
                           const CurvatureOptions& opts) {
  auto p = neighbor_partition(g, x, y);
  CurvatureResult r;
  if (girth6_applies(p)) {
    r = girth6_from_partition(g, p);
  } else if (cls.bipartite && bipartite_exact(g, p)) {
    r = bipartite_from_partition(g, p);
  } else if (cls.girth_at_least_5 && girth5_exact(g, p)) {
    r = girth5_from_partition(g, p);
  } else {
    return ricci_lp(g, x, y, opts);
  }
  if (opts.verify || opts.attach_certificates) {
    CurvatureResult lp = ricci_lp(g, x, y, opts);
    if (lp.kappa != r.kappa) {
      throw VerificationMismatch("formula " + std::string(to_string(r.method)) + " gives " + r.kappa.to_string() +
                                 " but LP gives " + lp.kappa.to_string() + " on edge (" + std::to_string(x) +
                                 "," + std::to_string(y) + ")");
    }
    r.certificates = std::move(lp.certificates);
  }
  return r;
}

std::vector<CurvatureResult> curvature_all(const Graph& g, const CurvatureOptions& opts) {
  const GraphClass cls = classify_graph(g);
  const auto edges = g.edges();
  std::vector<CurvatureResult> out(edges.size());
  parallel_for(
      edges.size(), [&](std::size_t i) { out[i] = ricci_auto(g, cls, edges[i].u, edges[i].v, opts); },
      opts.threads ? opts.threads : default_thread_count());
  return out;
}

}  // namespace ricci
