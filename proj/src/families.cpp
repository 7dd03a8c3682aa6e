#include "ricci/families.hpp"

#include <string>
#include <vector>

#include "ricci/errors.hpp"

namespace ricci {

namespace {

Graph from(const std::vector<Edge>& edges, std::size_t n) { return Graph::from_edges(edges, n); }

std::size_t param(std::span<const std::int64_t> params, std::size_t index, std::int64_t min,
                  std::int64_t max, std::string_view family) {
  auto fail = [&](const std::string& why) {
    throw InvalidInput(std::string(family) + ": " + why);
  };
  if (index >= params.size()) fail("missing parameter " + std::to_string(index + 1));
  std::int64_t v = params[index];
  if (v < min || v > max) {
    fail("parameter " + std::to_string(v) + " outside [" + std::to_string(min) + ", " +
         std::to_string(max) + "]");
  }
  return static_cast<std::size_t>(v);
}

constexpr std::int64_t kMaxFamilySize = 1 << 20;

}  // namespace

Graph path_graph(std::size_t n) {
  if (n < 1) throw InvalidInput("path: n must be >= 1");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return from(edges, n);
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw InvalidInput("cycle: n must be >= 3");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return from(edges, n);
}

Graph star_graph(std::size_t leaves) {
  if (leaves < 1) throw InvalidInput("star: n must be >= 1");
  std::vector<Edge> edges;
  for (std::size_t i = 1; i <= leaves; ++i) edges.emplace_back(0, i);
  return from(edges, leaves + 1);
}

Graph hypercube_graph(std::size_t dimension) {
  if (dimension < 1 || dimension > 20) throw InvalidInput("hypercube: n must be in [1, 20]");
  const std::size_t n = std::size_t{1} << dimension;
  std::vector<Edge> edges;
  for (std::size_t v = 0; v < n; ++v) {
    for (std::size_t bit = 0; bit < dimension; ++bit) {
      std::size_t w = v ^ (std::size_t{1} << bit);
      if (v < w) edges.emplace_back(v, w);
    }
  }
  return from(edges, n);
}

Graph complete_bipartite_graph(std::size_t p, std::size_t q) {
  if (p < 1 || q < 1) throw InvalidInput("complete_bipartite: p and q must be >= 1");
  std::vector<Edge> edges;
  for (std::size_t a = 0; a < p; ++a) {
    for (std::size_t b = 0; b < q; ++b) edges.emplace_back(a, p + b);
  }
  return from(edges, p + q);
}

Graph petersen_graph() {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);
    edges.emplace_back(i, i + 5);
    edges.emplace_back(i + 5, (i + 2) % 5 + 5);
  }
  return from(edges, 10);
}

Graph complete_graph(std::size_t n) {
  if (n < 1) throw InvalidInput("complete: n must be >= 1");
  std::vector<Edge> edges;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) edges.emplace_back(a, b);
  }
  return from(edges, n);
}

Graph generate_family(std::string_view family, std::span<const std::int64_t> params) {
  auto expect_count = [&](std::size_t count) {
    if (params.size() != count) {
      throw InvalidInput(std::string(family) + ": expected " + std::to_string(count) +
                         " parameter(s), got " + std::to_string(params.size()));
    }
  };
  if (family == "path") {
    expect_count(1);
    return path_graph(param(params, 0, 1, kMaxFamilySize, family));
  }
  if (family == "cycle") {
    expect_count(1);
    return cycle_graph(param(params, 0, 3, kMaxFamilySize, family));
  }
  if (family == "star") {
    expect_count(1);
    return star_graph(param(params, 0, 1, kMaxFamilySize, family));
  }
  if (family == "hypercube") {
    expect_count(1);
    return hypercube_graph(param(params, 0, 1, 20, family));
  }
  if (family == "complete_bipartite") {
    expect_count(2);
    return complete_bipartite_graph(param(params, 0, 1, 4096, family),
                                    param(params, 1, 1, 4096, family));
  }
  if (family == "petersen") {
    expect_count(0);
    return petersen_graph();
  }
  if (family == "complete") {
    expect_count(1);
    return complete_graph(param(params, 0, 1, 4096, family));
  }
  throw InvalidInput("unknown family '" + std::string(family) + "'");
}

}  // namespace ricci
