// Shared fixtures for the test binaries: seeded random graph builders, the
// named corpus, and brute-force oracles that do not share code paths with
// the library routines they check.
#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "ricci/families.hpp"
#include "ricci/graph.hpp"

namespace ricci::testing {

struct NamedGraph {
  std::string name;
  Graph graph;
};

inline Graph graph_of(std::initializer_list<std::pair<std::uint64_t, std::uint64_t>> pairs) {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> v(pairs);
  return build_graph(v);
}

/// Floyd-Warshall over the whole graph; -1 for unreachable.
inline std::vector<std::vector<int>> all_pairs_distances(const Graph& g) {
  const std::size_t n = g.vertex_count();
  constexpr int kInf = 1 << 20;
  std::vector<std::vector<int>> d(n, std::vector<int>(n, kInf));
  for (Vertex v = 0; v < n; ++v) {
    d[v][v] = 0;
    for (Vertex w : g.neighbors(v)) d[v][w] = 1;
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  for (auto& row : d)
    for (int& x : row)
      if (x >= kInf) x = -1;
  return d;
}

/// Girth by deleting each edge in turn and measuring the detour: an
/// exhaustive search independent of the BFS-from-every-vertex routine.
inline std::optional<std::size_t> girth_by_edge_deletion(const Graph& g) {
  std::optional<std::size_t> best;
  auto edges = g.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    std::vector<Edge> rest;
    for (std::size_t j = 0; j < edges.size(); ++j)
      if (j != i) rest.push_back(edges[j]);
    Graph h = Graph::from_edges(rest, g.vertex_count());
    auto d = all_pairs_distances(h);
    int detour = d[edges[i].u][edges[i].v];
    if (detour >= 0 && (!best || static_cast<std::size_t>(detour + 1) < *best)) best = detour + 1;
  }
  return best;
}

/// Uniform random labelled tree on n vertices (random parent attachment).
inline Graph random_tree(std::size_t n, std::mt19937_64& rng) {
  std::vector<Edge> edges;
  for (std::size_t v = 1; v < n; ++v) {
    std::uniform_int_distribution<std::size_t> pick(0, v - 1);
    edges.emplace_back(pick(rng), v);
  }
  return Graph::from_edges(edges, n);
}

inline Graph random_bipartite(std::size_t left, std::size_t right, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (std::size_t a = 0; a < left; ++a)
    for (std::size_t b = 0; b < right; ++b)
      if (coin(rng)) edges.emplace_back(a, left + b);
  if (edges.empty()) edges.emplace_back(0, left);
  return Graph::from_edges(edges, left + right);
}

/// Connected graph with girth >= 5: a random spanning tree plus random
/// chords whose endpoints are at distance >= 4 when added.
inline Graph random_girth5(std::size_t n, std::size_t extra_attempts, std::mt19937_64& rng) {
  Graph g = random_tree(n, rng);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  for (std::size_t t = 0; t < extra_attempts; ++t) {
    Vertex a = static_cast<Vertex>(pick(rng));
    Vertex b = static_cast<Vertex>(pick(rng));
    if (a == b || g.has_edge(a, b)) continue;
    auto d = bfs_distance_capped(g, a, 3);
    if (d[b] != kUnreached) continue;
    auto edges = g.edges();
    edges.emplace_back(a, b);
    g = Graph::from_edges(edges, n);
  }
  return g;
}

inline Graph dodecahedron() {
  // Outer 5-cycle 0..4, middle 10-cycle 5..14, inner 5-cycle 15..19.
  std::vector<Edge> e;
  for (Vertex i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);
    e.emplace_back(i, 5 + 2 * i);
    e.emplace_back(15 + i, 15 + (i + 1) % 5);
    e.emplace_back(15 + i, 6 + 2 * i);
  }
  for (Vertex i = 0; i < 10; ++i) e.emplace_back(5 + i, 5 + (i + 1) % 10);
  return Graph::from_edges(e, 20);
}

/// The named part of the verification corpus.
inline std::vector<NamedGraph> named_corpus() {
  std::vector<NamedGraph> out;
  for (std::size_t n = 2; n <= 10; ++n) out.push_back({"P" + std::to_string(n), path_graph(n)});
  for (std::size_t n = 3; n <= 12; ++n) out.push_back({"C" + std::to_string(n), cycle_graph(n)});
  for (std::size_t n = 3; n <= 8; ++n) out.push_back({"T" + std::to_string(n), star_graph(n)});
  for (std::size_t n = 3; n <= 6; ++n) out.push_back({"K" + std::to_string(n), complete_graph(n)});
  for (std::size_t p = 1; p <= 5; ++p)
    for (std::size_t q = 1; q <= 5; ++q)
      out.push_back({"K" + std::to_string(p) + "," + std::to_string(q),
                     complete_bipartite_graph(p, q)});
  for (std::size_t d = 2; d <= 4; ++d) out.push_back({"Q" + std::to_string(d), hypercube_graph(d)});
  out.push_back({"petersen", petersen_graph()});
  return out;
}

/// The seeded random part of the corpus: 50 trees (<= 30 vertices), 50
/// bipartite graphs (<= 20 vertices), 50 girth >= 5 graphs (<= 20 vertices).
inline std::vector<NamedGraph> random_corpus(std::uint64_t seed = 20240601) {
  std::mt19937_64 rng(seed);
  std::vector<NamedGraph> out;
  for (int i = 0; i < 50; ++i) {
    std::size_t n = std::uniform_int_distribution<std::size_t>(2, 30)(rng);
    out.push_back({"tree" + std::to_string(i), random_tree(n, rng)});
  }
  for (int i = 0; i < 50; ++i) {
    std::size_t left = std::uniform_int_distribution<std::size_t>(1, 10)(rng);
    std::size_t right = std::uniform_int_distribution<std::size_t>(1, 10)(rng);
    double p = std::uniform_real_distribution<double>(0.15, 0.7)(rng);
    out.push_back({"bip" + std::to_string(i), random_bipartite(left, right, p, rng)});
  }
  for (int i = 0; i < 50; ++i) {
    std::size_t n = std::uniform_int_distribution<std::size_t>(5, 20)(rng);
    out.push_back({"g5_" + std::to_string(i), random_girth5(n, 3 * n, rng)});
  }
  return out;
}

inline std::vector<NamedGraph> full_corpus() {
  auto out = named_corpus();
  auto rnd = random_corpus();
  out.insert(out.end(), rnd.begin(), rnd.end());
  return out;
}

}  // namespace ricci::testing
