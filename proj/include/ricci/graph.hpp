#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace ricci {

using Vertex = std::uint32_t;

/// Undirected edge, always stored with first < second.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Largest accepted vertex id. Keeps vertex_count() representable as Vertex.
inline constexpr std::uint64_t kMaxVertexId = (std::uint64_t{1} << 31) - 1;

/// Immutable finite simple undirected graph in compressed adjacency form.
///
/// Vertex ids are dense, 0..vertex_count()-1; isolated vertices are allowed.
/// Neighbor lists are sorted ascending, symmetric, free of loops and
/// duplicates. All member functions are const, so a Graph may be shared
/// between threads freely.
class Graph {
 public:
  Graph() = default;

  /// Builds a graph from raw pairs. Duplicate pairs (in either orientation)
  /// collapse to one edge. Throws InvalidInput on a self-loop or an id above
  /// kMaxVertexId. vertex_count is max(min_vertex_count, largest id + 1).
  static Graph from_edges(std::span<const std::pair<std::uint64_t, std::uint64_t>> pairs,
                          std::size_t min_vertex_count = 0);
  static Graph from_edges(std::span<const Edge> edges, std::size_t min_vertex_count = 0);

  std::size_t vertex_count() const { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t edge_count() const { return targets_.size() / 2; }

  std::span<const Vertex> neighbors(Vertex v) const {
    return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
  }
  std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }
  bool contains(Vertex v) const { return v < vertex_count(); }
  bool has_edge(Vertex u, Vertex v) const;

  /// All edges ordered lexicographically by (min endpoint, max endpoint).
  std::vector<Edge> edges() const;

  std::size_t min_degree() const;
  std::size_t max_degree() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::size_t> offsets_;
  std::vector<Vertex> targets_;
};

/// build_graph: the edge-list entry point of the graph module.
Graph build_graph(std::span<const std::pair<std::uint64_t, std::uint64_t>> pairs);

inline constexpr int kUnreached = -1;

/// BFS distances from `source`, truncated at `cap`. Entry v is the distance
/// if it is <= cap, kUnreached otherwise. Throws InvalidInput if `source`
/// is out of range or cap is negative.
std::vector<int> bfs_distance_capped(const Graph& g, Vertex source, int cap);

/// Length of a shortest cycle, or nullopt for forests.
std::optional<std::size_t> girth(const Graph& g);

/// True iff every cycle has length >= k (forests qualify for every k).
/// Stops early; cheaper than girth() on large graphs when k is small.
bool girth_at_least(const Graph& g, std::size_t k);

/// Proper 2-colouring when one exists; otherwise the vertex sequence of an
/// odd cycle (first vertex not repeated at the end).
struct BipartiteCheck {
  bool bipartite = true;
  std::vector<int> colour;
  std::vector<Vertex> odd_cycle;
};
BipartiteCheck check_bipartite(const Graph& g);

/// Component id per vertex, numbered in order of smallest member.
std::vector<std::size_t> connected_components(const Graph& g);
bool is_connected(const Graph& g);

/// Classification of the neighbours of an edge (x, y).
///
///  delta   common neighbours of x and y
///  n1_*    neighbours (not y/x, not in delta) adjacent to a neighbour of the
///          other endpoint other than the endpoint itself: on a 4-cycle
///          through the edge
///  n2_*    remaining neighbours joined by a path z - p - w, p outside
///          {x, y}, w a neighbour of the other endpoint: on a 5-cycle
///  n0_*    everything else
///  p_xy    vertices at distance exactly 2 from both x and y
///
/// All sets are sorted ascending.
struct NeighborPartition {
  Vertex x = 0;
  Vertex y = 0;
  std::vector<Vertex> delta;
  std::vector<Vertex> n0_x, n0_y;
  std::vector<Vertex> n1_x, n1_y;
  std::vector<Vertex> n2_x, n2_y;
  std::vector<Vertex> p_xy;
};

/// Throws InvalidInput for out-of-range ids and NotAnEdge if (x, y) is not
/// an edge.
NeighborPartition neighbor_partition(const Graph& g, Vertex x, Vertex y);

/// The reduced neighbourhood of an edge: the subgraph induced by
/// N(x) u N(y) u P(x,y) with every delta--P edge removed.
///
/// The core is stored as a Graph over local ids 0..size()-1; local id i
/// corresponds to global vertex vertices[i] (ascending). cross_distance holds
/// core distances between rows = N(x) and columns = N(y) (both ascending),
/// which are always in {0,1,2,3} and equal the distances in the full graph.
struct CoreNeighborhood {
  NeighborPartition partition;
  std::vector<Vertex> vertices;
  Graph local;
  std::vector<Vertex> rows;
  std::vector<Vertex> cols;
  std::vector<std::uint8_t> cross_distance;

  std::size_t size() const { return vertices.size(); }
  std::size_t local_id(Vertex global) const;
  std::uint8_t cross(std::size_t row, std::size_t col) const {
    return cross_distance[row * cols.size() + col];
  }
  Vertex x() const { return partition.x; }
  Vertex y() const { return partition.y; }

  /// Full pairwise distance matrix over local ids, capped at 4 (so 4 stands
  /// for "4 or more, or disconnected inside the core"). size()^2 entries.
  std::vector<std::uint8_t> local_distances() const;
};

CoreNeighborhood core_neighborhood(const Graph& g, Vertex x, Vertex y);

/// Edge-list text: one "u v" pair per line, '#' comment lines and blank
/// lines ignored. Throws InvalidInput with the offending line number.
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);
void write_edge_list(std::ostream& out, const Graph& g);

}  // namespace ricci
