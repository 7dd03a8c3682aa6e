#include "ricci/graph.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "ricci/errors.hpp"

namespace ricci {

namespace {

bool sorted_contains(std::span<const Vertex> sorted, Vertex v) {
  return std::binary_search(sorted.begin(), sorted.end(), v);
}

void check_vertex(const Graph& g, Vertex v) {
  if (!g.contains(v)) {
    throw InvalidInput("vertex " + std::to_string(v) + " out of range (graph has " +
                       std::to_string(g.vertex_count()) + " vertices)");
  }
}

void check_edge(const Graph& g, Vertex x, Vertex y) {
  check_vertex(g, x);
  check_vertex(g, y);
  if (!g.has_edge(x, y)) throw NotAnEdge(x, y);
}

// Vertices at distance exactly 2 from `center`, sorted.
std::vector<Vertex> second_shell(const Graph& g, Vertex center) {
  std::vector<Vertex> shell;
  for (Vertex z : g.neighbors(center)) {
    for (Vertex w : g.neighbors(z)) shell.push_back(w);
  }
  std::sort(shell.begin(), shell.end());
  shell.erase(std::unique(shell.begin(), shell.end()), shell.end());
  auto nbrs = g.neighbors(center);
  std::erase_if(shell, [&](Vertex w) { return w == center || sorted_contains(nbrs, w); });
  return shell;
}

}  // namespace

Graph Graph::from_edges(std::span<const std::pair<std::uint64_t, std::uint64_t>> pairs,
                        std::size_t min_vertex_count) {
  std::vector<Edge> edges;
  edges.reserve(pairs.size());
  for (const auto& [a, b] : pairs) {
    if (a > kMaxVertexId || b > kMaxVertexId) {
      throw InvalidInput("vertex id overflow in pair (" + std::to_string(a) + "," +
                         std::to_string(b) + ")");
    }
    if (a == b) {
      throw InvalidInput("self-loop (" + std::to_string(a) + "," + std::to_string(b) + ")");
    }
    edges.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
  }
  return from_edges(edges, min_vertex_count);
}

Graph Graph::from_edges(std::span<const Edge> input, std::size_t min_vertex_count) {
  std::vector<Edge> edges(input.begin(), input.end());
  std::size_t n = min_vertex_count;
  for (const Edge& e : edges) {
    if (e.u == e.v) {
      throw InvalidInput("self-loop (" + std::to_string(e.u) + "," + std::to_string(e.v) + ")");
    }
    if (e.v > kMaxVertexId) throw InvalidInput("vertex id overflow: " + std::to_string(e.v));
    n = std::max<std::size_t>(n, std::size_t{e.v} + 1);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

  Graph g;
  g.offsets_.assign(n + 1, 0);
  for (const Edge& e : edges) {
    ++g.offsets_[e.u + 1];
    ++g.offsets_[e.v + 1];
  }
  for (std::size_t i = 0; i < n; ++i) g.offsets_[i + 1] += g.offsets_[i];
  g.targets_.resize(2 * edges.size());
  std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  // Edges are sorted by (u, v), so each list receives its entries in
  // ascending order: smaller partners arrive as e.v first, larger as e.u.
  for (const Edge& e : edges) g.targets_[cursor[e.v]++] = e.u;
  for (const Edge& e : edges) g.targets_[cursor[e.u]++] = e.v;
  for (std::size_t v = 0; v < n; ++v) {
    std::sort(g.targets_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v]),
              g.targets_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v + 1]));
  }
  return g;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (!contains(u) || !contains(v)) return false;
  return sorted_contains(neighbors(u), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count());
  for (Vertex u = 0; u < vertex_count(); ++u) {
    for (Vertex v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

std::size_t Graph::min_degree() const {
  std::size_t best = 0;
  for (Vertex v = 0; v < vertex_count(); ++v) best = v == 0 ? degree(v) : std::min(best, degree(v));
  return best;
}

std::size_t Graph::max_degree() const {
  std::size_t best = 0;
  for (Vertex v = 0; v < vertex_count(); ++v) best = std::max(best, degree(v));
  return best;
}

Graph build_graph(std::span<const std::pair<std::uint64_t, std::uint64_t>> pairs) {
  return Graph::from_edges(pairs);
}

std::vector<int> bfs_distance_capped(const Graph& g, Vertex source, int cap) {
  check_vertex(g, source);
  if (cap < 0) throw InvalidInput("negative BFS cap");
  std::vector<int> dist(g.vertex_count(), kUnreached);
  std::vector<Vertex> frontier{source};
  dist[source] = 0;
  for (int level = 0; level < cap && !frontier.empty(); ++level) {
    std::vector<Vertex> next;
    for (Vertex u : frontier) {
      for (Vertex w : g.neighbors(u)) {
        if (dist[w] == kUnreached) {
          dist[w] = level + 1;
          next.push_back(w);
        }
      }
    }
    frontier = std::move(next);
  }
  return dist;
}

namespace {

// Shortest cycle length below `limit`, or `limit` if there is none. A BFS
// from every source; a non-tree edge (u, w) closes a walk of length
// d(u) + d(w) + 1 that contains a cycle no longer than that, and for a source
// on a shortest cycle the bound is attained.
std::size_t shortest_cycle_below(const Graph& g, std::size_t limit) {
  const std::size_t n = g.vertex_count();
  std::size_t best = limit;
  std::vector<std::size_t> dist(n, SIZE_MAX);
  std::vector<Vertex> parent(n, 0);
  std::vector<Vertex> touched;
  std::deque<Vertex> queue;
  for (Vertex s = 0; s < n; ++s) {
    if (g.degree(s) < 2) continue;
    for (Vertex t : touched) dist[t] = SIZE_MAX;
    touched.clear();
    queue.clear();
    dist[s] = 0;
    parent[s] = s;
    touched.push_back(s);
    queue.push_back(s);
    while (!queue.empty()) {
      Vertex u = queue.front();
      queue.pop_front();
      if (2 * dist[u] >= best) break;
      for (Vertex w : g.neighbors(u)) {
        if (dist[w] == SIZE_MAX) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          touched.push_back(w);
          queue.push_back(w);
        } else if (w != parent[u]) {
          best = std::min(best, dist[u] + dist[w] + 1);
        }
      }
    }
    if (best == 3) break;
  }
  return best;
}

}  // namespace

std::optional<std::size_t> girth(const Graph& g) {
  std::size_t best = shortest_cycle_below(g, SIZE_MAX);
  if (best == SIZE_MAX) return std::nullopt;
  return best;
}

bool girth_at_least(const Graph& g, std::size_t k) {
  if (k <= 3) return true;
  return shortest_cycle_below(g, k) >= k;
}

BipartiteCheck check_bipartite(const Graph& g) {
  const std::size_t n = g.vertex_count();
  BipartiteCheck result;
  result.colour.assign(n, -1);
  std::vector<Vertex> parent(n, 0);
  std::vector<std::size_t> depth(n, 0);
  for (Vertex s = 0; s < n; ++s) {
    if (result.colour[s] != -1) continue;
    result.colour[s] = 0;
    parent[s] = s;
    std::deque<Vertex> queue{s};
    while (!queue.empty()) {
      Vertex u = queue.front();
      queue.pop_front();
      for (Vertex w : g.neighbors(u)) {
        if (result.colour[w] == -1) {
          result.colour[w] = 1 - result.colour[u];
          parent[w] = u;
          depth[w] = depth[u] + 1;
          queue.push_back(w);
        } else if (result.colour[w] == result.colour[u]) {
          // Same depth parity: walk both tree paths up to their meeting point.
          std::vector<Vertex> left{u};
          std::vector<Vertex> right{w};
          Vertex a = u;
          Vertex b = w;
          while (depth[a] > depth[b]) left.push_back(a = parent[a]);
          while (depth[b] > depth[a]) right.push_back(b = parent[b]);
          while (a != b) {
            left.push_back(a = parent[a]);
            right.push_back(b = parent[b]);
          }
          right.pop_back();
          result.bipartite = false;
          result.colour.clear();
          result.odd_cycle = std::move(left);
          result.odd_cycle.insert(result.odd_cycle.end(), right.rbegin(), right.rend());
          return result;
        }
      }
    }
  }
  return result;
}

std::vector<std::size_t> connected_components(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::size_t> comp(n, SIZE_MAX);
  std::size_t next = 0;
  for (Vertex s = 0; s < n; ++s) {
    if (comp[s] != SIZE_MAX) continue;
    comp[s] = next;
    std::vector<Vertex> stack{s};
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(u)) {
        if (comp[w] == SIZE_MAX) {
          comp[w] = next;
          stack.push_back(w);
        }
      }
    }
    ++next;
  }
  return comp;
}

bool is_connected(const Graph& g) {
  auto comp = connected_components(g);
  return std::all_of(comp.begin(), comp.end(), [](std::size_t c) { return c == 0; });
}

NeighborPartition neighbor_partition(const Graph& g, Vertex x, Vertex y) {
  check_edge(g, x, y);
  NeighborPartition part;
  part.x = x;
  part.y = y;
  auto nx = g.neighbors(x);
  auto ny = g.neighbors(y);
  std::set_intersection(nx.begin(), nx.end(), ny.begin(), ny.end(),
                        std::back_inserter(part.delta));

  auto classify = [&](Vertex self, Vertex other, std::span<const Vertex> own,
                      std::span<const Vertex> others, std::vector<Vertex>& n0,
                      std::vector<Vertex>& n1, std::vector<Vertex>& n2) {
    // Neighbour of `other` that is not `self` itself.
    auto is_far_neighbor = [&](Vertex w) { return w != self && sorted_contains(others, w); };
    for (Vertex z : own) {
      if (z == other || sorted_contains(part.delta, z)) continue;
      auto zn = g.neighbors(z);
      if (std::any_of(zn.begin(), zn.end(), is_far_neighbor)) {
        n1.push_back(z);
        continue;
      }
      bool on_five_cycle = std::any_of(zn.begin(), zn.end(), [&](Vertex p) {
        if (p == self || p == other) return false;
        auto pn = g.neighbors(p);
        return std::any_of(pn.begin(), pn.end(), is_far_neighbor);
      });
      (on_five_cycle ? n2 : n0).push_back(z);
    }
  };
  classify(x, y, nx, ny, part.n0_x, part.n1_x, part.n2_x);
  classify(y, x, ny, nx, part.n0_y, part.n1_y, part.n2_y);

  auto shell_x = second_shell(g, x);
  auto shell_y = second_shell(g, y);
  std::set_intersection(shell_x.begin(), shell_x.end(), shell_y.begin(), shell_y.end(),
                        std::back_inserter(part.p_xy));
  return part;
}

std::size_t CoreNeighborhood::local_id(Vertex global) const {
  auto it = std::lower_bound(vertices.begin(), vertices.end(), global);
  if (it == vertices.end() || *it != global) {
    throw InvalidInput("vertex " + std::to_string(global) + " is not in the core");
  }
  return static_cast<std::size_t>(it - vertices.begin());
}

std::vector<std::uint8_t> CoreNeighborhood::local_distances() const {
  const std::size_t n = size();
  std::vector<std::uint8_t> out(n * n, 4);
  for (Vertex s = 0; s < n; ++s) {
    auto dist = bfs_distance_capped(local, s, 3);
    for (std::size_t t = 0; t < n; ++t) {
      if (dist[t] != kUnreached) out[s * n + t] = static_cast<std::uint8_t>(dist[t]);
    }
  }
  return out;
}

CoreNeighborhood core_neighborhood(const Graph& g, Vertex x, Vertex y) {
  CoreNeighborhood core;
  core.partition = neighbor_partition(g, x, y);
  const auto& part = core.partition;
  auto nx = g.neighbors(x);
  auto ny = g.neighbors(y);
  core.rows.assign(nx.begin(), nx.end());
  core.cols.assign(ny.begin(), ny.end());

  std::vector<Vertex> both;
  std::set_union(nx.begin(), nx.end(), ny.begin(), ny.end(), std::back_inserter(both));
  std::set_union(both.begin(), both.end(), part.p_xy.begin(), part.p_xy.end(),
                 std::back_inserter(core.vertices));

  auto in_delta = [&](Vertex v) { return sorted_contains(part.delta, v); };
  auto in_p = [&](Vertex v) { return sorted_contains(part.p_xy, v); };
  std::vector<Edge> local_edges;
  for (std::size_t i = 0; i < core.vertices.size(); ++i) {
    Vertex u = core.vertices[i];
    for (Vertex w : g.neighbors(u)) {
      if (w <= u) continue;
      auto it = std::lower_bound(core.vertices.begin(), core.vertices.end(), w);
      if (it == core.vertices.end() || *it != w) continue;
      if ((in_delta(u) && in_p(w)) || (in_p(u) && in_delta(w))) continue;
      local_edges.emplace_back(static_cast<Vertex>(i),
                               static_cast<Vertex>(it - core.vertices.begin()));
    }
  }
  core.local = Graph::from_edges(local_edges, core.vertices.size());

  // Rows and columns are at most 3 apart through x and y, so a depth-2
  // search from each row settles every entry.
  const std::size_t n = core.size();
  std::vector<std::uint8_t> near(n, 0);
  std::vector<std::size_t> col_ids(core.cols.size());
  for (std::size_t c = 0; c < core.cols.size(); ++c) col_ids[c] = core.local_id(core.cols[c]);
  core.cross_distance.assign(core.rows.size() * core.cols.size(), 3);
  for (std::size_t r = 0; r < core.rows.size(); ++r) {
    std::fill(near.begin(), near.end(), 0);
    Vertex lr = static_cast<Vertex>(core.local_id(core.rows[r]));
    near[lr] = 1;
    for (Vertex a : core.local.neighbors(lr)) near[a] = 2;
    for (Vertex a : core.local.neighbors(lr)) {
      for (Vertex b : core.local.neighbors(a)) {
        if (near[b] == 0) near[b] = 3;
      }
    }
    for (std::size_t c = 0; c < core.cols.size(); ++c) {
      // near: 1 = itself, 2 = adjacent, 3 = two steps, 0 = farther.
      std::uint8_t mark = near[col_ids[c]];
      core.cross_distance[r * core.cols.size() + c] =
          mark == 0 ? std::uint8_t{3} : static_cast<std::uint8_t>(mark - 1);
    }
  }
  return core;
}

Graph read_edge_list(std::istream& in) {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;
    std::istringstream tokens(line);
    std::string a, b, extra;
    tokens >> a >> b;
    if (b.empty() || (tokens >> extra)) {
      throw InvalidInput("line " + std::to_string(line_no) + ": expected two vertex ids");
    }
    auto parse = [&](const std::string& tok) {
      std::uint64_t value = 0;
      auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
      if (ec == std::errc::result_out_of_range) {
        throw InvalidInput("line " + std::to_string(line_no) + ": vertex id overflow '" + tok + "'");
      }
      if (ec != std::errc() || ptr != tok.data() + tok.size()) {
        throw InvalidInput("line " + std::to_string(line_no) + ": bad vertex id '" + tok + "'");
      }
      return value;
    };
    pairs.emplace_back(parse(a), parse(b));
  }
  try {
    return build_graph(pairs);
  } catch (const InvalidInput& e) {
    throw InvalidInput(std::string("edge list: ") + e.what());
  }
}

Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open graph file '" + path + "'");
  return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << "# " << g.vertex_count() << " vertices, " << g.edge_count() << " edges\n";
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

}  // namespace ricci
