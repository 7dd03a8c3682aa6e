#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace ricci {

/// Exact integral min-cost flow with nonnegative integer arc costs.
///
/// Primal-dual method: Dijkstra on reduced costs fixes node potentials, then
/// a Dinic blocking flow saturates the zero-reduced-cost subnetwork. Each
/// phase raises the shortest augmenting-path cost, so the number of phases
/// is bounded by the largest path cost, which is tiny for transport problems
/// with costs in {0,...,3}.
class MinCostFlow {
 public:
  using Node = std::size_t;
  using ArcId = std::size_t;
  static constexpr std::int64_t kInfinite = INT64_MAX / 4;

  explicit MinCostFlow(std::size_t node_count);

  ArcId add_arc(Node from, Node to, std::int64_t capacity, std::int64_t cost);
  /// Positive supply is a source, negative is a demand. Must sum to zero.
  void set_supply(Node node, std::int64_t supply);

  /// Solves and returns the optimal total cost. Throws std::runtime_error if
  /// the supplies cannot be routed.
  std::int64_t solve();

  std::int64_t flow(ArcId arc) const;

 private:
  struct Arc {
    std::size_t to;
    std::int64_t residual;
    std::int64_t cost;
  };

  void add_residual_pair(Node from, Node to, std::int64_t capacity, std::int64_t cost);
  bool shortest_paths(Node source, Node sink);
  std::int64_t blocking_flow(Node source, Node sink);
  std::int64_t push(Node node, Node sink, std::int64_t limit);
  bool admissible(Node from, const Arc& arc) const;

  std::size_t node_count_;
  std::vector<Arc> arcs_;
  std::vector<std::vector<std::size_t>> out_;
  std::vector<std::int64_t> supply_;
  std::vector<std::int64_t> potential_;
  std::vector<std::int64_t> level_;
  std::vector<std::size_t> next_arc_;
  std::vector<std::int64_t> capacity_;  // per user arc, for flow()
};

}  // namespace ricci
