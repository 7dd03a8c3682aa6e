#include "ricci/min_cost_flow.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <queue>
#include <stdexcept>

namespace ricci {

MinCostFlow::MinCostFlow(std::size_t node_count)
    : node_count_(node_count), out_(node_count + 2), supply_(node_count, 0) {}

void MinCostFlow::add_residual_pair(Node from, Node to, std::int64_t capacity, std::int64_t cost) {
  out_[from].push_back(arcs_.size());
  arcs_.push_back({to, capacity, cost});
  out_[to].push_back(arcs_.size());
  arcs_.push_back({from, 0, -cost});
}

MinCostFlow::ArcId MinCostFlow::add_arc(Node from, Node to, std::int64_t capacity,
                                        std::int64_t cost) {
  if (from >= node_count_ || to >= node_count_) throw std::out_of_range("MinCostFlow: bad node");
  if (capacity < 0 || cost < 0) throw std::invalid_argument("MinCostFlow: negative capacity/cost");
  add_residual_pair(from, to, capacity, cost);
  capacity_.push_back(capacity);
  return capacity_.size() - 1;
}

void MinCostFlow::set_supply(Node node, std::int64_t supply) {
  if (node >= node_count_) throw std::out_of_range("MinCostFlow: bad node");
  supply_[node] = supply;
}

std::int64_t MinCostFlow::flow(ArcId arc) const { return capacity_[arc] - arcs_[2 * arc].residual; }

bool MinCostFlow::admissible(Node from, const Arc& arc) const {
  return arc.residual > 0 && arc.cost + potential_[from] - potential_[arc.to] == 0;
}

bool MinCostFlow::shortest_paths(Node source, Node sink) {
  constexpr std::int64_t kUnset = INT64_MAX;
  std::vector<std::int64_t> dist(out_.size(), kUnset);
  using Entry = std::pair<std::int64_t, std::size_t>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
  dist[source] = 0;
  heap.emplace(0, source);
  while (!heap.empty()) {
    auto [d, u] = heap.top();
    heap.pop();
    if (d != dist[u]) continue;
    for (std::size_t id : out_[u]) {
      const Arc& arc = arcs_[id];
      if (arc.residual == 0) continue;
      std::int64_t nd = d + arc.cost + potential_[u] - potential_[arc.to];
      if (nd < dist[arc.to]) {
        dist[arc.to] = nd;
        heap.emplace(nd, arc.to);
      }
    }
  }
  if (dist[sink] == kUnset) return false;
  for (std::size_t v = 0; v < out_.size(); ++v) potential_[v] += std::min(dist[v], dist[sink]);
  return true;
}

std::int64_t MinCostFlow::push(Node node, Node sink, std::int64_t limit) {
  if (node == sink) return limit;
  for (std::size_t& i = next_arc_[node]; i < out_[node].size(); ++i) {
    Arc& arc = arcs_[out_[node][i]];
    if (!admissible(node, arc) || level_[arc.to] != level_[node] + 1) continue;
    std::int64_t pushed = push(arc.to, sink, std::min(limit, arc.residual));
    if (pushed > 0) {
      arc.residual -= pushed;
      arcs_[out_[node][i] ^ 1].residual += pushed;
      return pushed;
    }
  }
  return 0;
}

std::int64_t MinCostFlow::blocking_flow(Node source, Node sink) {
  std::int64_t total = 0;
  while (true) {
    level_.assign(out_.size(), -1);
    level_[source] = 0;
    std::deque<std::size_t> queue{source};
    while (!queue.empty()) {
      std::size_t u = queue.front();
      queue.pop_front();
      for (std::size_t id : out_[u]) {
        const Arc& arc = arcs_[id];
        if (level_[arc.to] < 0 && admissible(u, arc)) {
          level_[arc.to] = level_[u] + 1;
          queue.push_back(arc.to);
        }
      }
    }
    if (level_[sink] < 0) return total;
    next_arc_.assign(out_.size(), 0);
    while (std::int64_t pushed = push(source, sink, kInfinite)) total += pushed;
  }
}

std::int64_t MinCostFlow::solve() {
  const Node source = node_count_;
  const Node sink = node_count_ + 1;
  std::int64_t balance = 0;
  std::int64_t required = 0;
  for (Node v = 0; v < node_count_; ++v) {
    balance += supply_[v];
    if (supply_[v] > 0) {
      add_residual_pair(source, v, supply_[v], 0);
      required += supply_[v];
    } else if (supply_[v] < 0) {
      add_residual_pair(v, sink, -supply_[v], 0);
    }
  }
  if (balance != 0) throw std::runtime_error("MinCostFlow: supplies do not balance");
  potential_.assign(out_.size(), 0);

  std::int64_t sent = 0;
  while (sent < required) {
    if (!shortest_paths(source, sink)) throw std::runtime_error("MinCostFlow: infeasible");
    sent += blocking_flow(source, sink);
  }

  std::int64_t cost = 0;
  for (ArcId a = 0; a < capacity_.size(); ++a) cost += flow(a) * arcs_[2 * a].cost;
  return cost;
}

}  // namespace ricci
