#include "ricci/matching.hpp"

#include <algorithm>
#include <cstdint>
#include <string>

#include "ricci/errors.hpp"

namespace ricci {

namespace {

struct IndexedInstance {
  std::vector<Vertex> left;
  std::vector<Vertex> right;
  std::vector<std::vector<std::size_t>> adj;  // left index -> sorted right indices
};

std::size_t index_in(const std::vector<Vertex>& sorted, Vertex v, const char* side) {
  auto it = std::lower_bound(sorted.begin(), sorted.end(), v);
  if (it == sorted.end() || *it != v) {
    throw InvalidInput(std::string("matchable pair uses vertex ") + std::to_string(v) + " not in " + side);
  }
  return static_cast<std::size_t>(it - sorted.begin());
}

IndexedInstance index_instance(const MatchingInstance& inst) {
  IndexedInstance out;
  out.left = inst.left;
  out.right = inst.right;
  std::sort(out.left.begin(), out.left.end());
  std::sort(out.right.begin(), out.right.end());
  out.left.erase(std::unique(out.left.begin(), out.left.end()), out.left.end());
  out.right.erase(std::unique(out.right.begin(), out.right.end()), out.right.end());
  for (Vertex v : out.left) {
    if (std::binary_search(out.right.begin(), out.right.end(), v)) {
      throw InvalidInput("vertex " + std::to_string(v) + " is on both sides of the matching instance");
    }
  }
  out.adj.resize(out.left.size());
  for (auto [a, b] : inst.adjacency) {
    out.adj[index_in(out.left, a, "left")].push_back(index_in(out.right, b, "right"));
  }
  for (auto& list : out.adj) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
  }
  return out;
}

class Kuhn {
 public:
  explicit Kuhn(const IndexedInstance& inst)
      : inst_(inst), match_right_(inst.right.size(), kNone), seen_(inst.right.size(), 0) {}

  std::vector<std::size_t> run() {
    for (std::size_t a = 0; a < inst_.left.size(); ++a) {
      ++stamp_;
      augment(a);
    }
    return match_right_;
  }

  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

 private:
  bool augment(std::size_t a) {
    for (std::size_t b : inst_.adj[a]) {
      if (seen_[b] == stamp_) continue;
      seen_[b] = stamp_;
      if (match_right_[b] == kNone || augment(match_right_[b])) {
        match_right_[b] = a;
        return true;
      }
    }
    return false;
  }

  const IndexedInstance& inst_;
  std::vector<std::size_t> match_right_;
  std::vector<std::size_t> seen_;
  std::size_t stamp_ = 0;
};

std::int64_t as_int(std::size_t n) { return static_cast<std::int64_t>(n); }

}  // namespace

MatchingResult max_matching(const MatchingInstance& inst) {
  IndexedInstance idx = index_instance(inst);
  auto match_right = Kuhn(idx).run();
  MatchingResult result;
  for (std::size_t b = 0; b < match_right.size(); ++b) {
    if (match_right[b] != Kuhn::kNone) result.pairs.emplace_back(idx.left[match_right[b]], idx.right[b]);
  }
  std::sort(result.pairs.begin(), result.pairs.end());
  result.size = result.pairs.size();
  return result;
}

std::size_t hall_deficiency_bruteforce(const MatchingInstance& inst) {
  IndexedInstance idx = index_instance(inst);
  const std::size_t n = idx.left.size();
  if (n > kHallCap) {
    throw CapExceeded("Hall deficiency scan limited to " + std::to_string(kHallCap) + " left vertices, got " +
                      std::to_string(n));
  }
  const std::size_t words = (idx.right.size() + 63) / 64;
  std::vector<std::vector<std::uint64_t>> nb(n, std::vector<std::uint64_t>(words, 0));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b : idx.adj[a]) nb[a][b / 64] |= std::uint64_t{1} << (b % 64);

  std::size_t best = 0;
  std::vector<std::uint64_t> acc(words);
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    std::fill(acc.begin(), acc.end(), 0);
    std::size_t chosen = 0;
    for (std::size_t a = 0; a < n; ++a) {
      if (!(mask >> a & 1)) continue;
      ++chosen;
      for (std::size_t w = 0; w < words; ++w) acc[w] |= nb[a][w];
    }
    std::size_t covered = 0;
    for (auto w : acc) covered += static_cast<std::size_t>(__builtin_popcountll(w));
    if (chosen > covered) best = std::max(best, chosen - covered);
  }
  return best;
}

MatchingInstance neighborhood_matching_instance(const Graph& g, Vertex x, Vertex y) {
  auto p = neighbor_partition(g, x, y);
  MatchingInstance inst;
  auto nx = g.neighbors(x);
  auto ny = g.neighbors(y);
  std::set_difference(nx.begin(), nx.end(), p.delta.begin(), p.delta.end(), std::back_inserter(inst.left));
  std::set_difference(ny.begin(), ny.end(), p.delta.begin(), p.delta.end(), std::back_inserter(inst.right));
  for (Vertex a : inst.left)
    for (Vertex b : inst.right)
      if (g.has_edge(a, b)) inst.adjacency.emplace_back(a, b);
  return inst;
}

MatchingInstance two_matching_instance(const Graph& g, Vertex x, Vertex y) {
  auto core = core_neighborhood(g, x, y);
  const auto& delta = core.partition.delta;
  auto keep = [&](Vertex v, Vertex endpoint) {
    return v != endpoint && !std::binary_search(delta.begin(), delta.end(), v);
  };
  MatchingInstance inst;
  for (std::size_t r = 0; r < core.rows.size(); ++r) {
    if (!keep(core.rows[r], y)) continue;
    inst.left.push_back(core.rows[r]);
    for (std::size_t c = 0; c < core.cols.size(); ++c) {
      if (keep(core.cols[c], x) && core.cross(r, c) <= 2) inst.adjacency.emplace_back(core.rows[r], core.cols[c]);
    }
  }
  for (Vertex v : core.cols)
    if (keep(v, x)) inst.right.push_back(v);
  return inst;
}

BoundPair matching_lower_bound(const Graph& g, Vertex x, Vertex y) {
  auto p = neighbor_partition(g, x, y);
  const auto hi = as_int(std::max(g.degree(x), g.degree(y)));
  const auto tri = as_int(p.delta.size());
  const auto m = as_int(max_matching(neighborhood_matching_instance(g, x, y)).size);
  BoundPair b;
  b.upper = Rational(tri, hi);
  b.lower = Rational(tri, hi) - Rational(2) * (Rational(1) - Rational(m + tri, hi));
  b.source = BoundSource::matching;
  return b;
}

BoundPair two_matching_lower_bound(const Graph& g, Vertex x, Vertex y) {
  auto p = neighbor_partition(g, x, y);
  const auto hi = as_int(std::max(g.degree(x), g.degree(y)));
  const auto tri = as_int(p.delta.size());
  const auto k = as_int(max_matching(two_matching_instance(g, x, y)).size);
  BoundPair b;
  b.upper = Rational(tri, hi);
  b.lower = Rational(-2) + Rational(3 * tri + k + 2, hi);
  b.source = BoundSource::two_matching;
  return b;
}

PerfectMatchingCheck has_perfect_matching_between_neighborhoods(const Graph& g, Vertex x, Vertex y) {
  auto inst = neighborhood_matching_instance(g, x, y);
  if (g.degree(x) != g.degree(y)) {
    throw NotApplicable("perfect-matching test needs d_x = d_y, got " + std::to_string(g.degree(x)) + " and " +
                        std::to_string(g.degree(y)));
  }
  PerfectMatchingCheck out;
  out.matching = max_matching(inst);
  out.perfect = out.matching.size == inst.left.size();
  return out;
}

}  // namespace ricci
