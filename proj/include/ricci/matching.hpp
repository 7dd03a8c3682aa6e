#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "ricci/curvature.hpp"
#include "ricci/graph.hpp"

namespace ricci {

/// Bipartite instance: `adjacency` lists the matchable (left, right) pairs.
struct MatchingInstance {
  std::vector<Vertex> left;
  std::vector<Vertex> right;
  std::vector<std::pair<Vertex, Vertex>> adjacency;
};

struct MatchingResult {
  std::vector<std::pair<Vertex, Vertex>> pairs;  // sorted by left vertex
  std::size_t size = 0;
  std::optional<std::size_t> deficiency;
};

/// Maximum-cardinality matching by augmenting paths. Left vertices are
/// processed in ascending id, candidates tried in ascending id, so the
/// output depends only on the instance. InvalidInput when left and right
/// overlap or a pair is not in left x right.
MatchingResult max_matching(const MatchingInstance& inst);

inline constexpr std::size_t kHallCap = 20;

/// max over X subset of left of |X| - |N(X)|, by scanning all 2^|left|
/// subsets. CapExceeded when |left| > kHallCap.
std::size_t hall_deficiency_bruteforce(const MatchingInstance& inst);

/// Q(x) = N(x) \ delta (contains y) against Q(y) = N(y) \ delta (contains x),
/// pairs adjacent in g.
MatchingInstance neighborhood_matching_instance(const Graph& g, Vertex x, Vertex y);

/// R(x) = N(x) \ {y} \ delta against R(y) = N(y) \ {x} \ delta, pairs at
/// distance <= 2 in g.
MatchingInstance two_matching_instance(const Graph& g, Vertex x, Vertex y);

/// lower = |delta|/D - 2(1 - (|M| + |delta|)/D), upper = |delta|/D, where
/// D = max(dx, dy) and M is a maximum matching of the Q instance.
BoundPair matching_lower_bound(const Graph& g, Vertex x, Vertex y);

/// lower = -2 + (3|delta| + k + 2)/D with k the maximum 2-matching size,
/// upper = |delta|/D.
BoundPair two_matching_lower_bound(const Graph& g, Vertex x, Vertex y);

struct PerfectMatchingCheck {
  bool perfect = false;
  MatchingResult matching;
};

/// Whether the Q instance has a matching of size d - |delta|. NotApplicable
/// unless dx = dy.
PerfectMatchingCheck has_perfect_matching_between_neighborhoods(const Graph& g, Vertex x, Vertex y);

}  // namespace ricci
