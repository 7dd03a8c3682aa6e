#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ricci/errors.hpp"
#include "ricci/graph.hpp"
#include "ricci/rational.hpp"

namespace ricci {

/// Coupling of m_x (uniform on N(x), the rows) with m_y (uniform on N(y),
/// the columns). mass is row-major, rows.size() x cols.size().
struct TransportPlan {
  std::vector<Vertex> rows;
  std::vector<Vertex> cols;
  std::vector<Rational> mass;

  const Rational& at(std::size_t r, std::size_t c) const { return mass[r * cols.size() + c]; }
};

/// Integer 1-Lipschitz function on the core, anchored at values[x] = 0.
/// Keys are global vertex ids.
struct LipschitzWitness {
  std::map<Vertex, std::int64_t> values;
};

struct W1Result {
  Rational value;
  TransportPlan plan;
  LipschitzWitness witness;
  Rational gap;
};

/// Primal route: minimum of sum nu(z1,z2) d(z1,z2) over couplings.
///
/// Masses are scaled by L = lcm(d_x, d_y) * scale_multiplier so that every
/// row supplies L/d_x units and every column absorbs L/d_y; the resulting
/// integral min-cost flow is exact (the constraint matrix is totally
/// unimodular), and dividing by L gives the rational optimum.
struct PrimalResult {
  Rational value;
  TransportPlan plan;
};
PrimalResult w1_primal(const CoreNeighborhood& core, std::int64_t scale_multiplier = 1);

inline constexpr std::size_t kDefaultOracleCap = 18;

/// Dual route: exhaustive search over integer Lipschitz functions f on the
/// core with f(x) = 0, maximising E_x(f) - E_y(f). W1 is symmetric, so the
/// opposite order E_y - E_x gives the same value under f -> -f; this
/// orientation is the one used throughout.
///
/// Vertices are assigned in ascending id, each value tried from low to high
/// within [-d(x,v), d(x,v)], pruned by the Lipschitz constraints against
/// already-assigned vertices and by an objective bound. Only strictly better
/// assignments replace the incumbent, so the first optimal witness in that
/// order is returned. Throws CapExceeded when the core has more than `cap`
/// vertices.
struct DualResult {
  Rational value;
  LipschitzWitness witness;
};
DualResult w1_dual_oracle(const CoreNeighborhood& core, std::size_t cap = kDefaultOracleCap);

/// Raised by verify_duality when the two routes disagree; carries both
/// certificates.
class DualityGapError : public VerificationMismatch {
 public:
  DualityGapError(PrimalResult primal, DualResult dual);
  const PrimalResult& primal() const { return primal_; }
  const DualResult& dual() const { return dual_; }

 private:
  PrimalResult primal_;
  DualResult dual_;
};

/// Runs both routes and requires exact equality.
W1Result verify_duality(const CoreNeighborhood& core, std::size_t cap = kDefaultOracleCap);

/// Certificate checks, used by tests and by verify_duality.
Rational plan_cost(const CoreNeighborhood& core, const TransportPlan& plan);
bool plan_is_feasible(const CoreNeighborhood& core, const TransportPlan& plan);
Rational witness_objective(const CoreNeighborhood& core, const LipschitzWitness& witness);
bool witness_is_lipschitz(const CoreNeighborhood& core, const LipschitzWitness& witness);

}  // namespace ricci
