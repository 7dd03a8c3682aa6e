#include "ricci/transport.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "ricci/min_cost_flow.hpp"

namespace ricci {

PrimalResult w1_primal(const CoreNeighborhood& core, std::int64_t scale_multiplier) {
  if (scale_multiplier < 1) throw InvalidInput("scale multiplier must be positive");
  const auto dx = static_cast<std::int64_t>(core.rows.size());
  const auto dy = static_cast<std::int64_t>(core.cols.size());
  const std::int64_t scale = std::lcm(dx, dy) * scale_multiplier;
  const std::int64_t row_supply = scale / dx;
  const std::int64_t col_demand = scale / dy;

  MinCostFlow flow(core.rows.size() + core.cols.size());
  std::vector<MinCostFlow::ArcId> arc_ids;
  arc_ids.reserve(core.cross_distance.size());
  for (std::size_t r = 0; r < core.rows.size(); ++r) {
    flow.set_supply(r, row_supply);
    for (std::size_t c = 0; c < core.cols.size(); ++c) {
      arc_ids.push_back(flow.add_arc(r, core.rows.size() + c, row_supply, core.cross(r, c)));
    }
  }
  for (std::size_t c = 0; c < core.cols.size(); ++c) {
    flow.set_supply(core.rows.size() + c, -col_demand);
  }
  const std::int64_t cost = flow.solve();

  PrimalResult result;
  result.value = Rational(cost, scale);
  result.plan.rows = core.rows;
  result.plan.cols = core.cols;
  result.plan.mass.reserve(arc_ids.size());
  for (auto id : arc_ids) result.plan.mass.emplace_back(flow.flow(id), scale);
  return result;
}

namespace {

class DualSearch {
 public:
  explicit DualSearch(const CoreNeighborhood& core)
      : core_(core),
        n_(core.size()),
        dist_(core.local_distances()),
        coeff_(n_, 0),
        value_(n_, 0),
        lo_(n_ * (n_ + 1), 0),
        hi_(n_ * (n_ + 1), 0) {
    // Objective scaled by d_x * d_y: d_y * sum_{N(x)} f - d_x * sum_{N(y)} f.
    const auto dx = static_cast<std::int64_t>(core.rows.size());
    const auto dy = static_cast<std::int64_t>(core.cols.size());
    for (Vertex v : core.rows) coeff_[core.local_id(v)] += dy;
    for (Vertex v : core.cols) coeff_[core.local_id(v)] -= dx;
    const std::size_t lx = core.local_id(core.x());
    for (std::size_t v = 0; v < n_; ++v) {
      lo_[v] = -static_cast<std::int64_t>(dist_[lx * n_ + v]);
      hi_[v] = static_cast<std::int64_t>(dist_[lx * n_ + v]);
    }
  }

  DualResult run() {
    search(0, 0);
    const auto dx = static_cast<std::int64_t>(core_.rows.size());
    const auto dy = static_cast<std::int64_t>(core_.cols.size());
    DualResult result;
    result.value = Rational(best_, dx * dy);
    for (std::size_t v = 0; v < n_; ++v) result.witness.values[core_.vertices[v]] = best_values_[v];
    return result;
  }

 private:
  std::int64_t optimistic(std::size_t depth) const {
    const std::int64_t* lo = &lo_[depth * n_];
    const std::int64_t* hi = &hi_[depth * n_];
    std::int64_t total = 0;
    for (std::size_t v = depth; v < n_; ++v) {
      total += coeff_[v] > 0 ? coeff_[v] * hi[v] : coeff_[v] * lo[v];
    }
    return total;
  }

  void search(std::size_t depth, std::int64_t partial) {
    if (depth == n_) {
      if (!found_ || partial > best_) {
        found_ = true;
        best_ = partial;
        best_values_ = value_;
      }
      return;
    }
    if (found_ && partial + optimistic(depth) <= best_) return;

    const std::int64_t* lo = &lo_[depth * n_];
    const std::int64_t* hi = &hi_[depth * n_];
    std::int64_t* next_lo = &lo_[(depth + 1) * n_];
    std::int64_t* next_hi = &hi_[(depth + 1) * n_];
    const std::size_t v = depth;
    for (std::int64_t f = lo[v]; f <= hi[v]; ++f) {
      value_[v] = f;
      bool feasible = true;
      for (std::size_t w = v + 1; w < n_; ++w) {
        const auto d = static_cast<std::int64_t>(dist_[v * n_ + w]);
        next_lo[w] = std::max(lo[w], f - d);
        next_hi[w] = std::min(hi[w], f + d);
        if (next_lo[w] > next_hi[w]) {
          feasible = false;
          break;
        }
      }
      if (feasible) search(depth + 1, partial + coeff_[v] * f);
    }
  }

  const CoreNeighborhood& core_;
  std::size_t n_;
  std::vector<std::uint8_t> dist_;
  std::vector<std::int64_t> coeff_;
  std::vector<std::int64_t> value_;
  std::vector<std::int64_t> lo_;  // (depth, vertex) feasible interval after assigning 0..depth-1
  std::vector<std::int64_t> hi_;
  bool found_ = false;
  std::int64_t best_ = std::numeric_limits<std::int64_t>::min();
  std::vector<std::int64_t> best_values_;
};

}  // namespace

DualResult w1_dual_oracle(const CoreNeighborhood& core, std::size_t cap) {
  if (core.size() > cap) {
    throw CapExceeded("oracle cap exceeded: core has " + std::to_string(core.size()) +
                      " vertices, cap is " + std::to_string(cap));
  }
  return DualSearch(core).run();
}

DualityGapError::DualityGapError(PrimalResult primal, DualResult dual)
    : VerificationMismatch("duality gap: primal " + primal.value.to_string() + " vs dual " +
                           dual.value.to_string()),
      primal_(std::move(primal)),
      dual_(std::move(dual)) {}

W1Result verify_duality(const CoreNeighborhood& core, std::size_t cap) {
  DualResult dual = w1_dual_oracle(core, cap);
  PrimalResult primal = w1_primal(core);
  if (primal.value != dual.value) throw DualityGapError(std::move(primal), std::move(dual));
  if (plan_cost(core, primal.plan) != primal.value || !plan_is_feasible(core, primal.plan)) {
    throw VerificationMismatch("transport plan does not certify its value");
  }
  if (witness_objective(core, dual.witness) != dual.value ||
      !witness_is_lipschitz(core, dual.witness)) {
    throw VerificationMismatch("Lipschitz witness does not certify its value");
  }
  W1Result result;
  result.value = primal.value;
  result.gap = primal.value - dual.value;
  result.plan = std::move(primal.plan);
  result.witness = std::move(dual.witness);
  return result;
}

Rational plan_cost(const CoreNeighborhood& core, const TransportPlan& plan) {
  Rational total;
  for (std::size_t r = 0; r < plan.rows.size(); ++r) {
    for (std::size_t c = 0; c < plan.cols.size(); ++c) {
      total += plan.at(r, c) * Rational(core.cross(r, c));
    }
  }
  return total;
}

bool plan_is_feasible(const CoreNeighborhood& core, const TransportPlan& plan) {
  if (plan.rows != core.rows || plan.cols != core.cols) return false;
  if (plan.mass.size() != plan.rows.size() * plan.cols.size()) return false;
  const Rational row_mass(1, static_cast<std::int64_t>(plan.rows.size()));
  const Rational col_mass(1, static_cast<std::int64_t>(plan.cols.size()));
  for (const auto& m : plan.mass) {
    if (m < Rational(0)) return false;
  }
  for (std::size_t r = 0; r < plan.rows.size(); ++r) {
    Rational sum;
    for (std::size_t c = 0; c < plan.cols.size(); ++c) sum += plan.at(r, c);
    if (sum != row_mass) return false;
  }
  for (std::size_t c = 0; c < plan.cols.size(); ++c) {
    Rational sum;
    for (std::size_t r = 0; r < plan.rows.size(); ++r) sum += plan.at(r, c);
    if (sum != col_mass) return false;
  }
  return true;
}

Rational witness_objective(const CoreNeighborhood& core, const LipschitzWitness& witness) {
  std::int64_t sum_x = 0;
  std::int64_t sum_y = 0;
  for (Vertex v : core.rows) sum_x += witness.values.at(v);
  for (Vertex v : core.cols) sum_y += witness.values.at(v);
  return Rational(sum_x, static_cast<std::int64_t>(core.rows.size())) -
         Rational(sum_y, static_cast<std::int64_t>(core.cols.size()));
}

bool witness_is_lipschitz(const CoreNeighborhood& core, const LipschitzWitness& witness) {
  auto x_it = witness.values.find(core.x());
  if (x_it == witness.values.end() || x_it->second != 0) return false;
  const std::size_t n = core.size();
  auto dist = core.local_distances();
  std::vector<std::int64_t> f(n);
  for (std::size_t v = 0; v < n; ++v) {
    auto it = witness.values.find(core.vertices[v]);
    if (it == witness.values.end()) return false;
    f[v] = it->second;
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if (std::abs(f[a] - f[b]) > dist[a * n + b]) return false;
    }
  }
  return true;
}

}  // namespace ricci
