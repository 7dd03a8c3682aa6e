#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ricci/curvature.hpp"
#include "ricci/graph.hpp"
#include "ricci/rational.hpp"

namespace ricci {

/// Counter-based generator: output i of stream (seed, stream) is a pure
/// function of (seed, stream, i), so replicates can be drawn in any order
/// or in parallel. Satisfies UniformRandomBitGenerator.
class CounterRng {
 public:
  using result_type = std::uint64_t;
  CounterRng(std::uint64_t seed, std::uint64_t stream);

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return ~result_type{0}; }
  result_type operator()();
  double uniform();  // [0, 1)

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

std::uint64_t splitmix64(std::uint64_t x);

/// Stream ids. Replicate r of an experiment draws its graph from stream r;
/// auxiliary samplers use the high streams below.
inline constexpr std::uint64_t kTreeLimitStream = 0xffffffff00000001ULL;
inline constexpr std::uint64_t kMatchingStream = 0xffffffff00000002ULL;

/// G(n, p) with the marked edge (a, b) forced present.
Graph sample_gnp(std::size_t n, double p, std::uint64_t seed, std::pair<Vertex, Vertex> mark = {0, 1},
                 std::uint64_t stream = 0);

/// Bipartite G(m, n, p): left side 0..m-1, right side m..m+n-1, marked edge
/// (a, b) with a on the left and b on the right forced present.
Graph sample_bipartite(std::size_t m, std::size_t n, double p, std::uint64_t seed,
                       std::optional<std::pair<Vertex, Vertex>> mark = std::nullopt, std::uint64_t stream = 0);

enum class Model { gnp, bipartite };
std::string_view to_string(Model m);

/// p_n = coefficient * n^(-exponent). exponent 0 means p is the constant
/// `coefficient`.
struct Scaling {
  double coefficient = 1.0;
  double exponent = 0.0;
  double p_at(std::size_t n) const;
};

/// Regime labels; bipartite uses a..d, G(n,p) uses a..f.
///  gnp:       a  np -> 0 (edge isolated)      b  np -> lambda (tree limit)
///             c  np -> inf, n^2p^3 -> 0: -2   d  n^2p^3 -> inf, np^2 -> 0: -1
///             e  np^2 -> inf, p -> 0: 0       f  p constant: p
///  bipartite: a, b as for gnp                 c  np -> inf, np^2 -> 0: -2
///             d  np^2 -> inf: 0
enum class Regime { a, b, c, d, e, f };
std::string_view to_string(Regime r);

struct RegimeLimit {
  enum class Kind { constant, tree_distribution, isolated_edge };
  Kind kind = Kind::constant;
  Regime regime = Regime::f;
  std::optional<Rational> value;
  std::optional<double> lambda;
};
std::string_view to_string(RegimeLimit::Kind k);

/// Classifies the scaling by the limits of np, np^2 and n^2 p^3. Scalings on
/// a boundary (exponent 2/3 for gnp, 1/2 for either model) throw
/// NotApplicable("regime undetermined: ..."). InvalidInput for a negative
/// exponent or a coefficient outside (0, 1] at exponent 0.
RegimeLimit regime_limit(Model model, const Scaling& scaling);

/// The (n, p) form reads p as constant in n.
RegimeLimit regime_limit(Model model, std::size_t n, double p);

/// The canonical scaling used for a regime tag: a: n^-1.5, b: lambda/n,
/// c: n^-0.8 (gnp) or n^-0.75 (bipartite), d: n^-0.6 (gnp) or n^-0.35
/// (bipartite), e: n^-0.35 and f: constant p (gnp only).
Scaling regime_scaling(Model model, Regime regime, double lambda = 3.0, double p = 0.5);

/// -2(1 - 1/(1+x1) - 1/(1+x2))_+.
Rational tree_limit_value(std::uint64_t x1, std::uint64_t x2);

/// Independent draws of tree_limit_value(X1, X2), X1, X2 ~ Poisson(lambda).
std::vector<Rational> sample_tree_limit(double lambda, std::size_t replicates, std::uint64_t seed,
                                        std::uint64_t stream = kTreeLimitStream);

/// Two-sample Kolmogorov distance sup_t |F_a(t) - F_b(t)|.
double ks_distance(std::vector<double> a, std::vector<double> b);

struct ExperimentConfig {
  Model model = Model::gnp;
  std::size_t n = 100;
  Scaling scaling;  // p = scaling.p_at(n)
  std::size_t replicates = 100;
  std::uint64_t seed = 0;
  std::size_t core_budget = 20000;  // larger cores are skipped and recorded
  std::size_t tree_reference_draws = 20000;
  unsigned threads = 0;
};

struct ReplicateRecord {
  std::size_t index = 0;
  std::optional<Rational> kappa;  // absent when skipped
  Method method = Method::lp;
  std::size_t core_size = 0;
  bool isolated = false;  // marked edge has no other incident edge
  std::string skip_reason;
};

struct ExperimentReport {
  ExperimentConfig config;
  double p = 0;
  std::vector<ReplicateRecord> replicates;
  std::size_t skipped = 0;
  double empirical_mean = 0;
  double empirical_median = 0;
  double isolated_fraction = 0;
  std::size_t positive_samples = 0;  // kappa > 0, counted for the tree regime
  std::optional<RegimeLimit> limit;
  std::string limit_note;  // why limit is absent
  std::optional<double> distance_to_limit;
};

/// Samples each replicate from stream = replicate index, evaluates
/// ricci_auto on the marked edge and aggregates in index order. The report
/// depends only on the config.
ExperimentReport run_experiment(const ExperimentConfig& config);

/// Fraction of replicates of bipartite G(n, n, p) with a matching of size
/// >= n(1 - eps).
double near_perfect_matching_rate(std::size_t n, double p, double eps, std::size_t replicates, std::uint64_t seed);

}  // namespace ricci
