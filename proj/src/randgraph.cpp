#include "ricci/randgraph.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <random>
#include <string>

#include "ricci/errors.hpp"
#include "ricci/matching.hpp"
#include "ricci/parallel.hpp"

namespace ricci {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

CounterRng::CounterRng(std::uint64_t seed, std::uint64_t stream) : key_(splitmix64(seed ^ splitmix64(stream))) {}

CounterRng::result_type CounterRng::operator()() {
  ++counter_;
  return splitmix64(key_ + counter_ * 0x9e3779b97f4a7c15ULL);
}

double CounterRng::uniform() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

namespace {

void check_probability(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw InvalidInput("edge probability must lie in [0, 1], got " + std::to_string(p));
}

// Gap to the next present pair when each pair is present with probability p.
std::uint64_t geometric_skip(CounterRng& rng, double log_q) {
  double r = rng.uniform();
  double skip = std::floor(std::log1p(-r) / log_q);
  if (skip >= 1.8e19) return ~std::uint64_t{0} >> 1;
  return static_cast<std::uint64_t>(skip);
}

// Shortest round-trip decimal of p as an exact fraction.
Rational rational_from_decimal(double p) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, p, std::chars_format::fixed);
  std::string text(buf, res.ptr);
  std::int64_t num = 0, den = 1;
  bool frac = false;
  for (char c : text) {
    if (c == '.') {
      frac = true;
      continue;
    }
    if (num > 100000000000000LL) break;
    num = num * 10 + (c - '0');
    if (frac) den *= 10;
  }
  return Rational(num, den);
}

double median_of(std::vector<double> v) {
  if (v.empty()) return 0;
  std::sort(v.begin(), v.end());
  std::size_t h = v.size() / 2;
  return v.size() % 2 ? v[h] : (v[h - 1] + v[h]) / 2;
}

}  // namespace

Graph sample_gnp(std::size_t n, double p, std::uint64_t seed, std::pair<Vertex, Vertex> mark, std::uint64_t stream) {
  check_probability(p);
  auto [a, b] = mark;
  if (a == b || a >= n || b >= n) {
    throw InvalidInput("marked edge (" + std::to_string(a) + "," + std::to_string(b) +
                       ") must join two distinct vertices below n = " + std::to_string(n));
  }
  std::vector<Edge> edges{Edge(a, b)};
  CounterRng rng(seed, stream);
  if (p == 1.0) {
    for (Vertex v = 1; v < n; ++v)
      for (Vertex w = 0; w < v; ++w) edges.emplace_back(w, v);
  } else if (p > 0.0) {
    const double log_q = std::log1p(-p);
    // Pairs (w, v), w < v, enumerated row by row in v.
    std::uint64_t v = 1, w = 0;
    bool first = true;
    while (v < n) {
      std::uint64_t step = geometric_skip(rng, log_q) + (first ? 0 : 1);
      first = false;
      w += step;
      while (v < n && w >= v) {
        w -= v;
        ++v;
      }
      if (v < n) edges.emplace_back(static_cast<Vertex>(w), static_cast<Vertex>(v));
    }
  }
  return Graph::from_edges(edges, n);
}

Graph sample_bipartite(std::size_t m, std::size_t n, double p, std::uint64_t seed,
                       std::optional<std::pair<Vertex, Vertex>> mark, std::uint64_t stream) {
  check_probability(p);
  if (m == 0 || n == 0) throw InvalidInput("both sides of a bipartite sample need at least one vertex");
  auto [a, b] = mark.value_or(std::pair<Vertex, Vertex>{0, static_cast<Vertex>(m)});
  if (a >= m || b < m || b >= m + n) {
    throw InvalidInput("marked edge (" + std::to_string(a) + "," + std::to_string(b) +
                       ") must join the left side 0.." + std::to_string(m - 1) + " to the right side " +
                       std::to_string(m) + ".." + std::to_string(m + n - 1));
  }
  std::vector<Edge> edges{Edge(a, b)};
  CounterRng rng(seed, stream);
  const std::uint64_t total = static_cast<std::uint64_t>(m) * n;
  if (p == 1.0) {
    for (std::uint64_t t = 0; t < total; ++t) edges.emplace_back(t / n, m + t % n);
  } else if (p > 0.0) {
    const double log_q = std::log1p(-p);
    std::uint64_t t = geometric_skip(rng, log_q);
    while (t < total) {
      edges.emplace_back(static_cast<Vertex>(t / n), static_cast<Vertex>(m + t % n));
      std::uint64_t step = geometric_skip(rng, log_q) + 1;
      if (step > total - t) break;
      t += step;
    }
  }
  return Graph::from_edges(edges, m + n);
}

std::string_view to_string(Model m) { return m == Model::gnp ? "gnp" : "bipartite"; }

std::string_view to_string(Regime r) {
  switch (r) {
    case Regime::a: return "a";
    case Regime::b: return "b";
    case Regime::c: return "c";
    case Regime::d: return "d";
    case Regime::e: return "e";
    case Regime::f: return "f";
  }
  return "unknown";
}

std::string_view to_string(RegimeLimit::Kind k) {
  switch (k) {
    case RegimeLimit::Kind::constant: return "constant";
    case RegimeLimit::Kind::tree_distribution: return "tree_distribution";
    case RegimeLimit::Kind::isolated_edge: return "isolated_edge";
  }
  return "unknown";
}

double Scaling::p_at(std::size_t n) const {
  return coefficient * std::pow(static_cast<double>(n), -exponent);
}

RegimeLimit regime_limit(Model model, const Scaling& s) {
  const double c = s.coefficient;
  const double alpha = s.exponent;
  if (!(alpha >= 0.0) || !(c > 0.0) || !std::isfinite(c)) {
    throw InvalidInput("scaling needs a positive coefficient and a non-negative exponent");
  }
  if (alpha == 0.0 && c > 1.0) throw InvalidInput("constant p must lie in (0, 1]");

  auto constant = [&](Regime r, Rational v) {
    RegimeLimit l;
    l.kind = RegimeLimit::Kind::constant;
    l.regime = r;
    l.value = v;
    return l;
  };
  auto undetermined = [&](const std::string& why) {
    return NotApplicable("regime undetermined: " + why + " at exponent " + std::to_string(alpha));
  };

  // np ~ n^(1 - alpha), np^2 ~ n^(1 - 2 alpha), n^2 p^3 ~ n^(2 - 3 alpha).
  if (alpha > 1.0) {
    RegimeLimit l = constant(Regime::a, Rational(0));
    l.kind = RegimeLimit::Kind::isolated_edge;
    return l;
  }
  if (alpha == 1.0) {
    RegimeLimit l;
    l.kind = RegimeLimit::Kind::tree_distribution;
    l.regime = Regime::b;
    l.lambda = c;
    return l;
  }
  if (alpha == 0.5) throw undetermined("np^2 tends to a constant");
  if (model == Model::bipartite) {
    return alpha > 0.5 ? constant(Regime::c, Rational(-2)) : constant(Regime::d, Rational(0));
  }
  if (std::abs(alpha - 2.0 / 3.0) < 1e-12) throw undetermined("n^2 p^3 tends to a constant");
  if (alpha > 2.0 / 3.0) return constant(Regime::c, Rational(-2));
  if (alpha > 0.5) return constant(Regime::d, Rational(-1));
  if (alpha > 0.0) return constant(Regime::e, Rational(0));
  return constant(Regime::f, rational_from_decimal(c));
}

RegimeLimit regime_limit(Model model, std::size_t n, double p) {
  check_probability(p);
  if (n < 2) throw InvalidInput("n must be at least 2");
  if (p == 0.0) throw NotApplicable("regime undetermined: p = 0 has no edges beyond the marked one");
  return regime_limit(model, Scaling{p, 0.0});
}

Scaling regime_scaling(Model model, Regime regime, double lambda, double p) {
  switch (regime) {
    case Regime::a: return {1.0, 1.5};
    case Regime::b: return {lambda, 1.0};
    case Regime::c: return {1.0, model == Model::gnp ? 0.8 : 0.75};
    case Regime::d: return {1.0, model == Model::gnp ? 0.6 : 0.35};
    case Regime::e:
      if (model == Model::bipartite) throw InvalidInput("regime e exists only for gnp");
      return {1.0, 0.35};
    case Regime::f:
      if (model == Model::bipartite) throw InvalidInput("regime f exists only for gnp");
      return {p, 0.0};
  }
  throw InvalidInput("unknown regime");
}

Rational tree_limit_value(std::uint64_t x1, std::uint64_t x2) {
  Rational inner = Rational(1) - Rational(1, static_cast<std::int64_t>(x1) + 1) -
                   Rational(1, static_cast<std::int64_t>(x2) + 1);
  return Rational(-2) * positive_part(inner);
}

std::vector<Rational> sample_tree_limit(double lambda, std::size_t replicates, std::uint64_t seed,
                                        std::uint64_t stream) {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) throw InvalidInput("lambda must be positive");
  CounterRng rng(seed, stream);
  std::poisson_distribution<std::uint64_t> poisson(lambda);
  std::vector<Rational> out;
  out.reserve(replicates);
  for (std::size_t i = 0; i < replicates; ++i) {
    std::uint64_t x1 = poisson(rng);
    std::uint64_t x2 = poisson(rng);
    out.push_back(tree_limit_value(x1, x2));
  }
  return out;
}

double ks_distance(std::vector<double> a, std::vector<double> b) {
  if (a.empty() || b.empty()) throw InvalidInput("Kolmogorov distance needs two non-empty samples");
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  std::size_t i = 0, j = 0;
  double best = 0;
  while (i < a.size() || j < b.size()) {
    double t = j == b.size() || (i < a.size() && a[i] <= b[j]) ? a[i] : b[j];
    while (i < a.size() && a[i] <= t) ++i;
    while (j < b.size() && b[j] <= t) ++j;
    best = std::max(best, std::abs(static_cast<double>(i) / a.size() - static_cast<double>(j) / b.size()));
  }
  return best;
}

ExperimentReport run_experiment(const ExperimentConfig& config) {
  if (config.replicates == 0) throw InvalidInput("replicates must be at least 1");
  if (config.n < 2) throw InvalidInput("n must be at least 2");
  ExperimentReport report;
  report.config = config;
  report.p = config.scaling.p_at(config.n);
  check_probability(report.p);

  const Vertex a = 0;
  const Vertex b = config.model == Model::gnp ? 1 : static_cast<Vertex>(config.n);
  report.replicates.resize(config.replicates);
  parallel_for(
      config.replicates,
      [&](std::size_t r) {
        Graph g = config.model == Model::gnp ? sample_gnp(config.n, report.p, config.seed, {a, b}, r)
                                             : sample_bipartite(config.n, config.n, report.p, config.seed,
                                                                std::pair{a, b}, r);
        ReplicateRecord& rec = report.replicates[r];
        rec.index = r;
        rec.isolated = g.degree(a) == 1 && g.degree(b) == 1;
        auto part = neighbor_partition(g, a, b);
        rec.core_size = g.degree(a) + g.degree(b) - part.delta.size() + part.p_xy.size();
        if (rec.core_size > config.core_budget) {
          rec.skip_reason = "core has " + std::to_string(rec.core_size) + " vertices, budget " +
                            std::to_string(config.core_budget);
          return;
        }
        auto res = ricci_auto(g, a, b);
        rec.kappa = res.kappa;
        rec.method = res.method;
      },
      config.threads ? config.threads : default_thread_count());

  std::vector<double> values;
  std::size_t isolated = 0;
  for (const auto& rec : report.replicates) {
    if (!rec.kappa) {
      ++report.skipped;
      continue;
    }
    values.push_back(rec.kappa->to_double());
    if (rec.isolated) ++isolated;
    if (*rec.kappa > Rational(0)) ++report.positive_samples;
  }
  if (!values.empty()) {
    double sum = 0;
    for (double v : values) sum += v;
    report.empirical_mean = sum / values.size();
    report.empirical_median = median_of(values);
  }
  report.isolated_fraction = static_cast<double>(isolated) / config.replicates;

  try {
    report.limit = regime_limit(config.model, config.scaling);
  } catch (const NotApplicable& e) {
    report.limit_note = e.what();
  }
  if (report.limit && !values.empty()) {
    if (report.limit->kind == RegimeLimit::Kind::tree_distribution) {
      std::vector<double> ref;
      for (const auto& k : sample_tree_limit(*report.limit->lambda, config.tree_reference_draws, config.seed))
        ref.push_back(k.to_double());
      report.distance_to_limit = ks_distance(values, ref);
    } else {
      report.distance_to_limit = std::abs(report.empirical_median - report.limit->value->to_double());
    }
  } else if (values.empty()) {
    report.limit_note = "every replicate was skipped";
  }
  return report;
}

double near_perfect_matching_rate(std::size_t n, double p, double eps, std::size_t replicates, std::uint64_t seed) {
  if (replicates == 0) throw InvalidInput("replicates must be at least 1");
  std::vector<char> hit(replicates, 0);
  const double target = static_cast<double>(n) * (1.0 - eps);
  parallel_for(replicates, [&](std::size_t r) {
    Graph g = sample_bipartite(n, n, p, seed, std::nullopt, kMatchingStream + 1 + r);
    MatchingInstance inst;
    for (Vertex v = 0; v < n; ++v) {
      inst.left.push_back(v);
      inst.right.push_back(static_cast<Vertex>(n + v));
    }
    for (auto e : g.edges()) inst.adjacency.emplace_back(e.u, e.v);
    hit[r] = static_cast<double>(max_matching(inst).size) >= target;
  });
  return static_cast<double>(std::count(hit.begin(), hit.end(), 1)) / replicates;
}

}  // namespace ricci
