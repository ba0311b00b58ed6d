#include "hcopt/sdp_round.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <stdexcept>

#include <boost/math/tools/minima.hpp>
#include <boost/math/tools/roots.hpp>

#include "hcopt/objectives.hpp"
#include "hcopt/random_hc.hpp"

namespace hcopt {

namespace {

constexpr double kPi = std::numbers::pi;

double dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t d = 0; d < a.size(); ++d) s += a[d] * b[d];
  return s;
}

double angle(std::span<const double> a, std::span<const double> b) {
  const double na = std::sqrt(dot(a, a));
  const double nb = std::sqrt(dot(b, b));
  if (na == 0.0 || nb == 0.0) {
    throw std::invalid_argument("angle with a zero vector");
  }
  return std::acos(std::clamp(dot(a, b) / (na * nb), -1.0, 1.0));
}

}  // namespace

std::vector<double> random_unit_vector(int dim, RngStream& rng) {
  if (dim < 1) {
    throw std::invalid_argument("random_unit_vector needs dim >= 1");
  }
  std::vector<double> v(dim);
  double norm = 0.0;
  while (norm == 0.0) {
    for (double& x : v) x = rng.normal();
    norm = std::sqrt(dot(v, v));
  }
  for (double& x : v) x /= norm;
  return v;
}

HyperplaneCut hyperplane_cut(const VectorAssignment& v, int level, RngStream& rng,
                             int max_redraws) {
  const int n = v.n();
  if (n < 2) {
    throw std::invalid_argument("hyperplane_cut needs n >= 2");
  }
  if (level < 1 || level > v.levels()) {
    throw std::invalid_argument("hyperplane_cut level out of range");
  }
  HyperplaneCut cut;
  cut.side.assign(n, 0);
  for (int attempt = 0; attempt <= max_redraws; ++attempt) {
    const auto v0 = random_unit_vector(v.dim(), rng);
    int ones = 0;
    for (int i = 0; i < n; ++i) {
      cut.side[i] = dot(v.vec(level, i), v0) >= 0.0 ? 1 : 0;
      ones += cut.side[i];
    }
    if (ones != 0 && ones != n) {
      cut.redraws = attempt;
      return cut;
    }
  }
  std::vector<int> all(n);
  for (int i = 0; i < n; ++i) all[i] = i;
  cut.side = random_bipartition(all, rng);
  cut.redraws = max_redraws;
  cut.fallback = true;
  return cut;
}

int sdp_rounding_level(int n) {
  return std::max(1, n / 2 - 1);
}

Dendrogram sdp_first_random_next(const WeightedGraph& g, const SdpSolution& sol, RngStream& rng) {
  const int n = g.size();
  if (n < 2) {
    throw std::invalid_argument("sdp_first_random_next needs n >= 2");
  }
  if (sol.vectors.n() != n) {
    throw std::invalid_argument("SDP solution does not match the graph");
  }
  const HyperplaneCut cut = hyperplane_cut(sol.vectors, sdp_rounding_level(n), rng);
  std::vector<int> s, rest;
  for (int i = 0; i < n; ++i) {
    (cut.side[i] ? s : rest).push_back(i);
  }
  TreeBuilder b;
  const int l = random_always_into(b, s, rng);
  const int r = random_always_into(b, rest, rng);
  return b.build(b.join(l, r));
}

Dendrogram sdp_first_random_next(const WeightedGraph& g, std::uint64_t seed,
                                 const SolverConfig& cfg) {
  const SdpSolution sol = solve_low_rank(build_hc_sdp(g), cfg);
  RngStream rng(seed, label_hash("sdp-random-next"));
  return sdp_first_random_next(g, sol, rng);
}

TripletAngles triplet_angles(std::span<const double> a, std::span<const double> b,
                             std::span<const double> c) {
  if (a.size() != b.size() || a.size() != c.size()) {
    throw std::invalid_argument("triplet vectors differ in dimension");
  }
  return {angle(a, b), angle(a, c), angle(b, c)};
}

TripletProbabilities triplet_separation_probability(const TripletAngles& a) {
  for (double t : {a.ij, a.ik, a.jk}) {
    if (!(t >= -1e-12 && t <= kPi / 2 + 1e-12)) {
      throw std::invalid_argument("triplet angle outside [0, pi/2]");
    }
  }
  const double two_pi = 2.0 * kPi;
  TripletProbabilities p{(a.ik + a.jk - a.ij) / two_pi, (a.ij + a.jk - a.ik) / two_pi,
                         (a.ij + a.ik - a.jk) / two_pi, 1.0 - (a.ij + a.ik + a.jk) / two_pi};
  for (double q : {p.ij_k, p.ik_j, p.jk_i, p.together}) {
    if (q < -1e-12) {
      throw std::domain_error("inconsistent angle triple: negative probability");
    }
  }
  return p;
}

TripletEstimate mc_verify_triplet(std::span<const double> a, std::span<const double> b,
                                  std::span<const double> c, long long trials, std::uint64_t seed) {
  if (trials < 1) {
    throw std::invalid_argument("mc_verify_triplet needs trials >= 1");
  }
  if (a.size() != b.size() || a.size() != c.size() || a.empty()) {
    throw std::invalid_argument("triplet vectors differ in dimension");
  }
  RngStream rng(seed, label_hash("triplet-hyperplanes"));
  const int dim = static_cast<int>(a.size());
  long long ij_k = 0, ik_j = 0, jk_i = 0, together = 0;
  std::vector<double> v0(dim);
  for (long long t = 0; t < trials; ++t) {
    for (double& x : v0) x = rng.normal();
    const bool si = dot(a, v0) >= 0.0;
    const bool sj = dot(b, v0) >= 0.0;
    const bool sk = dot(c, v0) >= 0.0;
    if (si == sj && sj == sk) {
      ++together;
    } else if (si == sj) {
      ++ij_k;
    } else if (si == sk) {
      ++ik_j;
    } else {
      ++jk_i;
    }
  }
  const double n = static_cast<double>(trials);
  return {{ij_k / n, ik_j / n, jk_i / n, together / n}, trials};
}

double factor_revealing_lower_bound(int n, double theta_bar) {
  return (n - 2) * (0.25 - theta_bar / (2.0 * kPi));
}

double factor_revealing_side(int n) {
  if (n < 3) {
    throw std::invalid_argument("factor_revealing_side needs n >= 3");
  }
  const int m = n - 2;
  const double budget = n / 2.0 - 1.0;
  double best = std::numeric_limits<double>::infinity();
  // z angles at zero, one angle phi with cos(phi) = remaining budget, the rest at pi/2.
  for (int z = 0; z <= m; ++z) {
    if (z > budget + 1e-12) break;
    const double remaining = budget - z;
    double value;
    if (z == m) {
      value = 0.0;
    } else {
      const double phi = std::acos(std::clamp(remaining, 0.0, 1.0));
      value = phi + (m - z - 1) * kPi / 2.0;
    }
    best = std::min(best, value);
  }
  return best;
}

double factor_revealing_numeric(int n, double theta_bar) {
  if (!(theta_bar >= 0.0 && theta_bar <= kPi / 2 + 1e-12)) {
    throw std::invalid_argument("theta_bar outside [0, pi/2]");
  }
  return (2.0 * factor_revealing_side(n) - (n - 2) * theta_bar) / (2.0 * kPi);
}

double balance_epsilon1(double eps2) {
  if (!(eps2 > 0.0 && eps2 < 1.0)) {
    throw std::domain_error("eps2 must lie in (0, 1)");
  }
  const double a = 0.5 - 2.0 * std::acos(1.0 - eps2) / (3.0 * kPi);
  const auto f = [&](double e1) { return (1.0 - 2.0 * e1 / eps2) * a - 1.0 / (3.0 * (1.0 - e1)); };
  const double hi = eps2 / 2.0;
  if (!(f(0.0) > 0.0)) {
    throw std::domain_error("no balancing eps1 for eps2 = " + std::to_string(eps2));
  }
  const auto [lo_x, hi_x] =
      boost::math::tools::bisect(f, 0.0, hi, boost::math::tools::eps_tolerance<double>(52));
  return 0.5 * (lo_x + hi_x);
}

double alpha_similarity(double eps2) {
  return 1.0 / (3.0 * (1.0 - balance_epsilon1(eps2)));
}

AlphaSimilarity optimize_alpha_similarity() {
  // Roots exist only while arccos(1 - eps2) < pi/4.
  const double limit = 1.0 - std::cos(kPi / 4.0);
  double best_x = 0.0;
  double best = -1.0;
  for (double x = 0.001; x < limit; x += 0.001) {
    const double a = alpha_similarity(x);
    if (a > best) {
      best = a;
      best_x = x;
    }
  }
  const auto neg = [](double x) { return -alpha_similarity(x); };
  const double lo = std::max(1e-6, best_x - 0.002);
  const double hi = std::min(limit - 1e-9, best_x + 0.002);
  const auto [x, fx] = boost::math::tools::brent_find_minima(neg, lo, hi, 40);
  return {x, balance_epsilon1(x), -fx};
}

BestOf best_of_similarity(const WeightedGraph& g, const SdpSolution& sol, int runs,
                          std::uint64_t seed) {
  if (runs < 1) {
    throw std::invalid_argument("best_of_similarity needs runs >= 1");
  }
  const RngStream random_root(seed, label_hash("random-always"));
  const RngStream sdp_root(seed, label_hash("sdp-random-next"));
  std::optional<BestOf> best;
  const auto offer = [&](Dendrogram t, const char* name, int run) {
    const double value = similarity_reward(g, t);
    if (!best || value > best->value) {
      best = BestOf{std::move(t), value, name, run};
    }
  };
  for (int r = 0; r < runs; ++r) {
    RngStream a = random_root.child(static_cast<std::uint64_t>(r));
    offer(random_always(g.size(), a), "random", r);
    RngStream b = sdp_root.child(static_cast<std::uint64_t>(r));
    offer(sdp_first_random_next(g, sol, b), "sdp-random", r);
  }
  return std::move(*best);
}

BestOf best_of_similarity(const WeightedGraph& g, int runs, std::uint64_t seed,
                          const SolverConfig& cfg) {
  return best_of_similarity(g, solve_low_rank(build_hc_sdp(g), cfg), runs, seed);
}

}  // namespace hcopt
