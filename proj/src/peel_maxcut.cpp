#include "hcopt/peel_maxcut.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <optional>
#include <stdexcept>

#include <boost/math/tools/minima.hpp>

#include "hcopt/objectives.hpp"
#include "hcopt/random_hc.hpp"
#include "hcopt/rng.hpp"

namespace hcopt {

double PeelConfig::threshold(const WeightedGraph& g) const {
  return 2.0 * g.total_weight() * gamma / g.size();
}

double cut_value(const WeightedGraph& g, const std::vector<char>& side) {
  double value = 0.0;
  for (const Edge& e : g.edges()) {
    if (side[e.u] != side[e.v]) value += e.w;
  }
  return value;
}

namespace {

std::vector<int> iota_vertices(int n) {
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i) v[i] = i;
  return v;
}

MaxCut round_maxcut(const WeightedGraph& g, const SdpSolution& sol, int rounds, RngStream& rng) {
  MaxCut best;
  best.sdp_value = sol.objective;
  bool have = false;
  for (int r = 0; r < rounds; ++r) {
    HyperplaneCut cut = hyperplane_cut(sol.vectors, 1, rng);
    const double value = cut_value(g, cut.side);
    if (!have || value > best.value) {
      best.side = std::move(cut.side);
      best.value = value;
      have = true;
    }
  }
  return best;
}

SolverConfig seeded(const SolverConfig& cfg, std::uint64_t seed) {
  SolverConfig local = cfg;
  local.seed = mix64(cfg.seed ^ mix64(seed));
  return local;
}

MaxCut trivial_cut(const WeightedGraph& g, RngStream& rng) {
  MaxCut out;
  out.side = random_bipartition(iota_vertices(g.size()), rng);
  return out;
}

}  // namespace

MaxCut gw_maxcut(const WeightedGraph& g, int rounds, std::uint64_t seed, const SolverConfig& cfg) {
  if (g.size() < 2) {
    throw std::invalid_argument("gw_maxcut needs n >= 2");
  }
  if (rounds < 1) {
    throw std::invalid_argument("gw_maxcut needs rounds >= 1");
  }
  RngStream rng(seed, label_hash("gw-maxcut"));
  if (g.total_weight() == 0.0) {
    return trivial_cut(g, rng);
  }
  const SdpSolution sol = solve_low_rank(build_maxcut_sdp(g), seeded(cfg, seed));
  return round_maxcut(g, sol, rounds, rng);
}

double brute_force_maxcut(const WeightedGraph& g) {
  const int n = g.size();
  if (n > 24) {
    throw std::invalid_argument("brute_force_maxcut supports n <= 24");
  }
  if (n < 2) return 0.0;
  // Gray-code walk over cuts with vertex n-1 fixed on side 0.
  std::vector<char> side(n, 0);
  double value = 0.0;
  double best = 0.0;
  const std::uint64_t count = std::uint64_t{1} << (n - 1);
  for (std::uint64_t k = 1; k < count; ++k) {
    const int v = std::countr_zero(k);
    double delta = 0.0;
    for (int u = 0; u < n; ++u) {
      if (u == v) continue;
      delta += side[u] == side[v] ? g.weight(u, v) : -g.weight(u, v);
    }
    side[v] ^= 1;
    value += delta;
    best = std::max(best, value);
  }
  return best;
}

namespace {

struct PeelPhase {
  std::vector<int> peeled;
  std::vector<double> degrees;
  std::vector<int> remainder;
};

PeelPhase peel_phase(const WeightedGraph& g, double tau) {
  const int n = g.size();
  std::vector<double> degree(n);
  std::vector<char> alive(n, 1);
  for (int i = 0; i < n; ++i) degree[i] = g.degree(i);
  PeelPhase out;
  int remaining = n;
  while (remaining > 1) {
    int pick = -1;
    for (int i = 0; i < n; ++i) {
      if (alive[i] && degree[i] > tau && (pick < 0 || degree[i] > degree[pick])) pick = i;
    }
    if (pick < 0) break;
    out.peeled.push_back(pick);
    out.degrees.push_back(degree[pick]);
    alive[pick] = 0;
    --remaining;
    for (int i = 0; i < n; ++i) {
      if (alive[i]) degree[i] -= g.weight(i, pick);
    }
  }
  for (int i = 0; i < n; ++i) {
    if (alive[i]) out.remainder.push_back(i);
  }
  return out;
}

// Cut of the remainder followed by random always on each side; vertices are
// mapped back to the original ids.
int cut_then_random(TreeBuilder& b, const std::vector<int>& vertices, const std::vector<char>& side,
                    RngStream& rng) {
  std::vector<int> s, rest;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    (side[i] ? s : rest).push_back(vertices[i]);
  }
  const int l = random_always_into(b, s, rng);
  const int r = random_always_into(b, rest, rng);
  return b.join(l, r);
}

int attach_spine(TreeBuilder& b, const std::vector<int>& peeled, int bottom) {
  int node = bottom;
  for (auto it = peeled.rbegin(); it != peeled.rend(); ++it) {
    node = b.join(b.leaf(*it), node);
  }
  return node;
}

}  // namespace

PeelResult peel_off_first_maxcut_next(const WeightedGraph& g, const PeelConfig& cfg,
                                      std::uint64_t seed) {
  if (g.size() < 2) {
    throw std::invalid_argument("peel_off_first_maxcut_next needs n >= 2");
  }
  PeelResult out{make_caterpillar(g.size()), {}, {}, cfg.threshold(g), 0.0};
  const PeelPhase phase = peel_phase(g, out.threshold);
  out.peeled = phase.peeled;
  out.peel_degrees = phase.degrees;

  TreeBuilder b;
  int bottom;
  if (phase.remainder.size() == 1) {
    bottom = b.leaf(phase.remainder.front());
  } else {
    const WeightedGraph sub = g.induced(phase.remainder);
    const MaxCut cut = gw_maxcut(sub, cfg.gw_rounds, seed, cfg.solver);
    out.maxcut_value = cut.value;
    RngStream rng(seed, label_hash("peel-random-next"));
    bottom = cut_then_random(b, phase.remainder, cut.side, rng);
  }
  out.tree = b.build(attach_spine(b, phase.peeled, bottom));
  return out;
}

namespace {

int recursive_cut(TreeBuilder& b, const WeightedGraph& g, const std::vector<int>& vertices,
                  RngStream& rng, int rounds, const SolverConfig& cfg) {
  if (vertices.size() == 1) {
    return b.leaf(vertices.front());
  }
  const WeightedGraph sub = g.induced(vertices);
  const MaxCut cut = gw_maxcut(sub, rounds, rng.next_u64(), cfg);
  std::vector<int> s, rest;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    (cut.side[i] ? s : rest).push_back(vertices[i]);
  }
  const int l = recursive_cut(b, g, s, rng, rounds, cfg);
  const int r = recursive_cut(b, g, rest, rng, rounds, cfg);
  return b.join(l, r);
}

}  // namespace

Dendrogram recursive_maxcut_baseline(const WeightedGraph& g, std::uint64_t seed, int rounds,
                                     const SolverConfig& cfg) {
  if (g.size() < 2) {
    throw std::invalid_argument("recursive_maxcut_baseline needs n >= 2");
  }
  RngStream rng(seed, label_hash("recursive-maxcut"));
  TreeBuilder b;
  return b.build(recursive_cut(b, g, iota_vertices(g.size()), rng, rounds, cfg));
}

Dendrogram peel_one_by_one_tree(int n, const std::vector<int>& order) {
  std::vector<char> used(n, 0);
  for (int v : order) {
    if (v < 0 || v >= n || used[v]) {
      throw std::invalid_argument("peel order must list distinct vertices in range");
    }
    used[v] = 1;
  }
  std::vector<int> spine = order;
  for (int v = 0; v < n; ++v) {
    if (!used[v]) spine.push_back(v);
  }
  TreeBuilder b;
  return b.build(b.caterpillar(spine));
}

AlphaDissimilarity alpha_dissimilarity(double gamma, double eps) {
  if (!(eps > 0.0 && eps < 1.0)) {
    throw std::domain_error("eps must lie in (0, 1)");
  }
  if (!(gamma > 0.0)) {
    throw std::domain_error("gamma must be positive");
  }
  const double delta = std::sqrt(eps / gamma);
  const double peel = kRhoGW * (1.0 - 1.0 / gamma) *
                      (1.0 - (eps / delta) / (1.0 - eps) - delta * gamma / (1.0 - eps));
  const double random = 2.0 / (3.0 * (1.0 - eps));
  return {gamma, eps, delta, std::min(peel, random), peel, random};
}

double balance_epsilon(double gamma) {
  if (!(gamma > 1.0)) {
    throw std::domain_error("gamma must exceed 1");
  }
  // a s^2 + 2 a sqrt(gamma) s + 2/3 - a = 0 with s = sqrt(eps).
  const double a = kRhoGW * (1.0 - 1.0 / gamma);
  const double disc = gamma - (2.0 / 3.0 - a) / a;
  if (disc < 0.0) {
    throw std::domain_error("balancing quadratic has no real root at gamma = " +
                            std::to_string(gamma));
  }
  const double s = -std::sqrt(gamma) + std::sqrt(disc);
  if (s < 0.0) {
    throw std::domain_error("balancing quadratic has no nonnegative root at gamma = " +
                            std::to_string(gamma));
  }
  return s;
}

AlphaDissimilarity optimize_alpha_dissimilarity() {
  const auto eps_of = [](double gamma) {
    const double s = balance_epsilon(gamma);
    return s * s;
  };
  double best_gamma = 0.0;
  double best_eps = -1.0;
  for (double gamma = 1.05; gamma <= 100.0; gamma += 0.05) {
    try {
      const double e = eps_of(gamma);
      if (e > best_eps) {
        best_eps = e;
        best_gamma = gamma;
      }
    } catch (const std::domain_error&) {
    }
  }
  if (best_eps < 0.0) {
    throw std::domain_error("no gamma admits a balancing eps");
  }
  const auto neg = [&](double gamma) { return -eps_of(gamma); };
  const auto [gamma, fx] =
      boost::math::tools::brent_find_minima(neg, best_gamma - 0.05, best_gamma + 0.05, 40);
  return alpha_dissimilarity(gamma, -fx);
}

BestOf best_of_dissimilarity(const WeightedGraph& g, int runs, std::uint64_t seed,
                             const PeelConfig& cfg) {
  if (runs < 1) {
    throw std::invalid_argument("best_of_dissimilarity needs runs >= 1");
  }
  if (g.size() < 2) {
    throw std::invalid_argument("best_of_dissimilarity needs n >= 2");
  }
  // The peel phase is deterministic, so the remainder's SDP is solved once.
  const PeelPhase phase = peel_phase(g, cfg.threshold(g));
  std::optional<WeightedGraph> sub;
  std::optional<SdpSolution> sol;
  if (phase.remainder.size() > 1) {
    sub.emplace(g.induced(phase.remainder));
    if (sub->total_weight() > 0.0) {
      sol.emplace(solve_low_rank(build_maxcut_sdp(*sub), seeded(cfg.solver, seed)));
    }
  }

  const RngStream random_root(seed, label_hash("random-always"));
  const RngStream peel_root(seed, label_hash("peel-maxcut"));
  std::optional<BestOf> best;
  const auto offer = [&](Dendrogram t, const char* name, int run) {
    const double value = dissimilarity_reward(g, t);
    if (!best || value > best->value) {
      best = BestOf{std::move(t), value, name, run};
    }
  };
  for (int r = 0; r < runs; ++r) {
    RngStream p = peel_root.child(static_cast<std::uint64_t>(r));
    TreeBuilder b;
    int bottom;
    if (!sub) {
      bottom = b.leaf(phase.remainder.front());
    } else {
      const MaxCut cut = sol ? round_maxcut(*sub, *sol, cfg.gw_rounds, p) : trivial_cut(*sub, p);
      bottom = cut_then_random(b, phase.remainder, cut.side, p);
    }
    offer(b.build(attach_spine(b, phase.peeled, bottom)), "peel-maxcut", r);
    RngStream a = random_root.child(static_cast<std::uint64_t>(r));
    offer(random_always(g.size(), a), "random", r);
  }
  return std::move(*best);
}

}  // namespace hcopt
