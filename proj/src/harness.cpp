#include "hcopt/harness.hpp"

#include <array>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "hcopt/linkage.hpp"
#include "hcopt/random_hc.hpp"
#include "hcopt/rng.hpp"
#include "hcopt/sdp_round.hpp"

namespace hcopt {

namespace {

constexpr double kPi = std::numbers::pi;

struct AlgorithmEntry {
  Algorithm alg;
  std::string_view name;
};

constexpr AlgorithmEntry kAlgorithms[] = {
    {Algorithm::AverageLinkage, "avg-linkage"}, {Algorithm::Random, "random"},
    {Algorithm::SdpRandom, "sdp-random"},       {Algorithm::PeelMaxcut, "peel-maxcut"},
    {Algorithm::RecursiveMaxcut, "recursive-maxcut"}, {Algorithm::BruteForce, "brute-force"},
};

template <typename... Ts>
std::string cat(const Ts&... parts) {
  std::ostringstream out;
  out << std::setprecision(12);
  (out << ... << parts);
  return out.str();
}

}  // namespace

Algorithm parse_algorithm(std::string_view name) {
  for (const auto& e : kAlgorithms) {
    if (e.name == name) return e.alg;
  }
  throw std::invalid_argument("unknown algorithm: " + std::string(name));
}

std::string_view algorithm_name(Algorithm alg) {
  for (const auto& e : kAlgorithms) {
    if (e.alg == alg) return e.name;
  }
  return "?";
}

Dendrogram run_algorithm(Algorithm alg, const WeightedGraph& g, Objective objective,
                         std::uint64_t seed, const AlgorithmOptions& opts) {
  switch (alg) {
    case Algorithm::AverageLinkage: {
      const LinkageMode mode = objective == Objective::Dissimilarity ? LinkageMode::Dissimilarity
                                                                     : LinkageMode::Similarity;
      return average_linkage(g, mode).tree;
    }
    case Algorithm::Random: {
      RngStream rng(seed, label_hash("random-always"));
      return random_always(g.size(), rng);
    }
    case Algorithm::SdpRandom: {
      SolverConfig cfg = opts.solver;
      cfg.seed = mix64(cfg.seed ^ mix64(seed));
      return sdp_first_random_next(g, seed, cfg);
    }
    case Algorithm::PeelMaxcut:
      return peel_off_first_maxcut_next(g, opts.peel, seed).tree;
    case Algorithm::RecursiveMaxcut:
      return recursive_maxcut_baseline(g, seed, opts.peel.gw_rounds, opts.solver);
    case Algorithm::BruteForce:
      return brute_force_opt(g, objective).tree;
  }
  throw std::invalid_argument("unknown algorithm");
}

std::string reports_csv(const std::vector<RunReport>& rows, bool timing) {
  std::ostringstream out;
  out << "instance,algorithm,trial,seed,objective,value,reference,ratio";
  if (timing) out << ",wall_ms";
  out << '\n' << std::setprecision(12);
  for (const auto& r : rows) {
    out << r.instance << ',' << r.algorithm << ',' << r.trial << ',' << r.seed << ','
        << r.objective << ',' << r.value << ',';
    if (r.reference) out << *r.reference;
    out << ',';
    if (r.ratio) out << *r.ratio;
    if (timing) out << ',' << r.wall_ms;
    out << '\n';
  }
  return out.str();
}

std::vector<RunReport> compare(const WeightedGraph& g, const std::vector<Algorithm>& algs,
                               int trials, std::uint64_t seed, Objective objective,
                               const std::string& instance, const AlgorithmOptions& opts) {
  if (trials < 1) {
    throw std::invalid_argument("compare needs trials >= 1");
  }
  const bool small = g.size() <= kBruteForceMaxLeaves;
  for (Algorithm a : algs) {
    if (a == Algorithm::BruteForce && !small) {
      throw std::invalid_argument("brute-force needs n <= " + std::to_string(kBruteForceMaxLeaves) +
                                  ", got n = " + std::to_string(g.size()));
    }
  }
  std::optional<double> reference;
  if (small && g.size() >= 1) {
    reference = brute_force_opt(g, objective).value;
  }
  const RngStream root(seed, label_hash("compare"));
  std::vector<RunReport> rows;
  for (Algorithm a : algs) {
    for (int t = 0; t < trials; ++t) {
      RngStream trial_stream = root.child(static_cast<std::uint64_t>(t));
      const std::uint64_t trial_seed = trial_stream.next_u64();
      const auto start = std::chrono::steady_clock::now();
      const Dendrogram tree = run_algorithm(a, g, objective, trial_seed, opts);
      const double value = evaluate(objective, g, tree);
      const auto stop = std::chrono::steady_clock::now();
      RunReport r;
      r.instance = instance;
      r.algorithm = std::string(algorithm_name(a));
      r.trial = t;
      r.seed = trial_seed;
      r.objective = std::string(objective_name(objective));
      r.value = value;
      r.reference = reference;
      if (reference && *reference > 0.0) r.ratio = value / *reference;
      r.wall_ms = std::chrono::duration<double, std::milli>(stop - start).count();
      rows.push_back(std::move(r));
    }
  }
  return rows;
}

bool VerifyReport::passed() const {
  for (const auto& c : checks) {
    if (!c.passed) return false;
  }
  return true;
}

void VerifyReport::add(std::string name, bool ok, std::string detail) {
  checks.push_back({std::move(name), ok, std::move(detail)});
}

std::string VerifyReport::summary() const {
  std::ostringstream out;
  for (const auto& c : checks) {
    out << (c.passed ? "PASS " : "FAIL ") << target << ": " << c.name;
    if (!c.detail.empty()) out << " (" << c.detail << ")";
    out << '\n';
  }
  return out.str();
}

std::vector<TightSimilarityRow> tight_similarity_table(const std::vector<int>& ks, double eps) {
  std::vector<TightSimilarityRow> rows;
  for (int k : ks) {
    if (k < 2) {
      throw std::invalid_argument("tight similarity instance needs k >= 2");
    }
    const WeightedGraph g = make_tight_similarity_instance(k, eps);
    const int n = g.size();
    const int block = k * k;
    const auto al = average_linkage(g, LinkageMode::Similarity);

    // Position shared by every leaf of a cluster, or -1 once mixed.
    std::vector<int> position(2 * n - 1, -1);
    for (int v = 0; v < n; ++v) position[v] = v % block;
    bool horizontal = true;
    const int horizontal_merges = block * (k - 1);
    for (int s = 0; s < static_cast<int>(al.trace.size()); ++s) {
      const auto& m = al.trace[s];
      const int pa = position[m.cluster_a];
      const int pb = position[m.cluster_b];
      position[n + s] = (pa >= 0 && pa == pb) ? pa : -1;
      if (s < horizontal_merges && position[n + s] < 0) horizontal = false;
    }

    const double value = similarity_reward(g, al.tree);
    const double bound = similarity_reward(g, vertical_first_tree(k));
    rows.push_back({k, n, value, bound, value / bound, horizontal});
  }
  return rows;
}

VerifyReport verify_tight_similarity(const std::vector<int>& ks, double eps) {
  VerifyReport rep{"sim-tight", {}, {}};
  const auto rows = tight_similarity_table(ks, eps);
  std::ostringstream table;
  table << "k,n,al_value,lower_bound,ratio\n" << std::setprecision(12);
  for (const auto& r : rows) {
    table << r.k << ',' << r.n << ',' << r.al_value << ',' << r.lower_bound << ',' << r.ratio << '\n';
  }
  rep.table = table.str();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& r = rows[i];
    const double vertical_weight = r.k * (r.k * r.k) * (r.k * r.k - 1) / 2.0;
    const double counting = (r.n - std::cbrt(static_cast<double>(r.n) * r.n)) * vertical_weight;
    rep.add(cat("k=", r.k, " lower bound >= (n - n^(2/3)) * vertical weight"),
            r.lower_bound >= counting - 1e-9 * counting, cat(r.lower_bound, " vs ", counting));
    rep.add(cat("k=", r.k, " ratio > 1/3"), r.ratio > 1.0 / 3.0, cat("ratio ", r.ratio));
    rep.add(cat("k=", r.k, " first merges are horizontal"), r.horizontal_first, "");
    if (i > 0) {
      rep.add(cat("ratio(k=", r.k, ") < ratio(k=", rows[i - 1].k, ")"),
              r.ratio < rows[i - 1].ratio, cat(r.ratio, " vs ", rows[i - 1].ratio));
    }
  }
  return rep;
}

std::vector<TightDissimilarityRow> tight_dissimilarity_table(const std::vector<int>& ms) {
  std::vector<TightDissimilarityRow> rows;
  for (int m : ms) {
    if (m < 2) {
      throw std::invalid_argument("tight dissimilarity instance needs m >= 2");
    }
    const LinkageRatio lr = linkage_ratio_report(m, Objective::Dissimilarity);
    const WeightedGraph g = make_tight_dissimilarity_instance(m);
    const double closed = 4.0 * (m + 1.0) * m * (m - 1.0) / 3.0;
    const double nw = g.size() * g.total_weight();
    rows.push_back({m, g.size(), lr.algorithm_value, closed, nw, lr.algorithm_value / nw});
  }
  return rows;
}

VerifyReport verify_tight_dissimilarity(const std::vector<int>& ms) {
  VerifyReport rep{"dissim-tight", {}, {}};
  const auto rows = tight_dissimilarity_table(ms);
  std::ostringstream table;
  table << "m,n,al_value,closed_form,nW,ratio\n" << std::setprecision(12);
  for (const auto& r : rows) {
    table << r.m << ',' << r.n << ',' << r.al_value << ',' << r.closed_form << ',' << r.nW << ','
          << r.ratio << '\n';
  }
  rep.table = table.str();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& r = rows[i];
    rep.add(cat("m=", r.m, " AL value equals 4(m+1)m(m-1)/3"), r.al_value == r.closed_form,
            cat(r.al_value, " vs ", r.closed_form));
    rep.add(cat("m=", r.m, " ratio >= 2/3"), r.ratio >= 2.0 / 3.0, cat("ratio ", r.ratio));
    if (i > 0) {
      rep.add(cat("ratio(m=", r.m, ") < ratio(m=", rows[i - 1].m, ")"),
              r.ratio < rows[i - 1].ratio, cat(r.ratio, " vs ", rows[i - 1].ratio));
    }
  }
  return rep;
}

VerifyReport verify_constants() {
  VerifyReport rep{"constants", {}, {}};
  const AlphaSimilarity sim = optimize_alpha_similarity();
  const AlphaDissimilarity dis = optimize_alpha_dissimilarity();
  rep.table = cat("which,alpha,param1,param2\nsim,", sim.alpha, ',', sim.eps2, ',', sim.eps1,
                  "\ndissim,", dis.alpha, ',', dis.gamma, ',', dis.eps, '\n');
  rep.add("alpha_sim = 0.336379 +- 5e-5", std::abs(sim.alpha - 0.336379) <= 5e-5,
          cat("alpha ", sim.alpha, " at eps2 ", sim.eps2, ", eps1 ", sim.eps1));
  rep.add("eps2* in [0.13, 0.15]", sim.eps2 >= 0.13 && sim.eps2 <= 0.15, cat("eps2 ", sim.eps2));
  rep.add("alpha_dissim = 0.667078 +- 5e-5", std::abs(dis.alpha - 0.667078) <= 5e-5,
          cat("alpha ", dis.alpha, " at gamma ", dis.gamma, ", eps ", dis.eps, ", delta ", dis.delta));
  rep.add("gamma* in [10, 12]", dis.gamma >= 10.0 && dis.gamma <= 12.0, cat("gamma ", dis.gamma));
  rep.add("eps* in [4e-4, 8e-4]", dis.eps >= 4e-4 && dis.eps <= 8e-4, cat("eps ", dis.eps));
  return rep;
}

namespace {

bool within_stderr(double freq, double p, long long trials, double k) {
  const double se = std::sqrt(std::max(0.0, p * (1.0 - p)) / static_cast<double>(trials));
  return std::abs(freq - p) <= k * se + 1e-15;
}

// Unit vectors in R^3 with pairwise nonnegative inner products, by rejection.
std::array<std::vector<double>, 3> random_acute_triple(RngStream& rng) {
  while (true) {
    std::array<std::vector<double>, 3> t{random_unit_vector(3, rng), random_unit_vector(3, rng),
                                         random_unit_vector(3, rng)};
    const auto d = [](const std::vector<double>& a, const std::vector<double>& b) {
      return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
    };
    if (d(t[0], t[1]) >= 0.0 && d(t[0], t[2]) >= 0.0 && d(t[1], t[2]) >= 0.0) return t;
  }
}

}  // namespace

VerifyReport verify_triplet(int triples, long long trials, std::uint64_t seed) {
  VerifyReport rep{"triplet", {}, {}};
  RngStream rng(seed, label_hash("triplet-vectors"));
  std::ostringstream table;
  table << "triple,theta_ij,theta_ik,theta_jk,p_ij_k,f_ij_k,p_ik_j,f_ik_j,p_jk_i,f_jk_i,p_together,"
           "f_together\n"
        << std::setprecision(12);
  int event_failures = 0;
  int identity_failures = 0;
  double worst_sum = 0.0;
  for (int t = 0; t < triples; ++t) {
    const auto tri = random_acute_triple(rng);
    const TripletAngles a = triplet_angles(tri[0], tri[1], tri[2]);
    const TripletProbabilities p = triplet_separation_probability(a);
    const TripletEstimate est = mc_verify_triplet(tri[0], tri[1], tri[2], trials, rng.next_u64());
    const auto& f = est.freq;
    table << t << ',' << a.ij << ',' << a.ik << ',' << a.jk << ',' << p.ij_k << ',' << f.ij_k << ','
          << p.ik_j << ',' << f.ik_j << ',' << p.jk_i << ',' << f.jk_i << ',' << p.together << ','
          << f.together << '\n';
    worst_sum = std::max(worst_sum, std::abs(p.ij_k + p.ik_j + p.jk_i + p.together - 1.0));
    for (auto [fe, pe] : {std::pair{f.ij_k, p.ij_k}, std::pair{f.ik_j, p.ik_j},
                          std::pair{f.jk_i, p.jk_i}, std::pair{f.together, p.together}}) {
      if (!within_stderr(fe, pe, trials, 4.0)) ++event_failures;
    }
    // Pr[i and j separated] = theta_ij / pi, and cyclically.
    for (auto [fe, theta] : {std::pair{f.ik_j + f.jk_i, a.ij}, std::pair{f.ij_k + f.jk_i, a.ik},
                             std::pair{f.ij_k + f.ik_j, a.jk}}) {
      if (!within_stderr(fe, theta / kPi, trials, 4.0)) ++identity_failures;
    }
  }
  rep.table = table.str();
  rep.add("closed-form probabilities sum to 1", worst_sum <= 1e-15, cat("max |sum - 1| ", worst_sum));
  rep.add("empirical event frequencies within 4 stderr", event_failures == 0,
          cat(event_failures, " of ", 4 * triples, " events outside"));
  rep.add("pair separation frequencies match theta/pi within 4 stderr", identity_failures == 0,
          cat(identity_failures, " of ", 3 * triples, " identities outside"));
  return rep;
}

VerifyReport verify_factor(const std::vector<int>& ns, const std::vector<double>& theta_bars) {
  VerifyReport rep{"factor", {}, {}};
  std::ostringstream table;
  table << "n,theta_bar,numeric,lower_bound\n" << std::setprecision(12);
  int failures = 0;
  double worst = std::numeric_limits<double>::infinity();
  std::string worst_at;
  for (int n : ns) {
    for (double tb : theta_bars) {
      const double num = factor_revealing_numeric(n, tb);
      const double lb = factor_revealing_lower_bound(n, tb);
      table << n << ',' << tb << ',' << num << ',' << lb << '\n';
      if (num < lb - 1e-6) ++failures;
      if (num - lb < worst) {
        worst = num - lb;
        worst_at = cat("n=", n, " theta_bar=", tb);
      }
    }
  }
  rep.table = table.str();
  rep.add("numeric optimum >= (n-2)(1/4 - theta_bar/2pi) - 1e-6", failures == 0,
          cat(failures, " grid points below; smallest gap ", worst, " at ", worst_at));
  return rep;
}

namespace {

WeightedGraph small_random_graph(int index, int min_n, int max_n, std::uint64_t seed) {
  RngStream rng(seed, label_hash("instance"));
  RngStream local = rng.child(static_cast<std::uint64_t>(index));
  const int n = min_n + static_cast<int>(local.below(static_cast<std::uint64_t>(max_n - min_n + 1)));
  const double density = 0.4 + 0.6 * local.uniform();
  while (true) {
    WeightedGraph g = make_random_instance(n, density, WeightDistribution::Uniform01, local.next_u64());
    if (g.total_weight() > 0.0) return g;
  }
}

}  // namespace

VerifyReport verify_relaxation(int instances, std::uint64_t seed) {
  VerifyReport rep{"relaxation", {}, {}};
  std::ostringstream table;
  table << "instance,n,W,opt,sdp,gap,max_residual,sweeps\n" << std::setprecision(12);
  int below = 0;
  int infeasible = 0;
  for (int i = 0; i < instances; ++i) {
    const WeightedGraph g = small_random_graph(i, 3, 8, seed);
    const OptimalTree opt = brute_force_opt(g, Objective::Similarity);
    SolverConfig cfg;
    cfg.seed = seed + i;
    cfg.warm_start = tree_to_vectors(opt.tree, g.size());
    const SdpSolution sol = solve_low_rank(build_hc_sdp(g), cfg);
    const double slack = 1e-3 * g.size() * g.total_weight();
    table << i << ',' << g.size() << ',' << g.total_weight() << ',' << opt.value << ','
          << sol.objective << ',' << sol.objective - opt.value << ',' << sol.residuals.max() << ','
          << sol.sweeps << '\n';
    if (sol.objective < opt.value - slack) ++below;
    if (sol.residuals.max() > 1e-5) ++infeasible;
  }
  rep.table = table.str();
  rep.add("SDP objective >= brute-force OPT - 1e-3 nW", below == 0,
          cat(below, " of ", instances, " instances below"));
  rep.add("all residuals <= 1e-5", infeasible == 0, cat(infeasible, " of ", instances, " infeasible"));
  return rep;
}

VerifyReport verify_random_expectation(int graphs, long long trials, std::uint64_t seed) {
  VerifyReport rep{"random-expectation", {}, {}};
  std::ostringstream table;
  table << "graph,n,W,sim_mean,sim_stderr,sim_expected,dissim_mean,dissim_stderr,"
           "dissim_two_thirds_nW,dissim_exact\n"
        << std::setprecision(12);
  int sim_off = 0, dis_off = 0, exact_off = 0;
  double worst_z = 0.0;
  for (int i = 0; i < graphs; ++i) {
    const WeightedGraph g = small_random_graph(i, 4, 8, seed);
    const auto sim = monte_carlo_mean(g, Objective::Similarity, trials, seed + 2 * i);
    const auto dis = monte_carlo_mean(g, Objective::Dissimilarity, trials, seed + 2 * i + 1);
    const double es = expected_similarity_reward_random(g);
    const double ed = expected_dissimilarity_reward_random(g);
    const double ex = expected_dissimilarity_reward_random_exact(g);
    table << i << ',' << g.size() << ',' << g.total_weight() << ',' << sim.mean << ','
          << sim.stderr_ << ',' << es << ',' << dis.mean << ',' << dis.stderr_ << ',' << ed << ','
          << ex << '\n';
    if (std::abs(sim.mean - es) > 4.0 * sim.stderr_) ++sim_off;
    if (std::abs(dis.mean - ed) > 4.0 * dis.stderr_) {
      ++dis_off;
      worst_z = std::max(worst_z, std::abs(dis.mean - ed) / dis.stderr_);
    }
    if (std::abs(dis.mean - ex) > 4.0 * dis.stderr_) ++exact_off;
  }
  const int n_trip = 6;
  const auto freq = triplet_nonleaf_frequencies(n_trip, trials, seed);
  double worst_trip = 0.0;
  for (int i = 0; i < n_trip; ++i) {
    for (int j = 0; j < n_trip; ++j) {
      for (int k = 0; k < n_trip; ++k) {
        if (i == j || j == k || i == k) continue;
        worst_trip = std::max(worst_trip, std::abs(freq[(i * n_trip + j) * n_trip + k] - 1.0 / 3.0));
      }
    }
  }
  rep.table = table.str();
  rep.add("similarity mean within 4 stderr of (n-2)W/3", sim_off == 0,
          cat(sim_off, " of ", graphs, " graphs outside"));
  rep.add("triplet non-leaf probability within 0.01 of 1/3", worst_trip <= 0.01,
          cat("max deviation ", worst_trip));
  rep.add("dissimilarity mean within 4 stderr of (2/3)nW", dis_off == 0,
          cat(dis_off, " of ", graphs, " graphs outside; worst z ", worst_z));
  rep.add("dissimilarity mean within 4 stderr of 2(n+1)W/3", exact_off == 0,
          cat(exact_off, " of ", graphs, " graphs outside"));
  return rep;
}

VerifyReport verify_gw_ratio(int instances, int rounds, std::uint64_t seed) {
  VerifyReport rep{"gw-ratio", {}, {}};
  std::ostringstream table;
  table << "instance,n,W,brute_force,sdp,gw\n" << std::setprecision(12);
  int sandwich = 0, good = 0;
  for (int i = 0; i < instances; ++i) {
    const WeightedGraph g = small_random_graph(i, 4, 12, seed);
    const double best = brute_force_maxcut(g);
    const MaxCut cut = gw_maxcut(g, rounds, seed + i);
    table << i << ',' << g.size() << ',' << g.total_weight() << ',' << best << ',' << cut.sdp_value
          << ',' << cut.value << '\n';
    const double w = g.total_weight();
    if (best > cut.sdp_value + 1e-5 * w || cut.value > best + 1e-9 * w) ++sandwich;
    if (cut.value >= 0.878 * best) ++good;
  }
  rep.table = table.str();
  rep.add("GW cut <= brute-force max cut <= SDP value + 1e-5 W", sandwich == 0,
          cat(sandwich, " of ", instances, " instances violate"));
  rep.add("GW cut >= 0.878 * max cut on >= 95% of instances", good >= 0.95 * instances,
          cat(good, " of ", instances));
  return rep;
}

std::vector<BenchRow> bench_peel(const std::vector<double>& gammas, std::uint64_t seed,
                                 bool include_recursive) {
  struct Instance {
    std::string name;
    WeightedGraph g;
  };
  std::vector<Instance> instances;
  instances.push_back({"clique-n40-eps0.2", make_embedded_clique_instance(40, 0.2)});
  instances.push_back({"clique-n100-eps0.1", make_embedded_clique_instance(100, 0.1)});
  instances.push_back({"clique-n200-eps0.2", make_embedded_clique_instance(200, 0.2)});
  {
    std::vector<Edge> star;
    for (int v = 1; v < 30; ++v) star.push_back({0, v, 1.0});
    instances.push_back({"star-n30", WeightedGraph(30, star)});
  }
  instances.push_back({"random-n30-unit", make_random_instance(30, 0.3, WeightDistribution::Unit, seed)});
  instances.push_back(
      {"random-n60-uniform", make_random_instance(60, 0.5, WeightDistribution::Uniform01, seed + 1)});

  std::vector<BenchRow> rows;
  for (const auto& inst : instances) {
    const WeightedGraph& g = inst.g;
    const double recursive =
        include_recursive ? dissimilarity_reward(g, recursive_maxcut_baseline(g, seed)) : std::nan("");
    const double random = monte_carlo_mean(g, Objective::Dissimilarity, 20, seed).mean;
    for (double gamma : gammas) {
      PeelConfig cfg;
      cfg.gamma = gamma;
      const PeelResult pr = peel_off_first_maxcut_next(g, cfg, seed);
      rows.push_back({inst.name, g.size(), g.total_weight(), gamma, pr.threshold,
                      static_cast<int>(pr.peeled.size()), g.size() / gamma,
                      dissimilarity_reward(g, pr.tree), recursive, random});
    }
  }
  return rows;
}

std::string bench_csv(const std::vector<BenchRow>& rows) {
  std::ostringstream out;
  out << "instance,n,W,gamma,tau,peeled,peel_bound,peel_value,recursive_value,random_mean\n"
      << std::setprecision(12);
  for (const auto& r : rows) {
    out << r.instance << ',' << r.n << ',' << r.W << ',' << r.gamma << ',' << r.tau << ','
        << r.peeled << ',' << r.peel_bound << ',' << r.peel_value << ',' << r.recursive_value << ','
        << r.random_value << '\n';
  }
  return out.str();
}

}  // namespace hcopt
