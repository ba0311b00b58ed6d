// Acceptance suite: one PASS/FAIL line per criterion.
//
//   hcopt_acceptance            run all criteria
//   hcopt_acceptance 7          run criterion 7 only
//
// Exit status is nonzero when any selected criterion fails.

#include <array>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <iostream>
#include <limits>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "hcopt/graph.hpp"
#include "hcopt/harness.hpp"
#include "hcopt/linkage.hpp"
#include "hcopt/objectives.hpp"
#include "hcopt/peel_maxcut.hpp"
#include "hcopt/random_hc.hpp"
#include "hcopt/rng.hpp"
#include "hcopt/sdp.hpp"
#include "hcopt/sdp_round.hpp"

using namespace hcopt;

namespace {

constexpr std::uint64_t kSeed = 20240611;

struct Outcome {
  bool passed;
  std::string detail;
};

struct Criterion {
  int id;
  std::string title;
  double budget_s;
  std::function<Outcome()> run;
};

template <typename... Ts>
std::string cat(const Ts&... parts) {
  std::ostringstream out;
  out << std::setprecision(10);
  (out << ... << parts);
  return out.str();
}

// Collects sub-check failures into one outcome.
struct Tally {
  bool ok = true;
  std::vector<std::string> notes;
  void check(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      notes.push_back(what);
    }
  }
  void note(const std::string& what) { notes.push_back(what); }
  Outcome outcome() const {
    std::string d;
    for (std::size_t i = 0; i < notes.size(); ++i) d += (i ? "; " : "") + notes[i];
    return {ok, d};
  }
};

WeightedGraph instance(int index, int min_n, int max_n, std::uint64_t seed) {
  RngStream local = RngStream(seed, label_hash("acceptance-instance")).child(index);
  const int n = min_n + static_cast<int>(local.below(max_n - min_n + 1));
  const double density = 0.4 + 0.6 * local.uniform();
  while (true) {
    WeightedGraph g = make_random_instance(n, density, WeightDistribution::Uniform01, local.next_u64());
    if (g.total_weight() > 0.0) return g;
  }
}

Outcome tight_dissimilarity() {
  Tally t;
  std::vector<int> ms;
  for (int m = 2; m <= 50; ++m) ms.push_back(m);
  const auto rows = tight_dissimilarity_table(ms);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& r = rows[i];
    t.check(r.al_value == r.closed_form, cat("m=", r.m, " AL ", r.al_value, " != ", r.closed_form));
    t.check(r.ratio > 2.0 / 3.0, cat("m=", r.m, " ratio ", r.ratio, " <= 2/3"));
    if (i > 0) t.check(r.ratio < rows[i - 1].ratio, cat("ratio not decreasing at m=", r.m));
  }
  t.check(rows.front().ratio == 1.0, cat("ratio(m=2) = ", rows.front().ratio));
  t.check(rows.back().ratio < 0.6803 + 1e-9, cat("ratio(m=50) = ", rows.back().ratio));
  t.note(cat("ratio m=2 ", rows.front().ratio, ", m=50 ", rows.back().ratio));
  return t.outcome();
}

Outcome tight_similarity() {
  Tally t;
  const auto rows = tight_similarity_table({2, 3, 4, 5, 6}, 0.1);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& r = rows[i];
    t.check(r.horizontal_first, cat("k=", r.k, " first merges not horizontal"));
    if (i > 0) t.check(r.ratio < rows[i - 1].ratio, cat("ratio not decreasing at k=", r.k));
  }
  t.check(rows.back().ratio < 0.40, cat("ratio(k=6) = ", rows.back().ratio, " not < 0.40"));
  std::string series;
  for (const auto& r : rows) series += cat(r.k == 2 ? "" : " ", r.ratio);
  t.note("ratios k=2..6: " + series);
  return t.outcome();
}

Outcome random_expectation() {
  Tally t;
  int sim_off = 0, dis_off = 0, exact_off = 0;
  double worst_dis_z = 0.0;
  for (int i = 0; i < 10; ++i) {
    const WeightedGraph g = instance(i, 4, 8, kSeed + 3);
    const auto sim = monte_carlo_mean(g, Objective::Similarity, 100000, kSeed + 10 * i);
    const auto dis = monte_carlo_mean(g, Objective::Dissimilarity, 100000, kSeed + 10 * i + 1);
    if (std::abs(sim.mean - expected_similarity_reward_random(g)) > 4.0 * sim.stderr_) ++sim_off;
    const double z = std::abs(dis.mean - expected_dissimilarity_reward_random(g)) / dis.stderr_;
    worst_dis_z = std::max(worst_dis_z, z);
    if (z > 4.0) ++dis_off;
    if (std::abs(dis.mean - expected_dissimilarity_reward_random_exact(g)) > 4.0 * dis.stderr_) ++exact_off;
  }
  const int n = 6;
  const auto freq = triplet_nonleaf_frequencies(n, 100000, kSeed + 7);
  double worst = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (i != j && j != k && i != k) worst = std::max(worst, std::abs(freq[(i * n + j) * n + k] - 1.0 / 3.0));
  t.check(sim_off == 0, cat(sim_off, "/10 similarity means outside 4 stderr of (n-2)W/3"));
  t.check(worst <= 0.01, cat("triplet non-leaf deviation ", worst));
  t.check(dis_off == 0, cat(dis_off, "/10 dissimilarity means outside 4 stderr of (2/3)nW, worst z ",
                            worst_dis_z));
  t.note(cat(exact_off, "/10 dissimilarity means outside 4 stderr of 2(n+1)W/3"));
  return t.outcome();
}

std::array<std::vector<double>, 3> acute_triple(RngStream& rng) {
  while (true) {
    std::array<std::vector<double>, 3> v{random_unit_vector(3, rng), random_unit_vector(3, rng),
                                         random_unit_vector(3, rng)};
    const auto d = [&](int a, int b) { return v[a][0] * v[b][0] + v[a][1] * v[b][1] + v[a][2] * v[b][2]; };
    if (d(0, 1) >= 0 && d(0, 2) >= 0 && d(1, 2) >= 0) return v;
  }
}

Outcome triplet_closed_forms() {
  Tally t;
  constexpr long long kTrials = 1000000;
  RngStream rng(kSeed, label_hash("acceptance-triplets"));
  double worst_z = 0.0, worst_sum = 0.0;
  for (int i = 0; i < 50; ++i) {
    const auto v = acute_triple(rng);
    const TripletProbabilities p = triplet_separation_probability(triplet_angles(v[0], v[1], v[2]));
    const TripletEstimate e = mc_verify_triplet(v[0], v[1], v[2], kTrials, rng.next_u64());
    const double sum = p.ij_k + p.ik_j + p.jk_i + p.together;
    worst_sum = std::max(worst_sum, std::abs(sum - 1.0));
    // A few ulps of rounding in the closed-form arithmetic.
    t.check(std::abs(sum - 1.0) <= 4 * std::numeric_limits<double>::epsilon(),
            cat("triple ", i, " closed forms sum to ", sum));
    for (auto [f, q] : {std::pair{e.freq.ij_k, p.ij_k}, std::pair{e.freq.ik_j, p.ik_j},
                        std::pair{e.freq.jk_i, p.jk_i}, std::pair{e.freq.together, p.together}}) {
      const double se = std::sqrt(q * (1 - q) / kTrials);
      const double z = se > 0 ? std::abs(f - q) / se : (f == q ? 0.0 : 1e300);
      worst_z = std::max(worst_z, z);
      t.check(z <= 4.0, cat("triple ", i, " frequency ", f, " vs ", q));
    }
  }
  t.note(cat("max |z| ", worst_z, ", max |sum - 1| ", worst_sum));
  return t.outcome();
}

Outcome factor_revealing() {
  Tally t;
  int below = 0;
  double smallest = 1e300;
  for (int n = 3; n <= 30; ++n) {
    for (int s = 0; s <= 15; ++s) {
      const double tb = 0.1 * s;
      const double gap = factor_revealing_numeric(n, tb) - factor_revealing_lower_bound(n, tb);
      smallest = std::min(smallest, gap);
      if (gap < -1e-6) ++below;
    }
  }
  t.check(below == 0, cat(below, " grid points below the bound"));
  t.note(cat("smallest gap ", smallest));
  return t.outcome();
}

Outcome constants() {
  Tally t;
  const auto sim = optimize_alpha_similarity();
  const auto dis = optimize_alpha_dissimilarity();
  t.check(std::abs(sim.alpha - 0.336379) <= 5e-5, cat("alpha_sim ", sim.alpha));
  t.check(sim.eps2 >= 0.13 && sim.eps2 <= 0.15, cat("eps2* ", sim.eps2));
  t.check(std::abs(dis.alpha - 0.667078) <= 5e-5, cat("alpha_dissim ", dis.alpha));
  t.check(dis.gamma >= 10.0 && dis.gamma <= 12.0, cat("gamma* ", dis.gamma));
  t.check(dis.eps >= 4e-4 && dis.eps <= 8e-4, cat("eps* ", dis.eps));
  t.note(cat("alpha_sim ", sim.alpha, " at eps2 ", sim.eps2, "; alpha_dissim ", dis.alpha,
             " at gamma ", dis.gamma, ", eps ", dis.eps));
  return t.outcome();
}

Outcome relaxation() {
  Tally t;
  double worst_gap = 1e300, worst_res = 0.0;
  for (int i = 0; i < 20; ++i) {
    const WeightedGraph g = instance(i, 3, 8, kSeed + 11);
    const OptimalTree opt = brute_force_opt(g, Objective::Similarity);
    SolverConfig cfg;
    cfg.seed = kSeed + i;
    cfg.warm_start = tree_to_vectors(opt.tree, g.size());
    const SdpSolution sol = solve_low_rank(build_hc_sdp(g), cfg);
    const double gap = sol.objective - opt.value;
    worst_gap = std::min(worst_gap, gap / (g.size() * g.total_weight()));
    worst_res = std::max(worst_res, sol.residuals.max());
    t.check(gap >= -1e-3 * g.size() * g.total_weight(), cat("instance ", i, " SDP ", sol.objective,
                                                            " < OPT ", opt.value));
    t.check(sol.residuals.max() <= 1e-5, cat("instance ", i, " residual ", sol.residuals.max()));
  }
  t.note(cat("min (SDP-OPT)/nW ", worst_gap, ", max residual ", worst_res));
  return t.outcome();
}

Outcome embedding_exactness() {
  Tally t;
  RngStream rng(kSeed, label_hash("acceptance-embedding"));
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    const int n = 2 + static_cast<int>(rng.below(9));
    const WeightedGraph g =
        make_random_instance(n, rng.uniform(), WeightDistribution::Uniform01, rng.next_u64());
    const Dendrogram tree = random_always(n, rng);
    const double sdp = evaluate_objective(build_hc_sdp(g), tree_to_vectors(tree, n));
    const double reward = similarity_reward(g, tree);
    const double rel = std::abs(sdp - reward) / std::max(1.0, std::abs(reward));
    worst = std::max(worst, rel);
    t.check(rel <= 1e-9, cat("pair ", i, " SDP ", sdp, " vs reward ", reward));
  }
  t.note(cat("max relative error ", worst));
  return t.outcome();
}

Outcome gw_sandwich() {
  Tally t;
  int good = 0;
  for (int i = 0; i < 50; ++i) {
    const WeightedGraph g = instance(i, 2, 12, kSeed + 13);
    const double best = brute_force_maxcut(g);
    const MaxCut cut = gw_maxcut(g, 100, kSeed + i);
    t.check(best <= cut.sdp_value + 1e-5 * g.total_weight(),
            cat("instance ", i, " max cut ", best, " > SDP ", cut.sdp_value));
    if (cut.value >= 0.878 * best) ++good;
  }
  t.check(good >= 48, cat(good, "/50 instances reach 0.878 of the max cut"));
  t.note(cat(good, "/50 instances reach 0.878 of the max cut"));
  return t.outcome();
}

Outcome best_of_expectation() {
  Tally t;
  constexpr int kSeeds = 50;
  constexpr double kZ = 1.6448536269514722;  // one-sided 95%
  int sim_fail = 0, dis_fail = 0;
  double min_sim = 1e300, min_dis = 1e300;
  for (int i = 0; i < 20; ++i) {
    const WeightedGraph g = instance(i, 3, 8, kSeed + 17);
    const double opt_sim = brute_force_opt(g, Objective::Similarity).value;
    const double opt_dis = brute_force_opt(g, Objective::Dissimilarity).value;
    SolverConfig cfg;
    cfg.seed = kSeed + i;
    const SdpSolution sol = solve_low_rank(build_hc_sdp(g), cfg);
    double s1 = 0, s2 = 0, d1 = 0, d2 = 0;
    for (int s = 0; s < kSeeds; ++s) {
      const double vs = best_of_similarity(g, sol, 1, kSeed + 1000 * i + s).value;
      const double vd = best_of_dissimilarity(g, 1, kSeed + 1000 * i + s).value;
      s1 += vs;
      s2 += vs * vs;
      d1 += vd;
      d2 += vd * vd;
    }
    const auto lower = [&](double sum, double sq) {
      const double mean = sum / kSeeds;
      const double var = std::max(0.0, (sq - kSeeds * mean * mean) / (kSeeds - 1));
      return mean - kZ * std::sqrt(var / kSeeds);
    };
    const double ls = lower(s1, s2);
    const double ld = lower(d1, d2);
    min_sim = std::min(min_sim, ls / opt_sim);
    min_dis = std::min(min_dis, ld / opt_dis);
    if (!(ls > opt_sim / 3.0)) ++sim_fail;
    if (!(ld > 2.0 * opt_dis / 3.0)) ++dis_fail;
  }
  t.check(sim_fail == 0, cat(sim_fail, "/20 instances without mean best-of similarity > OPT/3"));
  t.check(dis_fail == 0, cat(dis_fail, "/20 instances without mean best-of dissimilarity > 2 OPT/3"));
  t.note(cat("min lower-confidence ratio sim ", min_sim, ", dissim ", min_dis));
  return t.outcome();
}

Outcome peel_bound() {
  Tally t;
  const auto rows = bench_peel({1.05, 1.5, 2, 3, 4, 5, 8, 11.1, 16, 32}, kSeed, false);
  int violations = 0, max_peeled = 0;
  for (const auto& r : rows) {
    if (r.peeled > r.peel_bound) {
      ++violations;
      t.check(false, cat(r.instance, " gamma ", r.gamma, " peeled ", r.peeled, " > ", r.peel_bound));
    }
    max_peeled = std::max(max_peeled, r.peeled);
  }
  t.note(cat(rows.size(), " sweep rows, ", violations, " violations, max peeled ", max_peeled));
  return t.outcome();
}

Outcome clique_gap() {
  Tally t;
  const WeightedGraph g = make_embedded_clique_instance(200, 0.2);
  std::vector<int> clique;
  for (int v = 0; v < 200; ++v) {
    if (g.degree(v) > 0.0) clique.push_back(v);
  }
  const double reference = dissimilarity_reward(g, peel_one_by_one_tree(200, clique));
  const double recursive = dissimilarity_reward(g, recursive_maxcut_baseline(g, kSeed));
  const BestOf best = best_of_dissimilarity(g, 5, kSeed);
  const double r_rec = recursive / reference;
  const double r_best = best.value / reference;
  t.check(r_rec < r_best, cat("recursive ratio ", r_rec, " not below best-of ratio ", r_best));
  t.note(cat("reference ", reference, ", recursive ratio ", r_rec, ", best-of ratio ", r_best, " (",
             best.algorithm, ")"));
  // Context only: the default gamma keeps tau above every clique degree here.
  PeelConfig low;
  low.gamma = 4.0;
  const BestOf at_low = best_of_dissimilarity(g, 5, kSeed, low);
  t.note(cat("tau ", PeelConfig{}.threshold(g), " vs clique degree ", clique.size() - 1,
             "; at gamma 4 best-of ratio ", at_low.value / reference));
  return t.outcome();
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> criteria = {
      {1, "tight dissimilarity family: AL value exact, ratio decreasing to < 0.6803", 10, tight_dissimilarity},
      {2, "tight similarity family: ratio decreasing, < 0.40 at k=6, horizontal merges first", 30,
       tight_similarity},
      {3, "random always: similarity, triplet and dissimilarity expectations", 60, random_expectation},
      {4, "triplet hyperplane probabilities match closed forms", 60, triplet_closed_forms},
      {5, "factor-revealing optimum >= (n-2)(1/4 - theta_bar/2pi) - 1e-6", 30, factor_revealing},
      {6, "constants alpha_sim and alpha_dissim", 10, constants},
      {7, "HC relaxation dominates brute-force OPT with residuals <= 1e-5", 600, relaxation},
      {8, "integral embedding reproduces the similarity reward", 600, embedding_exactness},
      {9, "GW sandwich and 0.878 ratio", 300, gw_sandwich},
      {10, "best-of expectations exceed OPT/3 and 2 OPT/3", 600, best_of_expectation},
      {11, "peel count <= n/gamma across the sweep", 600, peel_bound},
      {12, "recursive max-cut below best-of on the embedded clique", 120, clique_gap},
  };

  int only = 0;
  if (argc > 1) only = std::atoi(argv[1]);
  bool all_ok = true;
  for (const auto& c : criteria) {
    if (only != 0 && c.id != only) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > c.budget_s) {
      o.passed = false;
      o.detail += cat("; runtime ", secs, " s over budget ", c.budget_s, " s");
    }
    all_ok = all_ok && o.passed;
    std::cout << (o.passed ? "PASS" : "FAIL") << " [" << c.id << "] " << c.title << " ("
              << std::fixed << std::setprecision(2) << secs << " s)";
    std::cout.unsetf(std::ios::floatfield);
    if (!o.detail.empty()) std::cout << ": " << o.detail;
    std::cout << std::endl;
  }
  return all_ok ? 0 : 1;
}
