#pragma once

#include <cstdint>
#include <vector>

#include "hcopt/dendrogram.hpp"
#include "hcopt/graph.hpp"
#include "hcopt/sdp.hpp"
#include "hcopt/sdp_round.hpp"

namespace hcopt {

/// Goemans-Williamson max-cut constant used in the balancing analysis.
inline constexpr double kRhoGW = 0.87856;

struct PeelConfig {
  double gamma = 11.1;
  int gw_rounds = 100;
  SolverConfig solver;

  /// tau = 2 W gamma / n for the input graph.
  double threshold(const WeightedGraph& g) const;
};

struct MaxCut {
  std::vector<char> side;  // side[i] == 1 puts vertex i in S
  double value = 0.0;      // weight crossing the cut
  double sdp_value = 0.0;  // max-cut SDP objective at the solver's point
};

double cut_value(const WeightedGraph& g, const std::vector<char>& side);

/// Solves the max-cut SDP once and keeps the best of `rounds` hyperplane
/// cuts; the lowest round wins ties. Only proper cuts are returned. Graphs
/// without weight skip the solver and return a uniform proper bipartition.
MaxCut gw_maxcut(const WeightedGraph& g, int rounds, std::uint64_t seed,
                 const SolverConfig& cfg = {});

/// Exhaustive maximum cut for n <= 24.
double brute_force_maxcut(const WeightedGraph& g);

struct PeelResult {
  Dendrogram tree;
  std::vector<int> peeled;             // in peel order
  std::vector<double> peel_degrees;    // degree in the remaining subgraph at peel time
  double threshold = 0.0;
  double maxcut_value = 0.0;           // cut found on the remainder, 0 if none ran
};

/// "Peel-off first, max-cut next". While some remaining vertex has degree
/// above tau in the remaining subgraph, split it off (highest degree first,
/// ties by id); then cut the remainder with GW and finish each side with
/// random always. Peeled vertices form a caterpillar spine above the cut.
PeelResult peel_off_first_maxcut_next(const WeightedGraph& g, const PeelConfig& cfg,
                                      std::uint64_t seed);

/// Top-down GW max cut applied recursively down to singletons.
Dendrogram recursive_maxcut_baseline(const WeightedGraph& g, std::uint64_t seed,
                                     int rounds = 100, const SolverConfig& cfg = {});

/// Tree splitting off `order` one vertex at a time, the rest of the vertices
/// forming a caterpillar below in increasing id order.
Dendrogram peel_one_by_one_tree(int n, const std::vector<int>& order);

struct AlphaDissimilarity {
  double gamma;
  double eps;
  double delta;
  double alpha;
  double peel_factor;    // rho (1 - 1/gamma)(1 - 2 sqrt(eps gamma) / (1 - eps))
  double random_factor;  // 2 / (3 (1 - eps))
};

/// Both guarantees at (gamma, eps) with delta = sqrt(eps / gamma); alpha is
/// their minimum.
AlphaDissimilarity alpha_dissimilarity(double gamma, double eps);

/// Root sqrt(eps) of the balancing quadratic at this gamma. Throws
/// std::domain_error when no nonnegative real root exists.
double balance_epsilon(double gamma);

/// Scans gamma, solving the balancing quadratic for eps, then refines.
AlphaDissimilarity optimize_alpha_dissimilarity();

/// Best dissimilarity reward over `runs` runs each of peel-off first, max-cut
/// next and random always. Ties keep the earlier candidate.
BestOf best_of_dissimilarity(const WeightedGraph& g, int runs, std::uint64_t seed,
                             const PeelConfig& cfg = {});

}  // namespace hcopt
