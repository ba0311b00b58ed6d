#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "hcopt/dendrogram.hpp"
#include "hcopt/graph.hpp"
#include "hcopt/rng.hpp"
#include "hcopt/sdp.hpp"

namespace hcopt {

/// Random unit vector in R^dim: standard normal components, normalized.
std::vector<double> random_unit_vector(int dim, RngStream& rng);

struct HyperplaneCut {
  std::vector<char> side;  // 1 when <v_i, v_0> >= 0
  int redraws = 0;         // extra hyperplanes drawn because a side was empty
  bool fallback = false;   // true when a uniform proper bipartition was used
};

/// Splits the level-`level` vectors by a random hyperplane through the
/// origin. One-sided outcomes are redrawn up to `max_redraws` times, then
/// replaced by a uniform random proper bipartition. Needs n >= 2.
HyperplaneCut hyperplane_cut(const VectorAssignment& v, int level, RngStream& rng,
                             int max_redraws = 100);

/// Level used for the first cut: floor(n/2) - 1, clamped to 1 for n = 3.
int sdp_rounding_level(int n);

/// "SDP first, random next" on an already solved HC program: one hyperplane
/// cut of the middle-level vectors, then random always on both sides.
Dendrogram sdp_first_random_next(const WeightedGraph& g, const SdpSolution& sol, RngStream& rng);

/// Solves the HC program with `cfg`, then rounds with a stream derived from
/// `seed`.
Dendrogram sdp_first_random_next(const WeightedGraph& g, std::uint64_t seed,
                                 const SolverConfig& cfg = {});

struct TripletAngles {
  double ij;
  double ik;
  double jk;
};

/// Probabilities of the four outcomes of one random hyperplane on three
/// vectors: the named pair stays together while the third is cut away, or
/// all three land on the same side.
struct TripletProbabilities {
  double ij_k;
  double ik_j;
  double jk_i;
  double together;
};

TripletAngles triplet_angles(std::span<const double> a, std::span<const double> b,
                             std::span<const double> c);

/// Closed forms: ij_k = (ik + jk - ij) / 2pi and cyclically; together is
/// 1 - (ij + ik + jk) / 2pi. Angles must lie in [0, pi/2]; throws when any
/// probability falls below -1e-12.
TripletProbabilities triplet_separation_probability(const TripletAngles& a);

struct TripletEstimate {
  TripletProbabilities freq;
  long long trials;
};

/// Empirical outcome frequencies over `trials` random hyperplanes.
TripletEstimate mc_verify_triplet(std::span<const double> a, std::span<const double> b,
                                  std::span<const double> c, long long trials, std::uint64_t seed);

/// (n-2)(1/4 - theta_bar / 2pi).
double factor_revealing_lower_bound(int n, double theta_bar);

/// Optimum of the per-side angle program: minimize the sum of n-2 angles in
/// [0, pi/2] subject to sum of cosines <= n/2 - 1. Optimal points have every
/// angle at 0 or pi/2 except at most one, so the search runs over the number
/// of zero angles and solves for the remaining one.
double factor_revealing_side(int n);

/// Minimum of (1/2pi) sum_{k != i,j} (theta_ik + theta_jk - theta_bar) over
/// both sides: (2 * side - (n-2) theta_bar) / 2pi.
double factor_revealing_numeric(int n, double theta_bar);

/// epsilon_1 solving (1 - 2 e1/e2)(1/2 - 2 arccos(1-e2) / 3pi) = 1 / (3(1-e1))
/// on (0, e2/2). Throws std::domain_error when there is no root.
double balance_epsilon1(double eps2);

/// 1 / (3(1 - e1)) at the balancing e1.
double alpha_similarity(double eps2);

struct AlphaSimilarity {
  double eps2;
  double eps1;
  double alpha;
};

/// Grid scan over e2 followed by Brent refinement.
AlphaSimilarity optimize_alpha_similarity();

struct BestOf {
  Dendrogram tree;
  double value;
  std::string algorithm;
  int run;
};

/// Best similarity reward over `runs` runs each of random always and SDP
/// first, random next. The HC program is solved once; runs differ in their
/// rounding and splitting randomness. Ties keep the earlier candidate, with
/// random always before SDP in each run.
BestOf best_of_similarity(const WeightedGraph& g, int runs, std::uint64_t seed,
                          const SolverConfig& cfg = {});

/// Same as above with a precomputed HC solution.
BestOf best_of_similarity(const WeightedGraph& g, const SdpSolution& sol, int runs,
                          std::uint64_t seed);

}  // namespace hcopt
