#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "hcopt/dendrogram.hpp"
#include "hcopt/graph.hpp"
#include "hcopt/objectives.hpp"
#include "hcopt/rng.hpp"

namespace hcopt {

/// Uniformly random proper bipartition of `vertices` (size >= 2): a fair coin
/// per vertex, redrawn while either side is empty. Returns the side flags.
std::vector<char> random_bipartition(std::span<const int> vertices, RngStream& rng);

/// "Random always": recursively split uniformly at random down to singletons.
/// Adds the subtree over `vertices` to `builder` and returns its root id.
int random_always_into(TreeBuilder& builder, std::span<const int> vertices, RngStream& rng);

/// Random-always tree over vertices 0..n-1.
Dendrogram random_always(int n, RngStream& rng);

/// (n-2) W / 3: the exact expected similarity reward of random always.
double expected_similarity_reward_random(const WeightedGraph& g);

/// (2/3) n W, the value quoted for random always under the dissimilarity
/// objective. The exact expectation is expected_dissimilarity_reward_random_exact.
double expected_dissimilarity_reward_random(const WeightedGraph& g);

/// 2 (n+1) W / 3. Each third vertex k lies under the LCA of (i,j) with
/// probability 2/3, so E|T_ij| = 2 + 2(n-2)/3.
double expected_dissimilarity_reward_random_exact(const WeightedGraph& g);

struct MonteCarloEstimate {
  double mean;
  double stderr_;
  long long trials;
};

/// Mean and standard error of `objective` over independent random-always
/// trees; trial t draws from stream `seed`/t. stderr is 0 for one trial.
MonteCarloEstimate monte_carlo_mean(const WeightedGraph& g, Objective objective,
                                    long long trials, std::uint64_t seed);

/// Empirical Pr[k is not a leaf of T_ij] for every ordered triplet, over
/// `trials` random-always trees on n vertices. Indexed (i*n + j)*n + k;
/// entries with repeated indices are 0.
std::vector<double> triplet_nonleaf_frequencies(int n, long long trials, std::uint64_t seed);

}  // namespace hcopt
