#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "hcopt/dendrogram.hpp"
#include "hcopt/graph.hpp"

namespace hcopt {

enum class Objective {
  Dasgupta,       // minimize sum w_ij |T_ij| over similarity weights
  Similarity,     // maximize sum w_ij (n - |T_ij|)
  Dissimilarity,  // maximize sum w_ij |T_ij| over dissimilarity weights
};

Objective parse_objective(std::string_view name);
std::string_view objective_name(Objective obj);
bool is_maximization(Objective obj);

/// |T_ij| for every pair: leaf count of the lowest common ancestor of i and j.
class LcaSizes {
 public:
  explicit LcaSizes(const Dendrogram& t);

  int n() const { return n_; }
  int operator()(int i, int j) const { return sizes_[static_cast<std::size_t>(i) * n_ + j]; }

 private:
  int n_;
  std::vector<int> sizes_;
};

inline LcaSizes lca_sizes(const Dendrogram& t) { return LcaSizes(t); }

double dasgupta_cost(const WeightedGraph& g, const Dendrogram& t);
double similarity_reward(const WeightedGraph& g, const Dendrogram& t);
double dissimilarity_reward(const WeightedGraph& g, const Dendrogram& t);
double evaluate(Objective obj, const WeightedGraph& g, const Dendrogram& t);

/// sum over pairs (i,j) and k != i,j of w_ij * [k is not a leaf of T_ij].
/// Equals similarity_reward by a counting identity; computed independently
/// from leaf-membership tests.
double triplet_nonleaf_decomposition(const WeightedGraph& g, const Dendrogram& t);

struct OptimalTree {
  Dendrogram tree;
  double value;
  long long trees_enumerated;
};

inline constexpr int kBruteForceMaxLeaves = 10;

/// Exhaustive search over all (2n-3)!! leaf-labeled binary trees, built by
/// inserting leaf k into every edge of each tree on leaves 0..k-1. The witness
/// is the first optimum in that order. Throws for n > kBruteForceMaxLeaves.
OptimalTree brute_force_opt(const WeightedGraph& g, Objective obj);

/// Number of leaf-labeled rooted binary trees on n leaves, (2n-3)!!.
long long count_binary_trees(int n);

}  // namespace hcopt
