#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hcopt/dendrogram.hpp"
#include "hcopt/graph.hpp"
#include "hcopt/objectives.hpp"

namespace hcopt {

enum class LinkageMode {
  Similarity,     // merge the pair with the largest average weight
  Dissimilarity,  // merge the pair with the smallest average weight
};

/// How exact ties between candidate merges are resolved.
///
/// Lexicographic picks the pair with the smallest (min id, max id) cluster
/// ids. Perturb adds i.i.d. noise of relative size `magnitude` (times the
/// largest weight) to every pair before running; the merge trace still
/// reports unperturbed averages.
struct TieBreak {
  enum class Kind { Lexicographic, Perturb };
  Kind kind = Kind::Lexicographic;
  std::uint64_t seed = 0;
  double magnitude = 1e-9;

  static TieBreak lexicographic() { return {}; }
  static TieBreak perturb(std::uint64_t seed, double magnitude = 1e-9) {
    return {Kind::Perturb, seed, magnitude};
  }
};

/// One agglomeration step. Cluster ids follow the usual convention: leaves
/// are 0..n-1 and the cluster formed at step s gets id n+s.
struct MergeStep {
  int cluster_a;
  int cluster_b;
  int size_a;
  int size_b;
  double average;  // mean weight between the two clusters
};

struct LinkageResult {
  Dendrogram tree;
  std::vector<MergeStep> trace;
};

/// Average-linkage agglomerative clustering, O(n^3) with cached
/// inter-cluster weight sums.
LinkageResult average_linkage(const WeightedGraph& g, LinkageMode mode,
                              TieBreak tie = TieBreak::lexicographic());

/// Trace rows as CSV: step,size_a,size_b,average.
std::string merge_trace_csv(const std::vector<MergeStep>& trace);

/// Tree that merges each vertical clique of the tight similarity instance
/// first, then joins the vertical cliques.
Dendrogram vertical_first_tree(int k);

/// Tree whose top split is (L, R) on the tight dissimilarity instance.
Dendrogram top_bipartition_tree(int m);

/// Tiny same-side weight used to steer average linkage toward the matching
/// on the tight dissimilarity instance, mirroring the perturbation argument
/// that makes those zero-weight ties adversarial.
inline constexpr double kMatchingTieWeight = 1e-6;

struct LinkageRatio {
  int parameter;  // k for similarity, m for dissimilarity
  int n;
  double algorithm_value;
  double reference_value;
  double ratio;
};

/// Average linkage on a generated tight instance against the reference tree:
/// vertical-first for similarity, top-(L,R) cut for dissimilarity.
/// Dissimilarity runs linkage on the tie-steered instance and scores the
/// resulting tree on the exact instance.
LinkageRatio linkage_ratio_report(int parameter, Objective objective, double eps = 0.1);

}  // namespace hcopt
