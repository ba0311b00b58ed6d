#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

namespace hcopt {

struct Edge {
  int u = 0;
  int v = 0;
  double w = 0.0;
};

/// Symmetric, nonnegative pairwise weights over vertices 0..n-1.
///
/// Weights are either similarities or dissimilarities depending on the
/// objective applied to the graph. Absent pairs have weight zero and the
/// diagonal is always zero. Instances are immutable once constructed.
class WeightedGraph {
 public:
  /// Builds a graph from an edge list. Duplicate entries for the same
  /// unordered pair are accepted only when their weights agree.
  WeightedGraph(int n, std::span<const Edge> edges);
  explicit WeightedGraph(int n) : WeightedGraph(n, std::span<const Edge>{}) {}

  int size() const { return n_; }
  double weight(int i, int j) const { return w_[index(i, j)]; }
  double total_weight() const { return total_; }
  double max_weight() const { return max_; }

  /// Weighted degree of vertex i.
  double degree(int i) const;

  /// Edges with i < j and nonzero weight, in lexicographic order.
  std::vector<Edge> edges() const;

  /// Subgraph induced on `vertices`, relabeled 0..|vertices|-1 in the given
  /// order.
  WeightedGraph induced(std::span<const int> vertices) const;

  /// Row i of the dense weight matrix.
  std::span<const double> row(int i) const {
    return {w_.data() + static_cast<std::size_t>(i) * n_, static_cast<std::size_t>(n_)};
  }

  friend bool operator==(const WeightedGraph& a, const WeightedGraph& b) {
    return a.n_ == b.n_ && a.w_ == b.w_;
  }

 private:
  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(j);
  }

  int n_;
  std::vector<double> w_;
  double total_ = 0.0;
  double max_ = 0.0;
};

// Instance generators ---------------------------------------------------------

/// k vertical unit-weight cliques on k^2 vertices each, plus k^2 horizontal
/// cliques of weight 1+eps joining same-position vertices across the vertical
/// cliques. Vertex v*k^2 + p is position p of vertical clique v. n = k^3.
WeightedGraph make_tight_similarity_instance(int k, double eps = 0.1);

/// Complete bipartite K_{m,m} with unit weights minus the perfect matching
/// (i, i+m). L = {0..m-1}, R = {m..2m-1}. When `same_side_weight` is
/// positive, pairs inside L and inside R get that weight instead of zero; a
/// tiny value breaks average-linkage ties toward the matching.
WeightedGraph make_tight_dissimilarity_instance(int m, double same_side_weight = 0.0);

/// Unit-weight clique on the first ceil(eps*n) vertices; everything else 0.
WeightedGraph make_embedded_clique_instance(int n, double eps);

enum class WeightDistribution { Uniform01, Unit };

/// Each unordered pair present independently with probability `density`.
WeightedGraph make_random_instance(int n, double density, WeightDistribution dist,
                                   std::uint64_t seed);

WeightedGraph make_clique(int n, double w = 1.0);
WeightedGraph make_cycle(int n, double w = 1.0);

// Graph JSON: {"n": <int>, "edges": [[i, j, w], ...]} with i < j, 0-based.

std::string graph_to_json(const WeightedGraph& g);
WeightedGraph graph_from_json(const std::string& text);
void write_graph(const WeightedGraph& g, const std::filesystem::path& path);
WeightedGraph read_graph(const std::filesystem::path& path);

}  // namespace hcopt
