#pragma once

#include <span>
#include <string>
#include <vector>

namespace hcopt {

/// Rooted binary tree whose leaves are in bijection with vertices 0..n-1.
///
/// Nodes live in a flat array; every internal node has exactly two children
/// and caches its leaf count. A Dendrogram is validated on construction and
/// immutable afterwards. Use TreeBuilder to assemble one.
class Dendrogram {
 public:
  struct Node {
    int left = -1;
    int right = -1;
    int leaf = -1;  // vertex id for leaves, -1 for internal nodes
    int size = 1;

    bool is_leaf() const { return leaf >= 0; }
  };

  /// Validates that `nodes` reachable from `root` form a binary tree whose
  /// leaves are exactly {0..n-1}. Unreachable nodes are dropped.
  Dendrogram(std::vector<Node> nodes, int root);

  int num_leaves() const { return nodes_[root_].size; }
  int root() const { return root_; }
  const Node& node(int id) const { return nodes_[id]; }
  std::span<const Node> nodes() const { return nodes_; }

  /// Leaves under `id` in left-to-right order.
  std::vector<int> leaves_under(int id) const;

  /// Parent of each node; -1 for the root.
  std::vector<int> parents() const;

  friend bool operator==(const Dendrogram& a, const Dendrogram& b);

 private:
  std::vector<Node> nodes_;
  int root_;
};

/// Arena for assembling dendrograms bottom-up.
class TreeBuilder {
 public:
  int leaf(int vertex);
  int join(int left, int right);
  int size(int node) const { return nodes_.at(node).size; }

  /// Left-leaning chain over `vertices`: the first vertex is split off at the
  /// top, then the second, and so on. Requires a nonempty list.
  int caterpillar(std::span<const int> vertices);

  /// Chain over subtrees: subtrees[0] split off at the top.
  int chain(std::span<const int> subtrees);

  Dendrogram build(int root) const;

 private:
  std::vector<Dendrogram::Node> nodes_;
};

/// Caterpillar over 0..n-1 that merges 0 and 1 first, then adds 2, 3, ...
Dendrogram make_caterpillar(int n);

// Dendrogram JSON: {"leaf": i} or {"children": [<node>, <node>]}.
std::string dendrogram_to_json(const Dendrogram& t);
Dendrogram dendrogram_from_json(const std::string& text);

}  // namespace hcopt
