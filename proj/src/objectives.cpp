#include "hcopt/objectives.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace hcopt {

Objective parse_objective(std::string_view name) {
  if (name == "dasgupta") return Objective::Dasgupta;
  if (name == "sim" || name == "similarity") return Objective::Similarity;
  if (name == "dissim" || name == "dissimilarity") return Objective::Dissimilarity;
  throw std::invalid_argument("unknown objective '" + std::string(name) + "'");
}

std::string_view objective_name(Objective obj) {
  switch (obj) {
    case Objective::Dasgupta: return "dasgupta";
    case Objective::Similarity: return "sim";
    case Objective::Dissimilarity: return "dissim";
  }
  return "?";
}

bool is_maximization(Objective obj) { return obj != Objective::Dasgupta; }

namespace {

// Calls fn(node, leaves_left, leaves_right) for every internal node.
template <class Fn>
void for_each_split(const Dendrogram& t, Fn&& fn) {
  const auto nodes = t.nodes();
  std::vector<std::vector<int>> leaves(nodes.size());
  // Nodes are stored children-first.
  for (int id = 0; id < static_cast<int>(nodes.size()); ++id) {
    const auto& nd = nodes[id];
    if (nd.is_leaf()) {
      leaves[id] = {nd.leaf};
      continue;
    }
    fn(id, leaves[nd.left], leaves[nd.right]);
    auto& mine = leaves[id];
    mine = std::move(leaves[nd.left]);
    mine.insert(mine.end(), leaves[nd.right].begin(), leaves[nd.right].end());
    leaves[nd.right].clear();
    leaves[nd.right].shrink_to_fit();
  }
}

void check_sizes(const WeightedGraph& g, const Dendrogram& t) {
  if (g.size() != t.num_leaves()) {
    throw std::invalid_argument("graph has " + std::to_string(g.size()) +
                                " vertices but tree has " + std::to_string(t.num_leaves()) +
                                " leaves");
  }
}

template <class Mult>
double weighted_lca_sum(const WeightedGraph& g, const Dendrogram& t, Mult&& mult) {
  check_sizes(g, t);
  const LcaSizes sizes(t);
  double total = 0.0;
  for (int i = 0; i < g.size(); ++i) {
    const auto row = g.row(i);
    for (int j = i + 1; j < g.size(); ++j) {
      if (row[j] != 0.0) {
        total += row[j] * mult(sizes(i, j));
      }
    }
  }
  return total;
}

}  // namespace

LcaSizes::LcaSizes(const Dendrogram& t) : n_(t.num_leaves()) {
  sizes_.assign(static_cast<std::size_t>(n_) * n_, 1);
  for_each_split(t, [&](int id, const std::vector<int>& left, const std::vector<int>& right) {
    const int s = t.node(id).size;
    for (int a : left) {
      for (int b : right) {
        sizes_[static_cast<std::size_t>(a) * n_ + b] = s;
        sizes_[static_cast<std::size_t>(b) * n_ + a] = s;
      }
    }
  });
}

double dasgupta_cost(const WeightedGraph& g, const Dendrogram& t) {
  return weighted_lca_sum(g, t, [](int s) { return static_cast<double>(s); });
}

double similarity_reward(const WeightedGraph& g, const Dendrogram& t) {
  const int n = g.size();
  return weighted_lca_sum(g, t, [n](int s) { return static_cast<double>(n - s); });
}

double dissimilarity_reward(const WeightedGraph& g, const Dendrogram& t) {
  return dasgupta_cost(g, t);
}

double evaluate(Objective obj, const WeightedGraph& g, const Dendrogram& t) {
  switch (obj) {
    case Objective::Dasgupta: return dasgupta_cost(g, t);
    case Objective::Similarity: return similarity_reward(g, t);
    case Objective::Dissimilarity: return dissimilarity_reward(g, t);
  }
  throw std::logic_error("unhandled objective");
}

double triplet_nonleaf_decomposition(const WeightedGraph& g, const Dendrogram& t) {
  check_sizes(g, t);
  const int n = g.size();
  const auto nodes = t.nodes();

  // Leaves of any subtree occupy a contiguous range of DFS positions.
  std::vector<int> pos(n), lo(nodes.size()), hi(nodes.size());
  {
    int next = 0;
    std::vector<std::pair<int, bool>> stack{{t.root(), false}};
    while (!stack.empty()) {
      auto [id, done] = stack.back();
      stack.pop_back();
      const auto& nd = nodes[id];
      if (nd.is_leaf()) {
        pos[nd.leaf] = next;
        lo[id] = next;
        hi[id] = ++next;
      } else if (done) {
        lo[id] = lo[nd.left];
        hi[id] = hi[nd.right];
      } else {
        stack.push_back({id, true});
        stack.push_back({nd.right, false});
        stack.push_back({nd.left, false});
      }
    }
  }
  std::vector<int> lca(static_cast<std::size_t>(n) * n, -1);
  for_each_split(t, [&](int id, const std::vector<int>& left, const std::vector<int>& right) {
    for (int a : left) {
      for (int b : right) {
        lca[static_cast<std::size_t>(a) * n + b] = id;
        lca[static_cast<std::size_t>(b) * n + a] = id;
      }
    }
  });

  double total = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double w = g.weight(i, j);
      if (w == 0.0) {
        continue;
      }
      const int node = lca[static_cast<std::size_t>(i) * n + j];
      for (int k = 0; k < n; ++k) {
        if (k == i || k == j) {
          continue;
        }
        if (pos[k] < lo[node] || pos[k] >= hi[node]) {
          total += w;
        }
      }
    }
  }
  return total;
}

long long count_binary_trees(int n) {
  long long c = 1;
  for (int k = 3; k <= n; ++k) {
    c *= 2 * k - 3;
  }
  return c;
}

namespace {

// Enumerates every leaf-labeled binary tree by leaf insertion. Leaves are
// node ids 0..n-1, internal nodes n..2n-2.
class TreeEnumerator {
 public:
  TreeEnumerator(const WeightedGraph& g, Objective obj)
      : g_(g), obj_(obj), n_(g.size()),
        parent_(2 * n_ - 1, -1), left_(2 * n_ - 1, -1), right_(2 * n_ - 1, -1),
        inside_(std::size_t{1} << n_, 0.0) {
    for (unsigned mask = 1; mask < inside_.size(); ++mask) {
      const int low = std::countr_zero(mask);
      const unsigned rest = mask & (mask - 1);
      double s = inside_[rest];
      for (unsigned r = rest; r != 0; r &= r - 1) {
        s += g_.weight(low, std::countr_zero(r));
      }
      inside_[mask] = s;
    }
    scale_ = std::max(1.0, g_.total_weight() * n_);
  }

  OptimalTree run() {
    root_ = 0;
    insert_from(1);
    TreeBuilder b;
    const int root = rebuild(b, best_root_, best_left_, best_right_);
    return {b.build(root), best_value_, count_};
  }

 private:
  void insert_from(int k) {
    if (k == n_) {
      score();
      return;
    }
    const int u = n_ + k - 1;  // new internal node
    // Existing nodes: leaves 0..k-1, internal n..n+k-2.
    for (int idx = 0; idx < 2 * k - 1; ++idx) {
      const int x = idx < k ? idx : n_ + (idx - k);
      const int p = parent_[x];
      left_[u] = x;
      right_[u] = k;
      parent_[x] = u;
      parent_[k] = u;
      parent_[u] = p;
      const int old_root = root_;
      if (p < 0) {
        root_ = u;
      } else if (left_[p] == x) {
        left_[p] = u;
      } else {
        right_[p] = u;
      }

      insert_from(k + 1);

      if (p < 0) {
        root_ = old_root;
      } else if (left_[p] == u) {
        left_[p] = x;
      } else {
        right_[p] = x;
      }
      parent_[x] = p;
      parent_[k] = -1;
      parent_[u] = -1;
      left_[u] = right_[u] = -1;
    }
  }

  // Returns the leaf mask under `id` and accumulates the objective.
  unsigned accumulate(int id, double& value) const {
    if (id < n_) {
      return 1u << id;
    }
    const unsigned l = accumulate(left_[id], value);
    const unsigned r = accumulate(right_[id], value);
    const unsigned both = l | r;
    const double cross = inside_[both] - inside_[l] - inside_[r];
    const int size = std::popcount(both);
    value += cross * (obj_ == Objective::Similarity ? n_ - size : size);
    return both;
  }

  void score() {
    ++count_;
    double value = 0.0;
    accumulate(root_, value);
    const double slack = 1e-12 * scale_;
    const bool better = count_ == 1 ||
                        (is_maximization(obj_) ? value > best_value_ + slack
                                               : value < best_value_ - slack);
    if (better) {
      best_value_ = value;
      best_root_ = root_;
      best_left_ = left_;
      best_right_ = right_;
    }
  }

  int rebuild(TreeBuilder& b, int id, const std::vector<int>& left,
              const std::vector<int>& right) const {
    if (id < n_) {
      return b.leaf(id);
    }
    const int l = rebuild(b, left[id], left, right);
    const int r = rebuild(b, right[id], left, right);
    return b.join(l, r);
  }

  const WeightedGraph& g_;
  Objective obj_;
  int n_;
  std::vector<int> parent_, left_, right_;
  std::vector<double> inside_;  // total weight inside each vertex subset
  double scale_ = 1.0;
  int root_ = 0;
  long long count_ = 0;
  double best_value_ = 0.0;
  int best_root_ = 0;
  std::vector<int> best_left_, best_right_;
};

}  // namespace

OptimalTree brute_force_opt(const WeightedGraph& g, Objective obj) {
  const int n = g.size();
  if (n > kBruteForceMaxLeaves) {
    throw std::invalid_argument("brute_force_opt supports n <= " +
                                std::to_string(kBruteForceMaxLeaves) + ", got n=" +
                                std::to_string(n));
  }
  if (n == 1) {
    TreeBuilder b;
    return {b.build(b.leaf(0)), 0.0, 1};
  }
  TreeEnumerator e(g, obj);
  OptimalTree best = e.run();
  // Report the witness value through the reference evaluator.
  best.value = evaluate(obj, g, best.tree);
  return best;
}

}  // namespace hcopt
