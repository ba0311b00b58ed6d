#include "hcopt/linkage.hpp"

#include <cmath>
#include <iomanip>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "hcopt/rng.hpp"

namespace hcopt {

LinkageResult average_linkage(const WeightedGraph& g, LinkageMode mode, TieBreak tie) {
  const int n = g.size();
  const auto at = [n](int a, int b) {
    return static_cast<std::size_t>(a) * static_cast<std::size_t>(n) + static_cast<std::size_t>(b);
  };

  // Slot s holds one active cluster; merged clusters reuse the lower slot.
  std::vector<double> sum(static_cast<std::size_t>(n) * n, 0.0);
  std::vector<double> key(static_cast<std::size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      sum[at(i, j)] = key[at(i, j)] = g.weight(i, j);
    }
  }
  if (tie.kind == TieBreak::Kind::Perturb) {
    RngStream rng(tie.seed, label_hash("linkage-perturb"));
    const double scale = tie.magnitude * (g.max_weight() > 0.0 ? g.max_weight() : 1.0);
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        key[at(i, j)] += scale * rng.uniform();
        key[at(j, i)] = key[at(i, j)];
      }
    }
  }

  std::vector<int> cluster_id(n), cluster_size(n, 1), node(n);
  std::vector<int> active(n);
  TreeBuilder builder;
  for (int i = 0; i < n; ++i) {
    cluster_id[i] = i;
    node[i] = builder.leaf(i);
    active[i] = i;
  }

  const bool maximize = mode == LinkageMode::Similarity;
  std::vector<MergeStep> trace;
  trace.reserve(n > 0 ? n - 1 : 0);

  for (int step = 0; step + 1 < n; ++step) {
    int best_a = -1;
    int best_b = -1;
    double best = 0.0;
    std::pair<int, int> best_ids{std::numeric_limits<int>::max(), std::numeric_limits<int>::max()};
    for (std::size_t x = 0; x < active.size(); ++x) {
      const int a = active[x];
      for (std::size_t y = x + 1; y < active.size(); ++y) {
        const int b = active[y];
        const double avg = key[at(a, b)] / (static_cast<double>(cluster_size[a]) * cluster_size[b]);
        const std::pair<int, int> ids{std::min(cluster_id[a], cluster_id[b]),
                                      std::max(cluster_id[a], cluster_id[b])};
        bool take = best_a < 0;
        if (!take) {
          const double slack = 1e-12 * std::max(1.0, std::abs(best));
          const double diff = maximize ? avg - best : best - avg;
          take = diff > slack || (std::abs(avg - best) <= slack && ids < best_ids);
        }
        if (take) {
          best_a = a;
          best_b = b;
          best = avg;
          best_ids = ids;
        }
      }
    }

    int a = best_a;
    int b = best_b;
    if (cluster_id[a] > cluster_id[b]) {
      std::swap(a, b);
    }
    trace.push_back({cluster_id[a], cluster_id[b], cluster_size[a], cluster_size[b],
                     sum[at(a, b)] / (static_cast<double>(cluster_size[a]) * cluster_size[b])});

    // Sums add under a merge; averages are recomputed from sums and sizes.
    const int keep = std::min(a, b);
    const int drop = std::max(a, b);
    for (int c : active) {
      if (c == a || c == b) {
        continue;
      }
      sum[at(keep, c)] = sum[at(c, keep)] = sum[at(a, c)] + sum[at(b, c)];
      key[at(keep, c)] = key[at(c, keep)] = key[at(a, c)] + key[at(b, c)];
    }
    node[keep] = builder.join(node[a], node[b]);
    cluster_size[keep] = cluster_size[a] + cluster_size[b];
    cluster_id[keep] = n + step;
    std::erase(active, drop);
  }

  return {builder.build(node[active.front()]), std::move(trace)};
}

std::string merge_trace_csv(const std::vector<MergeStep>& trace) {
  std::ostringstream out;
  out << "step,size_a,size_b,average\n" << std::setprecision(12);
  for (std::size_t s = 0; s < trace.size(); ++s) {
    out << s << ',' << trace[s].size_a << ',' << trace[s].size_b << ',' << trace[s].average << '\n';
  }
  return out.str();
}

Dendrogram vertical_first_tree(int k) {
  if (k < 2) {
    throw std::invalid_argument("vertical_first_tree needs k >= 2");
  }
  const int block = k * k;
  TreeBuilder b;
  std::vector<int> cliques;
  for (int v = 0; v < k; ++v) {
    std::vector<int> members(block);
    for (int p = 0; p < block; ++p) {
      members[p] = v * block + p;
    }
    cliques.push_back(b.caterpillar(members));
  }
  return b.build(b.chain(cliques));
}

Dendrogram top_bipartition_tree(int m) {
  if (m < 1) {
    throw std::invalid_argument("top_bipartition_tree needs m >= 1");
  }
  std::vector<int> left(m), right(m);
  for (int i = 0; i < m; ++i) {
    left[i] = i;
    right[i] = m + i;
  }
  TreeBuilder b;
  const int l = b.caterpillar(left);
  const int r = b.caterpillar(right);
  return b.build(b.join(l, r));
}

LinkageRatio linkage_ratio_report(int parameter, Objective objective, double eps) {
  switch (objective) {
    case Objective::Similarity: {
      const WeightedGraph g = make_tight_similarity_instance(parameter, eps);
      const auto al = average_linkage(g, LinkageMode::Similarity);
      const double value = similarity_reward(g, al.tree);
      const double reference = similarity_reward(g, vertical_first_tree(parameter));
      return {parameter, g.size(), value, reference, value / reference};
    }
    case Objective::Dissimilarity: {
      const WeightedGraph g = make_tight_dissimilarity_instance(parameter);
      const WeightedGraph steered = make_tight_dissimilarity_instance(parameter, kMatchingTieWeight);
      const auto al = average_linkage(steered, LinkageMode::Dissimilarity);
      const double value = dissimilarity_reward(g, al.tree);
      const double reference = dissimilarity_reward(g, top_bipartition_tree(parameter));
      return {parameter, g.size(), value, reference, value / reference};
    }
    case Objective::Dasgupta:
      break;
  }
  throw std::invalid_argument("linkage_ratio_report supports sim and dissim objectives");
}

}  // namespace hcopt
