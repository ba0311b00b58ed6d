#include "hcopt/random_hc.hpp"

#include <cmath>
#include <stdexcept>

namespace hcopt {

std::vector<char> random_bipartition(std::span<const int> vertices, RngStream& rng) {
  const std::size_t m = vertices.size();
  if (m < 2) {
    throw std::invalid_argument("random_bipartition needs at least two vertices");
  }
  std::vector<char> side(m);
  while (true) {
    std::size_t ones = 0;
    for (std::size_t i = 0; i < m; ++i) {
      side[i] = rng.coin() ? 1 : 0;
      ones += side[i];
    }
    if (ones != 0 && ones != m) {
      return side;
    }
  }
}

int random_always_into(TreeBuilder& builder, std::span<const int> vertices, RngStream& rng) {
  if (vertices.empty()) {
    throw std::invalid_argument("random_always on an empty vertex set");
  }
  if (vertices.size() == 1) {
    return builder.leaf(vertices.front());
  }
  const auto side = random_bipartition(vertices, rng);
  std::vector<int> s, rest;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    (side[i] ? s : rest).push_back(vertices[i]);
  }
  const int l = random_always_into(builder, s, rng);
  const int r = random_always_into(builder, rest, rng);
  return builder.join(l, r);
}

Dendrogram random_always(int n, RngStream& rng) {
  std::vector<int> all(n);
  for (int i = 0; i < n; ++i) {
    all[i] = i;
  }
  TreeBuilder b;
  return b.build(random_always_into(b, all, rng));
}

double expected_similarity_reward_random(const WeightedGraph& g) {
  if (g.size() < 2) {
    throw std::invalid_argument("expected similarity reward needs n >= 2");
  }
  return (g.size() - 2) * g.total_weight() / 3.0;
}

double expected_dissimilarity_reward_random(const WeightedGraph& g) {
  if (g.size() < 3) {
    throw std::invalid_argument("expected dissimilarity reward needs n >= 3");
  }
  return 2.0 * g.size() * g.total_weight() / 3.0;
}

double expected_dissimilarity_reward_random_exact(const WeightedGraph& g) {
  return 2.0 * (g.size() + 1) * g.total_weight() / 3.0;
}

MonteCarloEstimate monte_carlo_mean(const WeightedGraph& g, Objective objective,
                                    long long trials, std::uint64_t seed) {
  if (trials < 1) {
    throw std::invalid_argument("monte_carlo_mean needs trials >= 1");
  }
  const RngStream root(seed, label_hash("random-always"));
  // Welford's update, applied in trial order.
  double mean = 0.0;
  double m2 = 0.0;
  for (long long t = 0; t < trials; ++t) {
    RngStream rng = root.child(static_cast<std::uint64_t>(t));
    const double x = evaluate(objective, g, random_always(g.size(), rng));
    const double delta = x - mean;
    mean += delta / static_cast<double>(t + 1);
    m2 += delta * (x - mean);
  }
  const double se = trials > 1 ? std::sqrt(m2 / static_cast<double>(trials - 1) /
                                           static_cast<double>(trials))
                               : 0.0;
  return {mean, se, trials};
}

std::vector<double> triplet_nonleaf_frequencies(int n, long long trials, std::uint64_t seed) {
  if (n < 3 || trials < 1) {
    throw std::invalid_argument("triplet_nonleaf_frequencies needs n >= 3 and trials >= 1");
  }
  const RngStream root(seed, label_hash("random-always-triplets"));
  std::vector<long long> hits(static_cast<std::size_t>(n) * n * n, 0);
  for (long long t = 0; t < trials; ++t) {
    RngStream rng = root.child(static_cast<std::uint64_t>(t));
    const Dendrogram tree = random_always(n, rng);
    const LcaSizes lca(tree);
    // k is outside T_ij exactly when T_ik = T_jk is strictly larger than T_ij.
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (i == j) continue;
        for (int k = 0; k < n; ++k) {
          if (k == i || k == j) continue;
          if (lca(i, k) > lca(i, j) && lca(j, k) > lca(i, j)) {
            ++hits[(static_cast<std::size_t>(i) * n + j) * n + k];
          }
        }
      }
    }
  }
  std::vector<double> freq(hits.size());
  for (std::size_t x = 0; x < hits.size(); ++x) {
    freq[x] = static_cast<double>(hits[x]) / static_cast<double>(trials);
  }
  return freq;
}

}  // namespace hcopt
