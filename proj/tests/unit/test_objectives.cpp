#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "hcopt/dendrogram.hpp"
#include "hcopt/graph.hpp"
#include "hcopt/objectives.hpp"
#include "hcopt/random_hc.hpp"
#include "hcopt/rng.hpp"

using namespace hcopt;

namespace {

Dendrogram balanced4() {
  TreeBuilder b;
  int l = b.join(b.leaf(0), b.leaf(1));
  int r = b.join(b.leaf(2), b.leaf(3));
  return b.build(b.join(l, r));
}

}  // namespace

TEST_SUITE("objectives") {

TEST_CASE("lca sizes on a caterpillar") {
  auto t = make_caterpillar(4);
  LcaSizes s(t);
  CHECK(s(0, 1) == 2);
  CHECK(s(0, 2) == 3);
  CHECK(s(2, 3) == 4);
  CHECK(s(3, 0) == 4);
}

TEST_CASE("lca sizes on a balanced tree") {
  LcaSizes s(balanced4());
  CHECK(s(0, 1) == 2);
  CHECK(s(2, 3) == 2);
  CHECK(s(0, 2) == 4);
  CHECK(s(1, 3) == 4);
}

TEST_CASE("triangle values") {
  auto g = make_clique(3);
  auto t = make_caterpillar(3);
  CHECK(dasgupta_cost(g, t) == 8.0);
  CHECK(similarity_reward(g, t) == 1.0);
  CHECK(dissimilarity_reward(g, t) == 8.0);
}

TEST_CASE("clique dissimilarity is tree independent") {
  for (int m = 2; m <= 7; ++m) {
    auto g = make_clique(m);
    double expected = (m + 1.0) * m * (m - 1.0) / 3.0;
    RngStream rng(m);
    for (int rep = 0; rep < 5; ++rep) {
      CHECK(dissimilarity_reward(g, random_always(m, rng)) == doctest::Approx(expected));
    }
  }
}

TEST_CASE("dasgupta plus similarity is nW") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    auto g = make_random_instance(9, 0.6, WeightDistribution::Uniform01, seed);
    RngStream rng(seed);
    auto t = random_always(9, rng);
    double nW = 9 * g.total_weight();
    CHECK(dasgupta_cost(g, t) + similarity_reward(g, t) == doctest::Approx(nW));
  }
}

TEST_CASE("triplet decomposition matches the similarity reward") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    auto g = make_random_instance(8, 0.7, WeightDistribution::Uniform01, seed);
    RngStream rng(100 + seed);
    auto t = random_always(8, rng);
    CHECK(triplet_nonleaf_decomposition(g, t) == doctest::Approx(similarity_reward(g, t)));
  }
}

TEST_CASE("brute force") {
  auto tight = make_tight_dissimilarity_instance(2);
  auto opt = brute_force_opt(tight, Objective::Dissimilarity);
  CHECK(opt.value == doctest::Approx(8.0));
  CHECK(opt.trees_enumerated == 15);
  CHECK(dissimilarity_reward(tight, opt.tree) == doctest::Approx(8.0));

  auto k4 = make_clique(4);
  auto sim = brute_force_opt(k4, Objective::Similarity);
  RngStream rng(5);
  for (int rep = 0; rep < 10; ++rep) {
    CHECK(similarity_reward(k4, random_always(4, rng)) == doctest::Approx(sim.value));
  }

  CHECK_THROWS_AS(brute_force_opt(WeightedGraph(11), Objective::Similarity),
                  std::invalid_argument);
}

TEST_CASE("brute force dominates random trees") {
  auto g = make_random_instance(7, 0.8, WeightDistribution::Uniform01, 11);
  auto best_sim = brute_force_opt(g, Objective::Similarity).value;
  auto best_cost = brute_force_opt(g, Objective::Dasgupta).value;
  RngStream rng(12);
  for (int rep = 0; rep < 50; ++rep) {
    auto t = random_always(7, rng);
    CHECK(similarity_reward(g, t) <= best_sim + 1e-9);
    CHECK(dasgupta_cost(g, t) >= best_cost - 1e-9);
  }
}

TEST_CASE("tree counts") {
  CHECK(count_binary_trees(1) == 1);
  CHECK(count_binary_trees(2) == 1);
  CHECK(count_binary_trees(3) == 3);
  CHECK(count_binary_trees(4) == 15);
  CHECK(count_binary_trees(10) == 34459425);
}

TEST_CASE("objective names") {
  CHECK(parse_objective("dasgupta") == Objective::Dasgupta);
  CHECK(parse_objective("similarity") == Objective::Similarity);
  CHECK(parse_objective("dissimilarity") == Objective::Dissimilarity);
  CHECK_THROWS_AS(parse_objective("cost"), std::invalid_argument);
  CHECK_FALSE(is_maximization(Objective::Dasgupta));
  CHECK(is_maximization(Objective::Similarity));
}

TEST_CASE("size mismatch is rejected") {
  CHECK_THROWS_AS(similarity_reward(make_clique(4), make_caterpillar(3)), std::invalid_argument);
}

TEST_CASE("dendrogram json round trip") {
  RngStream rng(9);
  auto t = random_always(12, rng);
  CHECK(dendrogram_from_json(dendrogram_to_json(t)) == t);
  CHECK_THROWS(dendrogram_from_json("{\"children\": [{\"leaf\": 0}]}"));
}

}
