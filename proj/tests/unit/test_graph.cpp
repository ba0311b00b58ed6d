#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "hcopt/graph.hpp"

using namespace hcopt;

TEST_SUITE("graph") {

TEST_CASE("edgeless graph has zero weight") {
  WeightedGraph g(5);
  CHECK(g.size() == 5);
  CHECK(g.total_weight() == 0.0);
  CHECK(g.edges().empty());
}

TEST_CASE("tight dissimilarity totals") {
  auto g = make_tight_dissimilarity_instance(2);
  CHECK(g.size() == 4);
  CHECK(g.total_weight() == doctest::Approx(2.0));
  CHECK(g.weight(0, 2) == 0.0);
  CHECK(g.weight(0, 3) == 1.0);
  CHECK(g.weight(0, 1) == 0.0);
  CHECK(make_tight_dissimilarity_instance(10).total_weight() == doctest::Approx(90.0));
}

TEST_CASE("tight similarity totals") {
  auto g2 = make_tight_similarity_instance(2, 0.1);
  CHECK(g2.size() == 8);
  CHECK(g2.total_weight() == doctest::Approx(16.4));
  auto g3 = make_tight_similarity_instance(3, 0.1);
  CHECK(g3.size() == 27);
  CHECK(g3.total_weight() == doctest::Approx(137.7));
  CHECK(g3.weight(0, 1) == 1.0);
  CHECK(g3.weight(0, 9) == doctest::Approx(1.1));
  CHECK(g3.weight(0, 10) == 0.0);
}

TEST_CASE("embedded clique") {
  auto g = make_embedded_clique_instance(20, 0.2);
  CHECK(g.total_weight() == doctest::Approx(6.0));
  CHECK(g.weight(0, 3) == 1.0);
  CHECK(g.weight(0, 4) == 0.0);
  CHECK(make_embedded_clique_instance(10, 1.0).total_weight() == doctest::Approx(45.0));
  CHECK_THROWS_AS(make_embedded_clique_instance(20, 0.05), std::invalid_argument);
}

TEST_CASE("random instances") {
  auto full = make_random_instance(7, 1.0, WeightDistribution::Unit, 3);
  CHECK(full == make_clique(7));
  auto a = make_random_instance(15, 0.5, WeightDistribution::Uniform01, 42);
  auto b = make_random_instance(15, 0.5, WeightDistribution::Uniform01, 42);
  auto c = make_random_instance(15, 0.5, WeightDistribution::Uniform01, 43);
  CHECK(a == b);
  CHECK_FALSE(a == c);
  for (const auto& e : a.edges()) {
    CHECK(e.w >= 0.0);
    CHECK(e.w <= 1.0);
  }
}

TEST_CASE("degrees and induced subgraphs") {
  auto g = make_cycle(5);
  for (int i = 0; i < 5; ++i) CHECK(g.degree(i) == 2.0);
  std::vector<int> keep{4, 0, 1};
  auto h = g.induced(keep);
  CHECK(h.size() == 3);
  CHECK(h.weight(0, 1) == 1.0);
  CHECK(h.weight(1, 2) == 1.0);
  CHECK(h.weight(0, 2) == 0.0);
}

TEST_CASE("json round trip") {
  auto g = make_random_instance(9, 0.6, WeightDistribution::Uniform01, 7);
  CHECK(graph_from_json(graph_to_json(g)) == g);
  auto t = make_tight_similarity_instance(2);
  CHECK(graph_from_json(graph_to_json(t)) == t);
}

TEST_CASE("malformed inputs are rejected") {
  std::vector<Edge> conflict{{0, 1, 1.0}, {1, 0, 2.0}};
  CHECK_THROWS_AS(WeightedGraph(3, conflict), std::invalid_argument);
  std::vector<Edge> agree{{0, 1, 1.5}, {1, 0, 1.5}};
  CHECK(WeightedGraph(3, agree).total_weight() == 1.5);
  std::vector<Edge> negative{{0, 1, -1.0}};
  CHECK_THROWS_AS(WeightedGraph(3, negative), std::invalid_argument);
  std::vector<Edge> loop{{2, 2, 1.0}};
  CHECK_THROWS_AS(WeightedGraph(3, loop), std::invalid_argument);
  std::vector<Edge> range{{0, 3, 1.0}};
  CHECK_THROWS_AS(WeightedGraph(3, range), std::invalid_argument);
  CHECK_THROWS(graph_from_json("{\"n\": 3, \"edges\": [[0, 1, 1], [1, 0, 2]]}"));
  CHECK_THROWS(graph_from_json("not json"));
}

}
