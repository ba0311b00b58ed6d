#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "hcopt/graph.hpp"
#include "hcopt/harness.hpp"

using namespace hcopt;

TEST_SUITE("harness") {

TEST_CASE("algorithm names round trip") {
  for (auto a : {Algorithm::AverageLinkage, Algorithm::Random, Algorithm::SdpRandom,
                 Algorithm::PeelMaxcut, Algorithm::RecursiveMaxcut, Algorithm::BruteForce}) {
    CHECK(parse_algorithm(algorithm_name(a)) == a);
  }
  CHECK_THROWS_AS(parse_algorithm("kmeans"), std::invalid_argument);
}

TEST_CASE("compare is reproducible") {
  auto g = make_random_instance(8, 0.7, WeightDistribution::Uniform01, 4);
  std::vector<Algorithm> algs{Algorithm::AverageLinkage, Algorithm::Random, Algorithm::SdpRandom};
  auto a = reports_csv(compare(g, algs, 3, 11, Objective::Similarity));
  auto b = reports_csv(compare(g, algs, 3, 11, Objective::Similarity));
  CHECK(a == b);
  CHECK(a.rfind("instance,algorithm,trial,seed,objective,value,reference,ratio\n", 0) == 0);
}

TEST_CASE("brute force is rejected above ten vertices") {
  auto g = make_clique(11);
  CHECK_THROWS_AS(compare(g, {Algorithm::BruteForce}, 1, 1, Objective::Similarity),
                  std::invalid_argument);
}

TEST_CASE("ratios never beat the optimum") {
  auto g = make_random_instance(7, 0.8, WeightDistribution::Uniform01, 9);
  std::vector<Algorithm> algs{Algorithm::AverageLinkage, Algorithm::Random,
                              Algorithm::SdpRandom, Algorithm::PeelMaxcut,
                              Algorithm::RecursiveMaxcut, Algorithm::BruteForce};
  for (auto obj : {Objective::Similarity, Objective::Dissimilarity}) {
    for (const auto& row : compare(g, algs, 2, 5, obj)) {
      REQUIRE(row.ratio.has_value());
      CHECK(*row.ratio <= 1.0 + 1e-9);
      if (row.algorithm == "brute-force") CHECK(*row.ratio == doctest::Approx(1.0));
    }
  }
  for (const auto& row : compare(g, algs, 2, 5, Objective::Dasgupta)) {
    REQUIRE(row.ratio.has_value());
    CHECK(*row.ratio >= 1.0 - 1e-9);
  }
}

TEST_CASE("tight tables") {
  auto sim = tight_similarity_table({3}, 0.1);
  REQUIRE(sim.size() == 1);
  CHECK(sim[0].n == 27);
  CHECK(sim[0].lower_bound >= 1944.0);
  CHECK(sim[0].horizontal_first);
  auto dis = tight_dissimilarity_table({2});
  REQUIRE(dis.size() == 1);
  CHECK(dis[0].ratio == doctest::Approx(1.0));
  CHECK(dis[0].al_value == doctest::Approx(dis[0].closed_form));
}

TEST_CASE("verify constants passes") {
  auto r = verify_constants();
  CHECK(r.passed());
  CHECK(r.summary().find("FAIL") == std::string::npos);
}

TEST_CASE("verify report bookkeeping") {
  VerifyReport r;
  r.target = "demo";
  r.add("first", true, "ok");
  CHECK(r.passed());
  r.add("second", false, "bad");
  CHECK_FALSE(r.passed());
  CHECK(r.summary().find("FAIL demo: second (bad)") != std::string::npos);
}

TEST_CASE("bench csv shape") {
  auto rows = bench_peel({2.0}, 3, false);
  CHECK(rows.size() == 6);
  for (const auto& row : rows) CHECK(row.peeled <= row.peel_bound + 1e-9);
  auto csv = bench_csv(rows);
  CHECK(csv.rfind("instance,n,W,gamma,tau,peeled", 0) == 0);
}

}
