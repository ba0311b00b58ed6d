#include <doctest.h>

#include "hcopt/graph.hpp"
#include "hcopt/linkage.hpp"
#include "hcopt/objectives.hpp"

using namespace hcopt;

TEST_SUITE("linkage") {

TEST_CASE("tight dissimilarity closed form") {
  auto r = linkage_ratio_report(10, Objective::Dissimilarity);
  CHECK(r.n == 20);
  CHECK(r.algorithm_value == doctest::Approx(1320.0));
  CHECK(r.reference_value == doctest::Approx(1800.0));
  CHECK(r.ratio == doctest::Approx(1320.0 / 1800.0));
  for (int m = 2; m <= 12; ++m) {
    auto s = linkage_ratio_report(m, Objective::Dissimilarity);
    CHECK(s.algorithm_value == doctest::Approx(4.0 * (m + 1) * m * (m - 1) / 3.0));
  }
}

TEST_CASE("matched pairs merge first on the steered instance") {
  const int m = 6;
  auto g = make_tight_dissimilarity_instance(m, kMatchingTieWeight);
  for (auto tie : {TieBreak::lexicographic(), TieBreak::perturb(17)}) {
    auto res = average_linkage(g, LinkageMode::Dissimilarity, tie);
    REQUIRE(res.trace.size() == static_cast<std::size_t>(2 * m - 1));
    for (int s = 0; s < m; ++s) {
      const auto& st = res.trace[s];
      CHECK(st.size_a == 1);
      CHECK(st.size_b == 1);
      CHECK(st.cluster_a % m == st.cluster_b % m);
    }
  }
}

TEST_CASE("top bipartition tree scores nW") {
  for (int m = 2; m <= 8; ++m) {
    auto g = make_tight_dissimilarity_instance(m);
    CHECK(dissimilarity_reward(g, top_bipartition_tree(m)) ==
          doctest::Approx(2.0 * m * g.total_weight()));
  }
}

TEST_CASE("single vertex") {
  auto res = average_linkage(WeightedGraph(1), LinkageMode::Similarity);
  CHECK(res.tree.num_leaves() == 1);
  CHECK(res.trace.empty());
}

TEST_CASE("horizontal cliques merge first on the tight similarity instance") {
  const int k = 3;
  auto g = make_tight_similarity_instance(k, 0.1);
  auto res = average_linkage(g, LinkageMode::Similarity);
  const int n = k * k * k;
  std::vector<int> position(static_cast<std::size_t>(2 * n - 1), -1);
  for (int v = 0; v < n; ++v) position[v] = v % (k * k);
  for (int s = 0; s < k * k * (k - 1); ++s) {
    const auto& st = res.trace[s];
    CHECK(st.average == doctest::Approx(1.1));
    int pa = position[st.cluster_a];
    int pb = position[st.cluster_b];
    CHECK(pa >= 0);
    CHECK(pa == pb);
    position[n + s] = pa;
  }
}

TEST_CASE("similarity ratio decreases with k") {
  double prev = 2.0;
  for (int k = 2; k <= 4; ++k) {
    auto r = linkage_ratio_report(k, Objective::Similarity);
    CHECK(r.ratio < prev);
    CHECK(r.ratio <= 1.0);
    prev = r.ratio;
  }
}

TEST_CASE("perturbed ties are deterministic per seed") {
  auto g = make_clique(8);
  auto a = average_linkage(g, LinkageMode::Similarity, TieBreak::perturb(3));
  auto b = average_linkage(g, LinkageMode::Similarity, TieBreak::perturb(3));
  CHECK(a.tree == b.tree);
  CHECK(merge_trace_csv(a.trace) == merge_trace_csv(b.trace));
  for (const auto& st : a.trace) CHECK(st.average == doctest::Approx(1.0));
}

TEST_CASE("merge trace csv") {
  auto res = average_linkage(make_clique(3), LinkageMode::Similarity);
  auto csv = merge_trace_csv(res.trace);
  CHECK(csv.rfind("step,size_a,size_b,average\n", 0) == 0);
}

}
