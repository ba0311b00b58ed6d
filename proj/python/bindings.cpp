#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "hcopt/dendrogram.hpp"
#include "hcopt/graph.hpp"
#include "hcopt/harness.hpp"
#include "hcopt/linkage.hpp"
#include "hcopt/objectives.hpp"
#include "hcopt/peel_maxcut.hpp"
#include "hcopt/random_hc.hpp"
#include "hcopt/rng.hpp"
#include "hcopt/sdp.hpp"
#include "hcopt/sdp_round.hpp"

namespace py = pybind11;
using namespace hcopt;

namespace {

WeightedGraph graph_from_tuples(int n, const std::vector<std::tuple<int, int, double>>& edges) {
  std::vector<Edge> es;
  es.reserve(edges.size());
  for (const auto& [u, v, w] : edges) es.push_back({u, v, w});
  return WeightedGraph(n, es);
}

std::vector<std::tuple<int, int, double>> graph_edges(const WeightedGraph& g) {
  std::vector<std::tuple<int, int, double>> out;
  for (const auto& e : g.edges()) out.emplace_back(e.u, e.v, e.w);
  return out;
}

py::dict solution_dict(const SdpSolution& s) {
  py::dict d;
  d["objective"] = s.objective;
  d["converged"] = s.converged;
  d["sweeps"] = s.sweeps;
  d["max_residual"] = s.residuals.max();
  d["feasible"] = s.residuals.passed();
  return d;
}

SolverConfig solver_config(double tol, int rank, std::uint64_t seed) {
  SolverConfig cfg;
  cfg.tol = tol;
  cfg.rank = rank;
  cfg.seed = seed;
  return cfg;
}

std::vector<int> parse_range(const std::vector<int>& v, std::vector<int> fallback) {
  return v.empty() ? fallback : v;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Hierarchical clustering objectives and algorithms";

  py::class_<WeightedGraph>(m, "Graph")
      .def(py::init(&graph_from_tuples), py::arg("n"), py::arg("edges") = std::vector<std::tuple<int, int, double>>{})
      .def_property_readonly("n", &WeightedGraph::size)
      .def_property_readonly("total_weight", &WeightedGraph::total_weight)
      .def("weight", &WeightedGraph::weight)
      .def("degree", &WeightedGraph::degree)
      .def("edges", &graph_edges)
      .def("to_json", &graph_to_json)
      .def_static("from_json", &graph_from_json)
      .def("__eq__", [](const WeightedGraph& a, const WeightedGraph& b) { return a == b; })
      .def("__repr__", [](const WeightedGraph& g) {
        return "Graph(n=" + std::to_string(g.size()) + ", W=" + std::to_string(g.total_weight()) + ")";
      });

  py::class_<Dendrogram>(m, "Dendrogram")
      .def_property_readonly("num_leaves", &Dendrogram::num_leaves)
      .def("lca_size", [](const Dendrogram& t, int i, int j) { return LcaSizes(t)(i, j); })
      .def("to_json", &dendrogram_to_json)
      .def_static("from_json", &dendrogram_from_json)
      .def_static("caterpillar", &make_caterpillar)
      .def("__eq__", [](const Dendrogram& a, const Dendrogram& b) { return a == b; });

  m.def("make_tight_similarity_instance", &make_tight_similarity_instance, py::arg("k"), py::arg("eps") = 0.1);
  m.def("make_tight_dissimilarity_instance", &make_tight_dissimilarity_instance, py::arg("m"),
        py::arg("same_side_weight") = 0.0);
  m.def("make_embedded_clique_instance", &make_embedded_clique_instance, py::arg("n"), py::arg("eps"));
  m.def("make_clique", &make_clique, py::arg("n"), py::arg("w") = 1.0);
  m.def("make_cycle", &make_cycle, py::arg("n"), py::arg("w") = 1.0);
  m.def(
      "make_random_instance",
      [](int n, double density, const std::string& weights, std::uint64_t seed) {
        if (weights != "uniform" && weights != "unit") throw std::invalid_argument("weights must be uniform or unit");
        return make_random_instance(n, density, weights == "unit" ? WeightDistribution::Unit : WeightDistribution::Uniform01,
                                    seed);
      },
      py::arg("n"), py::arg("density"), py::arg("weights") = "uniform", py::arg("seed") = 0);

  m.def(
      "evaluate",
      [](const WeightedGraph& g, const Dendrogram& t, const std::string& objective) {
        return evaluate(parse_objective(objective), g, t);
      },
      py::arg("graph"), py::arg("tree"), py::arg("objective"));
  m.def(
      "brute_force_opt",
      [](const WeightedGraph& g, const std::string& objective) {
        auto r = brute_force_opt(g, parse_objective(objective));
        return py::make_tuple(r.tree, r.value);
      },
      py::arg("graph"), py::arg("objective"));

  m.def(
      "average_linkage",
      [](const WeightedGraph& g, const std::string& mode) {
        if (mode != "similarity" && mode != "dissimilarity") throw std::invalid_argument("unknown linkage mode");
        return average_linkage(g, mode == "similarity" ? LinkageMode::Similarity : LinkageMode::Dissimilarity).tree;
      },
      py::arg("graph"), py::arg("mode") = "similarity");

  m.def(
      "random_always",
      [](int n, std::uint64_t seed) {
        RngStream rng(seed, label_hash("random-always"));
        return random_always(n, rng);
      },
      py::arg("n"), py::arg("seed") = 0);
  m.def("expected_similarity_random", &expected_similarity_reward_random);
  m.def("expected_dissimilarity_random", &expected_dissimilarity_reward_random);
  m.def("expected_dissimilarity_random_exact", &expected_dissimilarity_reward_random_exact);

  m.def(
      "solve_hc_sdp",
      [](const WeightedGraph& g, double tol, int rank, std::uint64_t seed) {
        return solution_dict(solve_low_rank(build_hc_sdp(g), solver_config(tol, rank, seed)));
      },
      py::arg("graph"), py::arg("tol") = 1e-5, py::arg("rank") = 0, py::arg("seed") = 0);
  m.def(
      "solve_maxcut_sdp",
      [](const WeightedGraph& g, double tol, int rank, std::uint64_t seed) {
        return solution_dict(solve_low_rank(build_maxcut_sdp(g), solver_config(tol, rank, seed)));
      },
      py::arg("graph"), py::arg("tol") = 1e-5, py::arg("rank") = 0, py::arg("seed") = 0);

  m.def(
      "triplet_separation_probability",
      [](double ij, double ik, double jk) {
        auto p = triplet_separation_probability({ij, ik, jk});
        return py::make_tuple(p.ij_k, p.ik_j, p.jk_i, p.together);
      },
      py::arg("theta_ij"), py::arg("theta_ik"), py::arg("theta_jk"));
  m.def("alpha_similarity", &alpha_similarity, py::arg("eps2"));
  m.def("optimize_alpha_similarity", [] {
    auto a = optimize_alpha_similarity();
    return py::make_tuple(a.eps2, a.alpha);
  });
  m.def(
      "alpha_dissimilarity", [](double gamma, double eps) { return alpha_dissimilarity(gamma, eps).alpha; },
      py::arg("gamma"), py::arg("eps"));
  m.def("optimize_alpha_dissimilarity", [] {
    auto a = optimize_alpha_dissimilarity();
    return py::make_tuple(a.gamma, a.eps, a.alpha);
  });

  m.def(
      "gw_maxcut",
      [](const WeightedGraph& g, int rounds, std::uint64_t seed) {
        auto c = gw_maxcut(g, rounds, seed);
        std::vector<int> side(c.side.begin(), c.side.end());
        return py::make_tuple(side, c.value);
      },
      py::arg("graph"), py::arg("rounds") = 100, py::arg("seed") = 0);
  m.def(
      "peel_off_first_maxcut_next",
      [](const WeightedGraph& g, double gamma, int gw_rounds, std::uint64_t seed) {
        PeelConfig cfg;
        cfg.gamma = gamma;
        cfg.gw_rounds = gw_rounds;
        auto r = peel_off_first_maxcut_next(g, cfg, seed);
        return py::make_tuple(r.tree, r.peeled);
      },
      py::arg("graph"), py::arg("gamma") = 11.1, py::arg("gw_rounds") = 100, py::arg("seed") = 0);
  m.def(
      "best_of_similarity",
      [](const WeightedGraph& g, int runs, std::uint64_t seed) {
        auto b = best_of_similarity(g, runs, seed);
        return py::make_tuple(b.tree, b.value, b.algorithm);
      },
      py::arg("graph"), py::arg("runs") = 1, py::arg("seed") = 0);
  m.def(
      "best_of_dissimilarity",
      [](const WeightedGraph& g, int runs, std::uint64_t seed, double gamma) {
        PeelConfig cfg;
        cfg.gamma = gamma;
        auto b = best_of_dissimilarity(g, runs, seed, cfg);
        return py::make_tuple(b.tree, b.value, b.algorithm);
      },
      py::arg("graph"), py::arg("runs") = 1, py::arg("seed") = 0, py::arg("gamma") = 11.1);

  m.def(
      "run_algorithm",
      [](const std::string& alg, const WeightedGraph& g, const std::string& objective, std::uint64_t seed) {
        return run_algorithm(parse_algorithm(alg), g, parse_objective(objective), seed);
      },
      py::arg("algorithm"), py::arg("graph"), py::arg("objective"), py::arg("seed") = 0);
  m.def(
      "compare_csv",
      [](const WeightedGraph& g, const std::vector<std::string>& algs, int trials, std::uint64_t seed,
         const std::string& objective) {
        std::vector<Algorithm> parsed;
        for (const auto& a : algs) parsed.push_back(parse_algorithm(a));
        return reports_csv(compare(g, parsed, trials, seed, parse_objective(objective)));
      },
      py::arg("graph"), py::arg("algorithms"), py::arg("trials") = 1, py::arg("seed") = 0,
      py::arg("objective") = "similarity");

  m.def(
      "verify",
      [](const std::string& target, std::vector<int> ns, long long trials, int instances, std::uint64_t seed) {
        VerifyReport r;
        if (target == "sim-tight") {
          r = verify_tight_similarity(parse_range(ns, {2, 3, 4}));
        } else if (target == "dissim-tight") {
          r = verify_tight_dissimilarity(parse_range(ns, {2, 3, 4, 5, 6, 7, 8, 9, 10}));
        } else if (target == "constants") {
          r = verify_constants();
        } else if (target == "triplet") {
          r = verify_triplet(instances > 0 ? instances : 10, trials, seed);
        } else if (target == "factor") {
          r = verify_factor(parse_range(ns, {3, 4, 5, 6, 8, 10}), {0.0, 0.25, 0.5, 1.0, 1.5});
        } else if (target == "relaxation") {
          r = verify_relaxation(instances > 0 ? instances : 5, seed);
        } else if (target == "random-expectation") {
          r = verify_random_expectation(instances > 0 ? instances : 3, trials, seed);
        } else if (target == "gw-ratio") {
          r = verify_gw_ratio(instances > 0 ? instances : 5, 100, seed);
        } else {
          throw std::invalid_argument("unknown verify target '" + target + "'");
        }
        return py::make_tuple(r.passed(), r.summary());
      },
      py::arg("target"), py::arg("n") = std::vector<int>{}, py::arg("trials") = 100000,
      py::arg("instances") = 0, py::arg("seed") = 0);
}
