// hcopt: generate instances, run hierarchical clustering algorithms, and
// check the approximation analysis numerically.
//
//   hcopt gen --kind tight-dissim --m 10 --out g.json
//   hcopt run --graph g.json --alg peel-maxcut --objective dissim --seed 3
//   hcopt eval --graph g.json --tree t.json --objective sim
//   hcopt verify constants
//   hcopt bench --gamma 2,4,11.1 --out sweep.csv
//
// Exit status: 0 on success, 1 when a verification fails, 2 on bad usage.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "hcopt/graph.hpp"
#include "hcopt/harness.hpp"
#include "hcopt/objectives.hpp"
#include "hcopt/peel_maxcut.hpp"
#include "hcopt/sdp.hpp"
#include "hcopt/sdp_round.hpp"

namespace {

using json = nlohmann::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void emit(const std::string& text, const std::string& out) {
  if (out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out);
  if (!f) throw std::runtime_error("cannot write " + out);
  f << text;
}

std::string read_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw UsageError("cannot read " + path);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

json solution_json(const hcopt::SdpSolution& sol) {
  json levels = json::object();
  const auto& v = sol.vectors;
  for (int t = 1; t <= v.levels(); ++t) {
    json rows = json::array();
    for (int i = 0; i < v.n(); ++i) {
      const auto x = v.vec(t, i);
      rows.push_back(std::vector<double>(x.begin(), x.end()));
    }
    levels[std::to_string(t)] = std::move(rows);
  }
  const auto& r = sol.residuals;
  return {{"objective", sol.objective},
          {"converged", sol.converged},
          {"sweeps", sol.sweeps},
          {"message", sol.message},
          {"residuals",
           {{"unit_norm", r.unit_norm},
            {"spreading", r.spreading},
            {"monotonicity", r.monotonicity},
            {"level_one", r.level_one},
            {"nonnegativity", r.nonnegativity},
            {"tol", r.tol},
            {"passed", r.passed()}}},
          {"levels", std::move(levels)}};
}

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    const auto dash = item.find('-');
    if (dash != std::string::npos && dash > 0) {
      const int lo = std::stoi(item.substr(0, dash));
      const int hi = std::stoi(item.substr(dash + 1));
      for (int x = lo; x <= hi; ++x) out.push_back(x);
    } else {
      out.push_back(std::stoi(item));
    }
  }
  return out;
}

std::vector<double> parse_double_list(const std::string& s) {
  std::vector<double> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (!item.empty()) out.push_back(std::stod(item));
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hierarchical clustering approximation toolkit"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "Generate an instance as graph JSON");
  std::string kind = "random";
  int gen_n = 10, gen_k = 3, gen_m = 5;
  double gen_eps = 0.1, density = 0.5;
  std::string weights = "uniform";
  std::uint64_t seed = 0;
  std::string out;
  gen->add_option("--kind", kind, "tight-sim | tight-dissim | clique | embedded-clique | cycle | random")
      ->check(CLI::IsMember({"tight-sim", "tight-dissim", "clique", "embedded-clique", "cycle", "random"}));
  gen->add_option("--n", gen_n, "Vertex count");
  gen->add_option("--k", gen_k, "Tight similarity parameter (n = k^3)");
  gen->add_option("--m", gen_m, "Tight dissimilarity side size (n = 2m)");
  gen->add_option("--eps", gen_eps, "Horizontal weight offset or clique fraction");
  gen->add_option("--density", density, "Edge probability for random graphs");
  gen->add_option("--weights", weights, "uniform | unit")->check(CLI::IsMember({"uniform", "unit"}));
  gen->add_option("--seed", seed);
  gen->add_option("--out", out, "Output path (stdout when omitted)");

  // run
  auto* run = app.add_subcommand("run", "Run one algorithm on a graph");
  std::string graph_path, alg = "avg-linkage", objective = "sim";
  double gamma = 11.1, tol = 1e-5;
  int gw_rounds = 100, rank = 0;
  bool as_json = false;
  run->add_option("--graph", graph_path, "Graph JSON")->required();
  run->add_option("--alg", alg,
                  "avg-linkage | random | sdp-solve | sdp-random | peel-maxcut | "
                  "recursive-maxcut | brute-force");
  run->add_option("--objective", objective, "sim | dissim | dasgupta");
  run->add_option("--seed", seed);
  run->add_option("--gamma", gamma, "Peel threshold multiplier");
  run->add_option("--gw-rounds", gw_rounds, "Hyperplanes per max-cut");
  run->add_option("--tol", tol, "SDP feasibility tolerance");
  run->add_option("--rank", rank, "SDP factorization rank (0 = default)");
  run->add_option("--out", out, "Write the tree (or SDP solution) JSON here");
  run->add_flag("--json", as_json, "Print the run report as JSON");

  // eval
  auto* eval = app.add_subcommand("eval", "Score a tree on a graph");
  std::string tree_path;
  eval->add_option("--graph", graph_path)->required();
  eval->add_option("--tree", tree_path)->required();
  eval->add_option("--objective", objective);
  eval->add_flag("--json", as_json);

  // verify
  auto* verify = app.add_subcommand("verify", "Check an analytic claim numerically");
  std::string target;
  long long trials = 100000;
  std::string list = "", theta_list = "";
  std::string which = "both";
  int instances = 0;
  verify->add_option("target", target)
      ->required()
      ->check(CLI::IsMember({"sim-tight", "dissim-tight", "triplet", "factor", "constants",
                             "relaxation", "random-expectation", "gw-ratio"}));
  verify->add_option("--trials", trials, "Monte-Carlo trials");
  verify->add_option("--n", list, "Parameter list, e.g. 2-6 or 3,5,8 (k, m or n by target)");
  verify->add_option("--theta-bar", theta_list, "Comma-separated theta_bar values");
  verify->add_option("--which", which, "sim | dissim | both")->check(CLI::IsMember({"sim", "dissim", "both"}));
  verify->add_option("--instances", instances, "Instance count for sampled targets");
  verify->add_option("--gw-rounds", gw_rounds);
  verify->add_option("--seed", seed);
  verify->add_option("--out", out, "Write the data table as CSV");

  // bench
  auto* bench = app.add_subcommand("bench", "Peel sweep, or compare algorithms on one graph");
  std::string gammas = "1.5,2,3,4,5,8,11.1,16";
  std::string algs = "avg-linkage,random,sdp-random,peel-maxcut,recursive-maxcut";
  int bench_trials = 5;
  bool timing = false, no_recursive = false;
  bench->add_option("--graph", graph_path, "Compare algorithms on this graph instead of sweeping");
  bench->add_option("--alg", algs, "Comma-separated algorithms for comparison");
  bench->add_option("--objective", objective);
  bench->add_option("--trials", bench_trials);
  bench->add_option("--gamma", gammas, "Comma-separated gamma values for the sweep");
  bench->add_option("--gw-rounds", gw_rounds);
  bench->add_option("--seed", seed);
  bench->add_option("--out", out, "CSV output path");
  bench->add_flag("--timing", timing, "Add a wall-time column to comparison CSV");
  bench->add_flag("--no-recursive", no_recursive, "Skip the recursive max-cut column in the sweep");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*gen) {
      const auto dist = weights == "unit" ? hcopt::WeightDistribution::Unit
                                          : hcopt::WeightDistribution::Uniform01;
      hcopt::WeightedGraph g =
          kind == "tight-sim"         ? hcopt::make_tight_similarity_instance(gen_k, gen_eps)
          : kind == "tight-dissim"    ? hcopt::make_tight_dissimilarity_instance(gen_m)
          : kind == "clique"          ? hcopt::make_clique(gen_n)
          : kind == "embedded-clique" ? hcopt::make_embedded_clique_instance(gen_n, gen_eps)
          : kind == "cycle"           ? hcopt::make_cycle(gen_n)
                                      : hcopt::make_random_instance(gen_n, density, dist, seed);
      emit(hcopt::graph_to_json(g) + "\n", out);
      return 0;
    }

    if (*run) {
      const hcopt::WeightedGraph g = hcopt::read_graph(graph_path);
      const hcopt::Objective obj = hcopt::parse_objective(objective);
      hcopt::SolverConfig solver;
      solver.tol = tol;
      solver.rank = rank;
      solver.seed = seed;
      if (alg == "sdp-solve") {
        const auto sol = hcopt::solve_low_rank(hcopt::build_hc_sdp(g), solver);
        const json j = solution_json(sol);
        if (!out.empty()) emit(j.dump(2) + "\n", out);
        std::cout << "objective " << sol.objective << "\nmax_residual " << sol.residuals.max()
                  << "\nconverged " << (sol.converged ? "true" : "false") << "\nsweeps "
                  << sol.sweeps << '\n';
        if (!sol.message.empty()) std::cout << "message " << sol.message << '\n';
        return sol.residuals.passed() ? 0 : 1;
      }
      hcopt::AlgorithmOptions opts;
      opts.peel.gamma = gamma;
      opts.peel.gw_rounds = gw_rounds;
      opts.solver = solver;
      const auto a = hcopt::parse_algorithm(alg);
      const auto tree = hcopt::run_algorithm(a, g, obj, seed, opts);
      const double value = hcopt::evaluate(obj, g, tree);
      if (!out.empty()) emit(hcopt::dendrogram_to_json(tree) + "\n", out);
      if (as_json) {
        std::cout << json{{"algorithm", alg},
                          {"objective", std::string(hcopt::objective_name(obj))},
                          {"seed", seed},
                          {"n", g.size()},
                          {"value", value}}
                         .dump()
                  << '\n';
      } else {
        std::cout << alg << ' ' << hcopt::objective_name(obj) << ' ' << value << '\n';
      }
      return 0;
    }

    if (*eval) {
      const hcopt::WeightedGraph g = hcopt::read_graph(graph_path);
      const hcopt::Dendrogram t = hcopt::dendrogram_from_json(read_file(tree_path));
      const hcopt::Objective obj = hcopt::parse_objective(objective);
      const double value = hcopt::evaluate(obj, g, t);
      if (as_json) {
        std::cout << json{{"objective", std::string(hcopt::objective_name(obj))}, {"value", value}}.dump()
                  << '\n';
      } else {
        std::cout << value << '\n';
      }
      return 0;
    }

    if (*verify) {
      std::vector<hcopt::VerifyReport> reports;
      if (target == "sim-tight") {
        reports.push_back(hcopt::verify_tight_similarity(list.empty() ? parse_int_list("2-6")
                                                                      : parse_int_list(list)));
      } else if (target == "dissim-tight") {
        reports.push_back(hcopt::verify_tight_dissimilarity(list.empty() ? parse_int_list("2-50")
                                                                         : parse_int_list(list)));
      } else if (target == "triplet") {
        reports.push_back(hcopt::verify_triplet(instances > 0 ? instances : 50, trials, seed));
      } else if (target == "factor") {
        std::vector<double> tbs;
        if (theta_list.empty()) {
          for (int i = 0; i <= 15; ++i) tbs.push_back(0.1 * i);
        } else {
          tbs = parse_double_list(theta_list);
        }
        reports.push_back(hcopt::verify_factor(list.empty() ? parse_int_list("3-30") : parse_int_list(list),
                                               tbs));
      } else if (target == "constants") {
        auto rep = hcopt::verify_constants();
        if (which != "both") {
          std::erase_if(rep.checks, [&](const hcopt::Check& c) {
            const bool is_sim = c.name.find("sim") != std::string::npos ||
                                c.name.find("eps2") != std::string::npos;
            return which == "sim" ? !is_sim : is_sim;
          });
        }
        reports.push_back(std::move(rep));
      } else if (target == "relaxation") {
        reports.push_back(hcopt::verify_relaxation(instances > 0 ? instances : 20, seed));
      } else if (target == "random-expectation") {
        reports.push_back(hcopt::verify_random_expectation(instances > 0 ? instances : 10, trials, seed));
      } else if (target == "gw-ratio") {
        reports.push_back(hcopt::verify_gw_ratio(instances > 0 ? instances : 50, gw_rounds, seed));
      }
      bool ok = true;
      std::string tables;
      for (const auto& r : reports) {
        std::cout << r.summary();
        ok = ok && r.passed();
        tables += r.table;
      }
      if (!out.empty()) emit(tables, out);
      return ok ? 0 : 1;
    }

    if (*bench) {
      hcopt::AlgorithmOptions opts;
      opts.peel.gw_rounds = gw_rounds;
      if (!graph_path.empty()) {
        const hcopt::WeightedGraph g = hcopt::read_graph(graph_path);
        std::vector<hcopt::Algorithm> list_algs;
        std::stringstream in(algs);
        std::string name;
        while (std::getline(in, name, ',')) {
          if (!name.empty()) list_algs.push_back(hcopt::parse_algorithm(name));
        }
        const auto rows = hcopt::compare(g, list_algs, bench_trials, seed,
                                         hcopt::parse_objective(objective), graph_path, opts);
        emit(hcopt::reports_csv(rows, timing), out);
        return 0;
      }
      const auto rows = hcopt::bench_peel(parse_double_list(gammas), seed, !no_recursive);
      emit(hcopt::bench_csv(rows), out);
      bool ok = true;
      for (const auto& r : rows) {
        if (r.peeled > r.peel_bound) {
          std::cerr << "peel bound violated on " << r.instance << " gamma " << r.gamma << ": "
                    << r.peeled << " > " << r.peel_bound << '\n';
          ok = false;
        }
      }
      return ok ? 0 : 1;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
