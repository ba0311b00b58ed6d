#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hcopt/dendrogram.hpp"
#include "hcopt/graph.hpp"
#include "hcopt/objectives.hpp"
#include "hcopt/peel_maxcut.hpp"
#include "hcopt/sdp.hpp"

namespace hcopt {

/// Tree-producing algorithms runnable by name.
enum class Algorithm { AverageLinkage, Random, SdpRandom, PeelMaxcut, RecursiveMaxcut, BruteForce };

Algorithm parse_algorithm(std::string_view name);
std::string_view algorithm_name(Algorithm alg);

struct AlgorithmOptions {
  PeelConfig peel;
  SolverConfig solver;
};

/// Runs one algorithm. Randomized algorithms draw from a stream named after
/// the algorithm, so adding an algorithm never changes another's draws.
/// Average linkage uses the linkage mode matching the objective.
Dendrogram run_algorithm(Algorithm alg, const WeightedGraph& g, Objective objective,
                         std::uint64_t seed, const AlgorithmOptions& opts = {});

struct RunReport {
  std::string instance;
  std::string algorithm;
  int trial = 0;
  std::uint64_t seed = 0;
  std::string objective;
  double value = 0.0;
  std::optional<double> reference;  // brute-force optimum when n <= 10
  std::optional<double> ratio;      // value / reference when reference > 0
  double wall_ms = 0.0;
};

/// CSV with a fixed header and 12 significant digits. Wall time is a column
/// only when `timing` is set, so untimed output is reproducible byte for byte.
std::string reports_csv(const std::vector<RunReport>& rows, bool timing = false);

/// One report per (algorithm, trial); trial t uses the stream seed/t.
/// Throws std::invalid_argument for brute force beyond kBruteForceMaxLeaves.
std::vector<RunReport> compare(const WeightedGraph& g, const std::vector<Algorithm>& algs,
                               int trials, std::uint64_t seed, Objective objective,
                               const std::string& instance = "graph",
                               const AlgorithmOptions& opts = {});

struct Check {
  std::string name;
  bool passed;
  std::string detail;
};

struct VerifyReport {
  std::string target;
  std::vector<Check> checks;
  std::string table;  // CSV

  bool passed() const;
  void add(std::string name, bool ok, std::string detail);
  std::string summary() const;
};

struct TightSimilarityRow {
  int k;
  int n;
  double al_value;
  double lower_bound;
  double ratio;
  bool horizontal_first;  // the first k^2 (k-1) merges stay inside horizontal cliques
};

std::vector<TightSimilarityRow> tight_similarity_table(const std::vector<int>& ks, double eps);
VerifyReport verify_tight_similarity(const std::vector<int>& ks, double eps = 0.1);

struct TightDissimilarityRow {
  int m;
  int n;
  double al_value;
  double closed_form;  // 4 (m+1) m (m-1) / 3
  double nW;
  double ratio;
};

std::vector<TightDissimilarityRow> tight_dissimilarity_table(const std::vector<int>& ms);
VerifyReport verify_tight_dissimilarity(const std::vector<int>& ms);

VerifyReport verify_constants();
VerifyReport verify_triplet(int triples, long long trials, std::uint64_t seed);
VerifyReport verify_factor(const std::vector<int>& ns, const std::vector<double>& theta_bars);
VerifyReport verify_relaxation(int instances, std::uint64_t seed);
VerifyReport verify_random_expectation(int graphs, long long trials, std::uint64_t seed);
VerifyReport verify_gw_ratio(int instances, int rounds, std::uint64_t seed);

struct BenchRow {
  std::string instance;
  int n;
  double W;
  double gamma;
  double tau;
  int peeled;
  double peel_bound;  // n / gamma
  double peel_value;
  double recursive_value;
  double random_value;
};

/// Peel-off sweep over gamma on embedded-clique and random instances.
std::vector<BenchRow> bench_peel(const std::vector<double>& gammas, std::uint64_t seed,
                                 bool include_recursive = true);
std::string bench_csv(const std::vector<BenchRow>& rows);

}  // namespace hcopt
