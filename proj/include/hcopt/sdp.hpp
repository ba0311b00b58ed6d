#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hcopt/dendrogram.hpp"
#include "hcopt/graph.hpp"

namespace hcopt {

/// Coefficient on the inner product <v_a, v_b> of two program vectors.
struct InnerProductTerm {
  int a;
  int b;
  double coef;
};

enum class ConstraintFamily { Spreading, Monotonicity, LevelOne, NonnegativeInner };
enum class Sense { LessEqual, GreaterEqual, Equal };

struct LinearConstraint {
  ConstraintFamily family;
  Sense sense;
  double rhs;
  std::vector<InnerProductTerm> terms;
};

enum class ProgramKind { HierarchicalClustering, MaxCut };

/// A vector program over unit vectors: maximize
///   objective_constant + sum coef * <v_a, v_b>
/// subject to linear constraints on inner products. Vectors are grouped in
/// `levels` blocks of n; the vector for (level t, vertex i) has index
/// (t-1)*n + i.
struct VectorProgram {
  ProgramKind kind = ProgramKind::HierarchicalClustering;
  int n = 0;
  int levels = 0;
  double objective_constant = 0.0;
  std::vector<InnerProductTerm> objective;
  std::vector<LinearConstraint> constraints;

  int num_vectors() const { return n * levels; }
  int var(int level, int i) const { return (level - 1) * n + i; }
  std::size_t count(ConstraintFamily family) const;

  /// min(n, 1 + ceil(sqrt(2 * #constraints))), counting one unit-norm
  /// constraint per vector. Programs with a level-one block need rank >= n.
  int default_rank() const;
};

/// Unit vectors for every (level, vertex), stored row-major.
class VectorAssignment {
 public:
  VectorAssignment() = default;
  VectorAssignment(int n, int levels, int dim);

  int n() const { return n_; }
  int levels() const { return levels_; }
  int dim() const { return dim_; }
  int num_vectors() const { return n_ * levels_; }

  std::span<double> vec(int index) {
    return {data_.data() + static_cast<std::size_t>(index) * dim_, static_cast<std::size_t>(dim_)};
  }
  std::span<const double> vec(int index) const {
    return {data_.data() + static_cast<std::size_t>(index) * dim_, static_cast<std::size_t>(dim_)};
  }
  std::span<const double> vec(int level, int i) const { return vec((level - 1) * n_ + i); }

  double inner(int a, int b) const;
  /// x^t_ij = |v_i^t - v_j^t|^2 / 2.
  double separation(int level, int i, int j) const;

  /// Copy with dimension changed to `dim`, zero-padding or truncating.
  VectorAssignment resized(int dim) const;

  std::span<double> data() { return data_; }
  std::span<const double> data() const { return data_; }

 private:
  int n_ = 0;
  int levels_ = 0;
  int dim_ = 0;
  std::vector<double> data_;
};

/// Largest violation per constraint family.
struct ResidualReport {
  double unit_norm = 0.0;
  double spreading = 0.0;
  double monotonicity = 0.0;
  double level_one = 0.0;
  double nonnegativity = 0.0;
  double tol = 0.0;

  double max() const;
  bool passed() const { return max() <= tol; }
};

struct SdpSolution {
  VectorAssignment vectors;
  double objective = 0.0;
  ResidualReport residuals;
  bool converged = false;
  int sweeps = 0;
  std::string message;
};

/// HC vector program: maximize sum_t sum_ij w_ij (1 - x^t_ij) with spreading,
/// monotonicity, x^1 = 1 and nonnegative inner products, for t = 1..n-1.
/// x-variables exist for every pair at every level, including zero-weight pairs.
VectorProgram build_hc_sdp(const WeightedGraph& g);

/// Max-cut vector program: maximize sum w_ij (1 - <u_i, u_j>) / 2.
VectorProgram build_maxcut_sdp(const WeightedGraph& g);

/// Integral embedding of a dendrogram: at level t every maximal cluster of
/// size <= t gets its own standard basis vector in R^n.
VectorAssignment tree_to_vectors(const Dendrogram& t, int n);

double evaluate_objective(const VectorProgram& p, const VectorAssignment& v);
ResidualReport check_feasibility(const VectorProgram& p, const VectorAssignment& v, double tol);

/// Scores an assignment against a program without optimizing it.
SdpSolution evaluate_solution(const VectorProgram& p, VectorAssignment v, double tol);

struct SolverConfig {
  int rank = 0;  // 0 selects VectorProgram::default_rank()
  double tol = 1e-5;
  int max_sweeps = 4000;
  int steps_per_sweep = 25;
  std::uint64_t seed = 0;
  std::optional<VectorAssignment> warm_start;
  double initial_penalty = 10.0;
  double penalty_growth = 2.0;
  double penalty_cap = 1e7;
  int stall_window = 50;
  double stall_tol = 1e-7;
};

/// Factorized augmented-Lagrangian ascent over unit vectors. Each step is a
/// Riemannian gradient step with backtracking, followed by renormalization;
/// multipliers are updated once per sweep. Stops when the objective changes
/// by less than stall_tol (relative) over stall_window sweeps with all
/// residuals below tol. The returned point is the best iterate that met the
/// tolerance; `converged` is false when max_sweeps ran out first.
///
/// Without a warm start, HC programs start from the integral embedding of a
/// random-always tree and max-cut programs from random unit vectors.
SdpSolution solve_low_rank(const VectorProgram& p, const SolverConfig& cfg = {});

}  // namespace hcopt
