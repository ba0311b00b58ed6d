#include "hcopt/sdp.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <stdexcept>
#include <unordered_map>

#include "hcopt/random_hc.hpp"
#include "hcopt/rng.hpp"

namespace hcopt {

std::size_t VectorProgram::count(ConstraintFamily family) const {
  return static_cast<std::size_t>(std::count_if(
      constraints.begin(), constraints.end(),
      [family](const LinearConstraint& c) { return c.family == family; }));
}

int VectorProgram::default_rank() const {
  const double m = static_cast<double>(constraints.size()) + num_vectors();
  const int heuristic = 1 + static_cast<int>(std::ceil(std::sqrt(2.0 * m)));
  return std::max(1, std::min(n, heuristic));
}

VectorAssignment::VectorAssignment(int n, int levels, int dim)
    : n_(n), levels_(levels), dim_(dim),
      data_(static_cast<std::size_t>(n) * levels * dim, 0.0) {
  if (n < 0 || levels < 0 || dim < 0) {
    throw std::invalid_argument("VectorAssignment: negative shape");
  }
}

double VectorAssignment::inner(int a, int b) const {
  const auto x = vec(a);
  const auto y = vec(b);
  double s = 0.0;
  for (int d = 0; d < dim_; ++d) {
    s += x[d] * y[d];
  }
  return s;
}

double VectorAssignment::separation(int level, int i, int j) const {
  const auto x = vec(level, i);
  const auto y = vec(level, j);
  double s = 0.0;
  for (int d = 0; d < dim_; ++d) {
    const double diff = x[d] - y[d];
    s += diff * diff;
  }
  return 0.5 * s;
}

VectorAssignment VectorAssignment::resized(int dim) const {
  VectorAssignment out(n_, levels_, dim);
  const int keep = std::min(dim, dim_);
  for (int v = 0; v < num_vectors(); ++v) {
    std::copy_n(vec(v).begin(), keep, out.vec(v).begin());
  }
  return out;
}

double ResidualReport::max() const {
  return std::max({unit_norm, spreading, monotonicity, level_one, nonnegativity});
}

VectorProgram build_hc_sdp(const WeightedGraph& g) {
  const int n = g.size();
  if (n < 2) {
    throw std::invalid_argument("build_hc_sdp needs n >= 2");
  }
  VectorProgram p;
  p.kind = ProgramKind::HierarchicalClustering;
  p.n = n;
  p.levels = n - 1;

  // With unit vectors, 1 - x^t_ij = <v_i^t, v_j^t>.
  for (int t = 1; t <= p.levels; ++t) {
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        if (const double w = g.weight(i, j); w != 0.0) {
          p.objective.push_back({p.var(t, i), p.var(t, j), w});
        }
      }
    }
  }
  // Spreading: sum_{j != i} x^t_ij >= n - t, i.e. sum_{j != i} <v_i, v_j> <= t - 1.
  for (int t = 1; t <= p.levels; ++t) {
    for (int i = 0; i < n; ++i) {
      LinearConstraint c{ConstraintFamily::Spreading, Sense::LessEqual, static_cast<double>(t - 1), {}};
      for (int j = 0; j < n; ++j) {
        if (j != i) {
          c.terms.push_back({p.var(t, i), p.var(t, j), 1.0});
        }
      }
      p.constraints.push_back(std::move(c));
    }
  }
  // Monotonicity: x^{t+1}_ij <= x^t_ij.
  for (int t = 1; t + 1 <= p.levels; ++t) {
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        p.constraints.push_back({ConstraintFamily::Monotonicity, Sense::GreaterEqual, 0.0,
                                 {{p.var(t + 1, i), p.var(t + 1, j), 1.0},
                                  {p.var(t, i), p.var(t, j), -1.0}}});
      }
    }
  }
  // x^1_ij = 1.
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      p.constraints.push_back(
          {ConstraintFamily::LevelOne, Sense::Equal, 0.0, {{p.var(1, i), p.var(1, j), 1.0}}});
    }
  }
  // x^t_ij <= 1.
  for (int t = 1; t <= p.levels; ++t) {
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        p.constraints.push_back({ConstraintFamily::NonnegativeInner, Sense::GreaterEqual, 0.0,
                                 {{p.var(t, i), p.var(t, j), 1.0}}});
      }
    }
  }
  return p;
}

VectorProgram build_maxcut_sdp(const WeightedGraph& g) {
  if (g.size() < 2) {
    throw std::invalid_argument("build_maxcut_sdp needs n >= 2");
  }
  VectorProgram p;
  p.kind = ProgramKind::MaxCut;
  p.n = g.size();
  p.levels = 1;
  p.objective_constant = 0.5 * g.total_weight();
  for (const Edge& e : g.edges()) {
    p.objective.push_back({e.u, e.v, -0.5 * e.w});
  }
  return p;
}

VectorAssignment tree_to_vectors(const Dendrogram& t, int n) {
  if (t.num_leaves() != n) {
    throw std::invalid_argument("tree_to_vectors: tree has " + std::to_string(t.num_leaves()) +
                                " leaves, expected " + std::to_string(n));
  }
  const int levels = std::max(0, n - 1);
  VectorAssignment out(n, levels, n);
  const auto parent = t.parents();
  const auto nodes = t.nodes();
  for (int level = 1; level <= levels; ++level) {
    int cluster = 0;
    for (int id = 0; id < static_cast<int>(nodes.size()); ++id) {
      const bool maximal = nodes[id].size <= level &&
                           (parent[id] < 0 || nodes[parent[id]].size > level);
      if (!maximal) {
        continue;
      }
      for (int leaf : t.leaves_under(id)) {
        out.vec((level - 1) * n + leaf)[cluster] = 1.0;
      }
      ++cluster;
    }
  }
  return out;
}

namespace {

void check_shape(const VectorProgram& p, const VectorAssignment& v) {
  if (v.n() != p.n || v.levels() != p.levels) {
    throw std::invalid_argument("vector assignment shape does not match the program");
  }
}

double lhs(const LinearConstraint& c, const VectorAssignment& v) {
  double s = 0.0;
  for (const auto& term : c.terms) {
    s += term.coef * v.inner(term.a, term.b);
  }
  return s;
}

double violation(Sense sense, double value, double rhs) {
  switch (sense) {
    case Sense::LessEqual: return std::max(0.0, value - rhs);
    case Sense::GreaterEqual: return std::max(0.0, rhs - value);
    case Sense::Equal: return std::abs(value - rhs);
  }
  return 0.0;
}

double& family_slot(ResidualReport& r, ConstraintFamily f) {
  switch (f) {
    case ConstraintFamily::Spreading: return r.spreading;
    case ConstraintFamily::Monotonicity: return r.monotonicity;
    case ConstraintFamily::LevelOne: return r.level_one;
    case ConstraintFamily::NonnegativeInner: return r.nonnegativity;
  }
  return r.spreading;
}

}  // namespace

double evaluate_objective(const VectorProgram& p, const VectorAssignment& v) {
  check_shape(p, v);
  double f = p.objective_constant;
  for (const auto& term : p.objective) {
    f += term.coef * v.inner(term.a, term.b);
  }
  return f;
}

ResidualReport check_feasibility(const VectorProgram& p, const VectorAssignment& v, double tol) {
  check_shape(p, v);
  ResidualReport r;
  r.tol = tol;
  for (int a = 0; a < v.num_vectors(); ++a) {
    r.unit_norm = std::max(r.unit_norm, std::abs(std::sqrt(v.inner(a, a)) - 1.0));
  }
  for (const auto& c : p.constraints) {
    double& slot = family_slot(r, c.family);
    slot = std::max(slot, violation(c.sense, lhs(c, v), c.rhs));
  }
  return r;
}

SdpSolution evaluate_solution(const VectorProgram& p, VectorAssignment v, double tol) {
  SdpSolution s;
  s.objective = evaluate_objective(p, v);
  s.residuals = check_feasibility(p, v, tol);
  s.converged = s.residuals.passed();
  s.vectors = std::move(v);
  return s;
}

namespace {

// Program flattened onto the set of distinct vector pairs it touches.
// Constraints are oriented as h <= 0 (inequalities) or e = 0 (equalities).
struct CompiledProgram {
  struct Row {
    ConstraintFamily family;
    bool equality;
    double rhs;
    std::vector<std::pair<int, double>> terms;  // (pair index, coefficient)
  };

  std::vector<std::pair<int, int>> pairs;
  std::vector<double> objective;  // per pair
  double constant = 0.0;
  std::vector<Row> rows;

  explicit CompiledProgram(const VectorProgram& p) : constant(p.objective_constant) {
    std::unordered_map<std::uint64_t, int> index;
    const auto pair_id = [&](int a, int b) {
      if (a == b || a < 0 || b < 0 || a >= p.num_vectors() || b >= p.num_vectors()) {
        throw std::invalid_argument("vector program references an invalid vector pair");
      }
      if (a > b) std::swap(a, b);
      const std::uint64_t key = (static_cast<std::uint64_t>(a) << 32) | static_cast<std::uint32_t>(b);
      auto [it, inserted] = index.try_emplace(key, static_cast<int>(pairs.size()));
      if (inserted) {
        pairs.emplace_back(a, b);
        objective.push_back(0.0);
      }
      return it->second;
    };
    for (const auto& term : p.objective) {
      if (!std::isfinite(term.coef)) {
        throw std::invalid_argument("vector program has a non-finite objective coefficient");
      }
      objective[pair_id(term.a, term.b)] += term.coef;
    }
    for (const auto& c : p.constraints) {
      Row row{c.family, c.sense == Sense::Equal, c.rhs, {}};
      const double sign = c.sense == Sense::GreaterEqual ? -1.0 : 1.0;
      row.rhs *= sign;
      for (const auto& term : c.terms) {
        row.terms.emplace_back(pair_id(term.a, term.b), sign * term.coef);
      }
      rows.push_back(std::move(row));
    }
  }
};

class AugmentedLagrangian {
 public:
  AugmentedLagrangian(const CompiledProgram& cp, int num_vectors, int dim)
      : cp_(cp), num_vectors_(num_vectors), dim_(dim),
        gram_(cp.pairs.size()), coupling_(cp.pairs.size()),
        residual_(cp.rows.size()), lambda_(cp.rows.size(), 0.0) {}

  double penalty() const { return rho_; }
  void set_penalty(double rho) { rho_ = rho; }

  // Merit value -f + penalty terms; caches inner products and residuals.
  double merit(const std::vector<double>& x) {
    for (std::size_t p = 0; p < cp_.pairs.size(); ++p) {
      gram_[p] = dot(x, cp_.pairs[p].first, cp_.pairs[p].second);
    }
    objective_ = cp_.constant;
    for (std::size_t p = 0; p < cp_.pairs.size(); ++p) {
      objective_ += cp_.objective[p] * gram_[p];
    }
    double penalty = 0.0;
    violation_ = 0.0;
    for (std::size_t k = 0; k < cp_.rows.size(); ++k) {
      const auto& row = cp_.rows[k];
      double h = -row.rhs;
      for (const auto& [p, c] : row.terms) {
        h += c * gram_[p];
      }
      residual_[k] = h;
      if (row.equality) {
        penalty += lambda_[k] * h + 0.5 * rho_ * h * h;
        violation_ = std::max(violation_, std::abs(h));
      } else {
        const double shifted = std::max(0.0, lambda_[k] + rho_ * h);
        penalty += (shifted * shifted - lambda_[k] * lambda_[k]) / (2.0 * rho_);
        violation_ = std::max(violation_, std::max(0.0, h));
      }
    }
    return -objective_ + penalty;
  }

  double objective() const { return objective_; }
  double violation() const { return violation_; }

  // Riemannian gradient at the point of the last merit() call.
  void gradient(const std::vector<double>& x, std::vector<double>& grad) {
    std::fill(coupling_.begin(), coupling_.end(), 0.0);
    for (std::size_t p = 0; p < cp_.pairs.size(); ++p) {
      coupling_[p] = -cp_.objective[p];
    }
    for (std::size_t k = 0; k < cp_.rows.size(); ++k) {
      const auto& row = cp_.rows[k];
      const double mu = row.equality ? lambda_[k] + rho_ * residual_[k]
                                     : std::max(0.0, lambda_[k] + rho_ * residual_[k]);
      if (mu == 0.0) continue;
      for (const auto& [p, c] : row.terms) {
        coupling_[p] += mu * c;
      }
    }
    grad.assign(x.size(), 0.0);
    for (std::size_t p = 0; p < cp_.pairs.size(); ++p) {
      const double c = coupling_[p];
      if (c == 0.0) continue;
      const auto [a, b] = cp_.pairs[p];
      for (int d = 0; d < dim_; ++d) {
        grad[a * dim_ + d] += c * x[b * dim_ + d];
        grad[b * dim_ + d] += c * x[a * dim_ + d];
      }
    }
    for (int a = 0; a < num_vectors_; ++a) {
      double radial = 0.0;
      for (int d = 0; d < dim_; ++d) radial += grad[a * dim_ + d] * x[a * dim_ + d];
      for (int d = 0; d < dim_; ++d) grad[a * dim_ + d] -= radial * x[a * dim_ + d];
    }
  }

  void update_multipliers() {
    for (std::size_t k = 0; k < cp_.rows.size(); ++k) {
      lambda_[k] = cp_.rows[k].equality ? lambda_[k] + rho_ * residual_[k]
                                        : std::max(0.0, lambda_[k] + rho_ * residual_[k]);
    }
  }

  ResidualReport residual_report(const std::vector<double>& x, double tol) const {
    ResidualReport r;
    r.tol = tol;
    for (int a = 0; a < num_vectors_; ++a) {
      r.unit_norm = std::max(r.unit_norm, std::abs(std::sqrt(dot(x, a, a)) - 1.0));
    }
    for (std::size_t k = 0; k < cp_.rows.size(); ++k) {
      const double v = cp_.rows[k].equality ? std::abs(residual_[k]) : std::max(0.0, residual_[k]);
      double& slot = family_slot(r, cp_.rows[k].family);
      slot = std::max(slot, v);
    }
    return r;
  }

 private:
  double dot(const std::vector<double>& x, int a, int b) const {
    double s = 0.0;
    for (int d = 0; d < dim_; ++d) s += x[a * dim_ + d] * x[b * dim_ + d];
    return s;
  }

  const CompiledProgram& cp_;
  int num_vectors_;
  int dim_;
  std::vector<double> gram_;
  std::vector<double> coupling_;
  std::vector<double> residual_;
  std::vector<double> lambda_;
  double rho_ = 10.0;
  double objective_ = 0.0;
  double violation_ = 0.0;
};

void normalize_rows(std::vector<double>& x, int dim) {
  const std::size_t count = x.size() / static_cast<std::size_t>(dim);
  for (std::size_t a = 0; a < count; ++a) {
    double s = 0.0;
    for (int d = 0; d < dim; ++d) s += x[a * dim + d] * x[a * dim + d];
    s = std::sqrt(s);
    if (s == 0.0) {
      x[a * dim] = 1.0;
      continue;
    }
    for (int d = 0; d < dim; ++d) x[a * dim + d] /= s;
  }
}

VectorAssignment initial_point(const VectorProgram& p, const SolverConfig& cfg, int rank) {
  if (cfg.warm_start) {
    if (cfg.warm_start->n() != p.n || cfg.warm_start->levels() != p.levels) {
      throw std::invalid_argument("warm start shape does not match the program");
    }
    return cfg.warm_start->resized(rank);
  }
  RngStream rng(cfg.seed, label_hash("sdp-init"));
  if (p.kind == ProgramKind::HierarchicalClustering) {
    const Dendrogram tree = random_always(p.n, rng);
    return tree_to_vectors(tree, p.n).resized(rank);
  }
  VectorAssignment v(p.n, p.levels, rank);
  for (double& x : v.data()) x = rng.normal();
  return v;
}

}  // namespace

SdpSolution solve_low_rank(const VectorProgram& p, const SolverConfig& cfg) {
  if (cfg.rank != 0 && cfg.rank < 2) {
    throw std::invalid_argument("solve_low_rank needs rank >= 2");
  }
  if (p.num_vectors() == 0) {
    throw std::invalid_argument("solve_low_rank on an empty program");
  }
  int rank = cfg.rank == 0 ? p.default_rank() : cfg.rank;
  if (p.kind == ProgramKind::HierarchicalClustering) {
    // n mutually orthogonal level-one vectors need n dimensions.
    rank = std::max(rank, p.n);
  }
  rank = std::max(rank, 2);

  const CompiledProgram cp(p);
  AugmentedLagrangian al(cp, p.num_vectors(), rank);
  al.set_penalty(cfg.initial_penalty);

  VectorAssignment start = initial_point(p, cfg, rank);
  std::vector<double> x(start.data().begin(), start.data().end());
  normalize_rows(x, rank);

  std::vector<double> grad, trial(x.size());
  double merit = al.merit(x);
  double step = 1.0;

  std::vector<double> best_x;
  double best_objective = -std::numeric_limits<double>::infinity();
  const auto consider = [&] {
    const auto r = al.residual_report(x, cfg.tol);
    if (r.passed() && al.objective() > best_objective) {
      best_objective = al.objective();
      best_x = x;
    }
  };
  consider();

  std::deque<double> history;
  double previous_violation = al.violation();
  bool converged = false;
  int sweep = 0;
  for (sweep = 1; sweep <= cfg.max_sweeps; ++sweep) {
    for (int it = 0; it < cfg.steps_per_sweep; ++it) {
      al.gradient(x, grad);
      double gnorm2 = 0.0;
      for (double gv : grad) gnorm2 += gv * gv;
      if (gnorm2 < 1e-24) break;
      step = std::min(step * 2.0, 1e3);
      bool accepted = false;
      for (int attempt = 0; attempt < 60; ++attempt) {
        for (std::size_t q = 0; q < x.size(); ++q) trial[q] = x[q] - step * grad[q];
        normalize_rows(trial, rank);
        const double m = al.merit(trial);
        if (m <= merit - 1e-4 * step * gnorm2) {
          x.swap(trial);
          merit = m;
          accepted = true;
          break;
        }
        step *= 0.5;
      }
      if (!accepted) {
        merit = al.merit(x);
        break;
      }
    }

    merit = al.merit(x);
    consider();
    const double f = al.objective();
    const double viol = al.violation();
    history.push_back(f);
    if (static_cast<int>(history.size()) > cfg.stall_window) {
      history.pop_front();
      const double change = std::abs(f - history.front());
      if (change <= cfg.stall_tol * std::max(1.0, std::abs(f)) && viol <= cfg.tol) {
        converged = true;
        break;
      }
    }
    al.update_multipliers();
    if (viol > 0.25 * previous_violation) {
      al.set_penalty(std::min(cfg.penalty_cap, al.penalty() * cfg.penalty_growth));
    }
    previous_violation = viol;
    merit = al.merit(x);
  }

  SdpSolution out;
  out.sweeps = std::min(sweep, cfg.max_sweeps);
  out.converged = converged;
  if (!best_x.empty()) {
    x = best_x;
  } else {
    out.message = "no iterate met the feasibility tolerance";
  }
  if (!converged) {
    out.message = out.message.empty() ? "max_sweeps reached before the stall criterion"
                                      : out.message + "; max_sweeps reached";
  }
  VectorAssignment v(p.n, p.levels, rank);
  std::copy(x.begin(), x.end(), v.data().begin());
  out.objective = evaluate_objective(p, v);
  out.residuals = check_feasibility(p, v, cfg.tol);
  out.vectors = std::move(v);
  return out;
}

}  // namespace hcopt
