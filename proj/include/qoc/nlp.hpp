#pragma once

#include "qoc/iso.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace qoc {

/// A sparse nonlinear program
///   minimize f(x)  subject to  row_lower <= c(x) <= row_upper,
///                              lower <= x <= upper,
/// with rows equality-constrained when row_lower == row_upper. The Jacobian
/// callback fills values aligned with `jac_pattern`; the pattern must contain
/// every structurally nonzero entry (a superset is allowed).
struct NLP {
  int num_vars = 0;
  RealVector x0;
  RealVector lower, upper;  // +-inf allowed

  int num_rows = 0;
  RealVector row_lower, row_upper;
  std::vector<std::pair<int, int>> jac_pattern;  // (row, col)

  std::function<double(const RealVector&, RealVector*)> objective;  // grad may be null
  std::function<void(const RealVector&, RealVector&)> constraints;
  std::function<void(const RealVector&, RealVector&)> jacobian;     // values per pattern entry

  /// Optional diagonal curvature of the objective's quadratic terms; used by
  /// the Gauss-Newton inner model. Empty means zero.
  RealVector objective_diag;

  /// Optional labels for contiguous row ranges [begin, end), used by
  /// derivative reports and diagnostics.
  std::vector<std::pair<std::string, std::pair<int, int>>> row_blocks;
};

enum class SolveStatus { converged, max_iter, infeasible_detected, numerical_failure };

std::string to_string(SolveStatus s);

struct SolverOptions {
  double tol = 1e-8;            // KKT tolerance (stationarity and violation)
  int max_iter = 2000;          // total inner-iteration budget
  double penalty_init = 10.0;
  double penalty_factor = 10.0;
  double penalty_max = 1e12;
  int qn_memory = 20;           // history length for the lbfgs inner solver
  std::string inner = "gauss_newton";  // "gauss_newton" | "lbfgs"
  int max_inner_per_round = 0;  // 0 = pick per strategy
  int verbosity = 0;
  std::ostream* log = nullptr;  // line-oriented iteration log
};

struct Solution {
  RealVector x;
  RealVector multipliers;       // one per constraint row
  double objective = 0.0;
  double violation = 0.0;       // max distance of c(x) outside [row_lower, row_upper]
  double stationarity = 0.0;    // projected, normalized by max(1, |grad f|_inf)
  double complementarity = 0.0;
  int iterations = 0;           // inner iterations spent
  int outer_iterations = 0;
  SolveStatus status = SolveStatus::max_iter;
  std::string message;
};

/// Augmented-Lagrangian solve: inequalities become equalities with bounded
/// slacks, rows and objective are rescaled once at the initial point, and the
/// bound-constrained subproblems run under the selected inner strategy.
/// Infeasible starting points are expected. Deterministic given (nlp, opts).
Solution solve(const NLP& nlp, const SolverOptions& opts = {});

struct KKTResidual {
  double stationarity = 0.0;
  double violation = 0.0;
  double complementarity = 0.0;
};

/// First-order KKT residual triple at (x, lambda). Bound multipliers are
/// implicit through the projection; stationarity is normalized by
/// max(1, |grad f|_inf).
KKTResidual kkt_residual(const NLP& nlp, const RealVector& x, const RealVector& lambda);

struct DerivativeCheckOptions {
  double fd_step = 1e-6;        // relative central-difference step
  int max_directions = 0;       // 0 = sweep every variable; else random directions
  double pattern_tol = 1e-8;    // absolute threshold for out-of-pattern detection
  std::uint64_t seed = 20240109;
};

struct DerivativeReport {
  double gradient_max_rel_err = 0.0;
  double jacobian_max_rel_err = 0.0;
  std::map<std::string, double> block_max_rel_err;
  struct Entry {
    int row, col;
    double fd, analytic;
  };
  std::vector<Entry> out_of_pattern;  // FD-nonzero entries missing from the pattern
  Entry worst_jacobian{-1, -1, 0.0, 0.0};

  bool pass(double tol) const {
    return gradient_max_rel_err <= tol && jacobian_max_rel_err <= tol && out_of_pattern.empty();
  }
};

/// Central finite-difference audit of the objective gradient and constraint
/// Jacobian. With max_directions == 0 every variable column is swept and
/// entries outside the declared sparsity pattern are reported; otherwise
/// random directional derivatives are compared (which still detects missing
/// pattern entries as errors, without localizing them).
DerivativeReport check_derivatives(const NLP& nlp, const RealVector& x,
                                   const DerivativeCheckOptions& opts = {});

}  // namespace qoc
