#pragma once

#include "switchopt/linalg.hpp"

#include <cstddef>
#include <string_view>
#include <vector>

namespace switchopt {

enum class RowSense { less_equal, equal, greater_equal };

enum class LpStatus { optimal, infeasible, unbounded, iteration_limit };

std::string_view to_string(LpStatus status);

/// A linear program over rows `rows[i] . x (sense) rhs[i]`. Variables are
/// non-negative unless flagged free.
template <Scalar T>
struct LpProblem {
  std::size_t num_vars = 0;
  std::vector<bool> free_var;  // empty means all variables are non-negative
  std::vector<Vector<T>> rows;
  std::vector<RowSense> senses;
  Vector<T> rhs;
  Vector<T> objective;
  bool maximize = true;

  void add_row(Vector<T> coeffs, RowSense sense, T bound) {
    rows.push_back(std::move(coeffs));
    senses.push_back(sense);
    rhs.push_back(std::move(bound));
  }
};

template <Scalar T>
struct LpSolution {
  LpStatus status = LpStatus::infeasible;
  Vector<T> x;
  T objective = 0;
  /// Row multipliers; at an optimum objective == rhs . duals.
  Vector<T> duals;
  std::size_t iterations = 0;
  /// Float mode only: max constraint violation of x and max dual infeasibility.
  double primal_residual = 0;
  double dual_residual = 0;
};

struct LpOptions {
  /// Pivot/feasibility tolerance for binary64; ignored in exact mode.
  double tolerance = 1e-9;
  std::size_t max_iterations = 100000;
  /// Always use Bland's rule. Exact mode always does; float mode starts with
  /// Dantzig pricing and falls back to Bland after a run of degenerate pivots.
  bool bland = false;
};

/// Two-phase primal simplex on a dense tableau.
template <Scalar T>
LpSolution<T> lp_solve(const LpProblem<T>& problem, const LpOptions& options = {});

extern template LpSolution<Rational> lp_solve(const LpProblem<Rational>&, const LpOptions&);
extern template LpSolution<double> lp_solve(const LpProblem<double>&, const LpOptions&);

}  // namespace switchopt
