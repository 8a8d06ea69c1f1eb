#include "switchopt/lp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace switchopt {

std::string_view to_string(LpStatus status) {
  switch (status) {
  case LpStatus::optimal: return "optimal";
  case LpStatus::infeasible: return "infeasible";
  case LpStatus::unbounded: return "unbounded";
  case LpStatus::iteration_limit: return "iteration_limit";
  }
  return "unknown";
}

namespace {

constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

// Consecutive degenerate pivots after which float mode switches to Bland.
constexpr std::size_t kDegenerateRunLimit = 50;

template <Scalar T>
class Tableau {
public:
  Tableau(const LpProblem<T>& problem, const LpOptions& options)
      : problem_(problem), options_(options), tol_(options.tolerance) {
    build();
  }

  LpSolution<T> run();

private:
  bool positive(const T& v) const {
    if constexpr (is_exact_v<T>)
      return sgn(v) > 0;
    else
      return v > tol_;
  }
  bool nonzero(const T& v) const {
    if constexpr (is_exact_v<T>)
      return sgn(v) != 0;
    else
      return std::fabs(v) > tol_;
  }

  T& at(std::size_t r, std::size_t c) { return cells_[r * stride_ + c]; }
  T& rhs(std::size_t r) { return cells_[r * stride_ + ncols_]; }

  void build();
  void price(const Vector<T>& cost);
  void pivot(std::size_t r, std::size_t c);
  LpStatus optimize(const std::vector<bool>& barred, std::size_t& iterations);

  const LpProblem<T>& problem_;
  LpOptions options_;
  double tol_;

  std::size_t nrows_ = 0;
  std::size_t ncols_ = 0;
  std::size_t stride_ = 0;
  std::vector<T> cells_;
  std::vector<std::size_t> basis_;
  std::vector<std::size_t> identity_col_;
  std::vector<bool> flipped_;
  std::vector<bool> artificial_;
  std::vector<std::size_t> plus_col_;
  std::vector<std::size_t> minus_col_;
  Vector<T> cost_;
  Vector<T> reduced_;
  T value_ = 0;
  std::vector<std::size_t> nz_;
};

template <Scalar T>
void Tableau<T>::build() {
  const auto& p = problem_;
  nrows_ = p.rows.size();
  if (p.senses.size() != nrows_ || p.rhs.size() != nrows_)
    throw DimensionError("lp: rows, senses and rhs disagree in length");
  if (p.objective.size() != p.num_vars)
    throw DimensionError("lp: objective length differs from num_vars");
  if (!p.free_var.empty() && p.free_var.size() != p.num_vars)
    throw DimensionError("lp: free_var length differs from num_vars");
  for (const auto& row : p.rows)
    if (row.size() != p.num_vars)
      throw DimensionError("lp: constraint row length differs from num_vars");

  std::size_t col = 0;
  plus_col_.assign(p.num_vars, npos);
  minus_col_.assign(p.num_vars, npos);
  for (std::size_t j = 0; j < p.num_vars; ++j) {
    plus_col_[j] = col++;
    if (!p.free_var.empty() && p.free_var[j])
      minus_col_[j] = col++;
  }
  std::vector<std::size_t> slack_col(nrows_, npos);
  for (std::size_t i = 0; i < nrows_; ++i)
    if (p.senses[i] != RowSense::equal)
      slack_col[i] = col++;

  flipped_.assign(nrows_, false);
  for (std::size_t i = 0; i < nrows_; ++i)
    flipped_[i] = sign_of(p.rhs[i]) < 0;

  // A slack whose coefficient ends up +1 after the sign flip can start basic.
  identity_col_.assign(nrows_, npos);
  for (std::size_t i = 0; i < nrows_; ++i) {
    if (p.senses[i] == RowSense::less_equal && !flipped_[i])
      identity_col_[i] = slack_col[i];
    else if (p.senses[i] == RowSense::greater_equal && flipped_[i])
      identity_col_[i] = slack_col[i];
  }
  artificial_.assign(col, false);
  for (std::size_t i = 0; i < nrows_; ++i)
    if (identity_col_[i] == npos) {
      identity_col_[i] = col++;
      artificial_.push_back(true);
    }
  ncols_ = col;
  stride_ = ncols_ + 1;
  cells_.assign(nrows_ * stride_, T(0));

  for (std::size_t i = 0; i < nrows_; ++i) {
    const T sgn_row = flipped_[i] ? T(-1) : T(1);
    for (std::size_t j = 0; j < p.num_vars; ++j) {
      const T& a = p.rows[i][j];
      if (a == 0)
        continue;
      at(i, plus_col_[j]) = sgn_row * a;
      if (minus_col_[j] != npos)
        at(i, minus_col_[j]) = -(sgn_row * a);
    }
    if (slack_col[i] != npos)
      at(i, slack_col[i]) = sgn_row * T(p.senses[i] == RowSense::less_equal ? 1 : -1);
    if (artificial_[identity_col_[i]])
      at(i, identity_col_[i]) = 1;
    rhs(i) = sgn_row * p.rhs[i];
  }
  basis_ = identity_col_;
}

template <Scalar T>
void Tableau<T>::price(const Vector<T>& cost) {
  cost_ = cost;
  reduced_ = cost;
  value_ = 0;
  for (std::size_t i = 0; i < nrows_; ++i) {
    const T& cb = cost_[basis_[i]];
    if (cb == 0)
      continue;
    for (std::size_t j = 0; j < ncols_; ++j)
      if (at(i, j) != 0)
        reduced_[j] -= cb * at(i, j);
    value_ += cb * rhs(i);
  }
}

template <Scalar T>
void Tableau<T>::pivot(std::size_t r, std::size_t c) {
  T inv = T(1) / at(r, c);
  nz_.clear();
  for (std::size_t j = 0; j <= ncols_; ++j) {
    T& v = at(r, j);
    if (v == 0)
      continue;
    v *= inv;
    nz_.push_back(j);
  }
  at(r, c) = 1;
  for (std::size_t i = 0; i < nrows_; ++i) {
    if (i == r)
      continue;
    T f = at(i, c);
    if (f == 0)
      continue;
    for (std::size_t j : nz_)
      at(i, j) -= f * at(r, j);
    at(i, c) = 0;
    if constexpr (!is_exact_v<T>)
      if (rhs(i) < 0 && rhs(i) > -tol_)
        rhs(i) = 0;
  }
  T f = reduced_[c];
  if (f != 0) {
    for (std::size_t j : nz_)
      if (j < ncols_)
        reduced_[j] -= f * at(r, j);
    value_ += f * rhs(r);
    reduced_[c] = 0;
  }
  basis_[r] = c;
}

template <Scalar T>
LpStatus Tableau<T>::optimize(const std::vector<bool>& barred, std::size_t& iterations) {
  bool bland = is_exact_v<T> || options_.bland;
  std::size_t degenerate_run = 0;
  for (;;) {
    if (iterations >= options_.max_iterations)
      return LpStatus::iteration_limit;

    std::size_t enter = npos;
    if (bland) {
      for (std::size_t j = 0; j < ncols_; ++j)
        if (!barred[j] && positive(reduced_[j])) {
          enter = j;
          break;
        }
    } else {
      T best = 0;
      for (std::size_t j = 0; j < ncols_; ++j)
        if (!barred[j] && positive(reduced_[j]) && reduced_[j] > best) {
          best = reduced_[j];
          enter = j;
        }
    }
    if (enter == npos)
      return LpStatus::optimal;

    std::size_t leave = npos;
    T best_ratio = 0;
    for (std::size_t r = 0; r < nrows_; ++r) {
      if (!positive(at(r, enter)))
        continue;
      T ratio = rhs(r) / at(r, enter);
      if (leave == npos || ratio < best_ratio || (ratio == best_ratio && basis_[r] < basis_[leave])) {
        leave = r;
        best_ratio = ratio;
      }
    }
    if (leave == npos)
      return LpStatus::unbounded;

    if (!nonzero(best_ratio)) {
      if (++degenerate_run > kDegenerateRunLimit)
        bland = true;
    } else {
      degenerate_run = 0;
    }
    pivot(leave, enter);
    ++iterations;
  }
}

template <Scalar T>
LpSolution<T> Tableau<T>::run() {
  LpSolution<T> sol;
  std::size_t iterations = 0;

  bool has_artificial = std::find(artificial_.begin(), artificial_.end(), true) != artificial_.end();
  if (has_artificial) {
    Vector<T> phase1(ncols_, T(0));
    for (std::size_t j = 0; j < ncols_; ++j)
      if (artificial_[j])
        phase1[j] = -1;
    price(phase1);
    std::vector<bool> none(ncols_, false);
    LpStatus st = optimize(none, iterations);
    if (st == LpStatus::iteration_limit) {
      sol.status = st;
      sol.iterations = iterations;
      return sol;
    }
    bool infeasible;
    if constexpr (is_exact_v<T>) {
      infeasible = sgn(value_) < 0;
    } else {
      double scale = 1.0;
      for (const auto& b : problem_.rhs)
        scale = std::max(scale, std::fabs(b));
      infeasible = value_ < -tol_ * scale;
    }
    if (infeasible) {
      sol.status = LpStatus::infeasible;
      sol.iterations = iterations;
      return sol;
    }
    // Drive zero-level artificials out of the basis where possible.
    for (std::size_t r = 0; r < nrows_; ++r) {
      if (!artificial_[basis_[r]])
        continue;
      std::size_t best = npos;
      for (std::size_t j = 0; j < ncols_; ++j) {
        if (artificial_[j] || !nonzero(at(r, j)))
          continue;
        if (best == npos || abs_value(at(r, j)) > abs_value(at(r, best)))
          best = j;
        if constexpr (is_exact_v<T>)
          break;
      }
      if (best != npos)
        pivot(r, best);
    }
  }

  Vector<T> phase2(ncols_, T(0));
  const T direction = problem_.maximize ? T(1) : T(-1);
  for (std::size_t j = 0; j < problem_.num_vars; ++j) {
    phase2[plus_col_[j]] = direction * problem_.objective[j];
    if (minus_col_[j] != npos)
      phase2[minus_col_[j]] = -(direction * problem_.objective[j]);
  }
  price(phase2);
  LpStatus st = optimize(artificial_, iterations);
  sol.status = st;
  sol.iterations = iterations;
  if (st != LpStatus::optimal)
    return sol;

  Vector<T> colval(ncols_, T(0));
  for (std::size_t r = 0; r < nrows_; ++r)
    colval[basis_[r]] = rhs(r);
  sol.x.assign(problem_.num_vars, T(0));
  for (std::size_t j = 0; j < problem_.num_vars; ++j) {
    sol.x[j] = colval[plus_col_[j]];
    if (minus_col_[j] != npos)
      sol.x[j] -= colval[minus_col_[j]];
  }
  sol.objective = dot(problem_.objective, sol.x);

  sol.duals.assign(nrows_, T(0));
  for (std::size_t i = 0; i < nrows_; ++i) {
    T y = 0;
    for (std::size_t k = 0; k < nrows_; ++k) {
      const T& cb = cost_[basis_[k]];
      if (cb != 0)
        y += cb * at(k, identity_col_[i]);
    }
    if (flipped_[i])
      y = -y;
    sol.duals[i] = direction * y;
  }

  if constexpr (!is_exact_v<T>) {
    double primal = 0;
    for (std::size_t i = 0; i < nrows_; ++i) {
      double lhs = dot(problem_.rows[i], sol.x);
      double gap = lhs - problem_.rhs[i];
      switch (problem_.senses[i]) {
      case RowSense::less_equal: primal = std::max(primal, gap); break;
      case RowSense::greater_equal: primal = std::max(primal, -gap); break;
      case RowSense::equal: primal = std::max(primal, std::fabs(gap)); break;
      }
    }
    for (std::size_t j = 0; j < problem_.num_vars; ++j)
      if (problem_.free_var.empty() || !problem_.free_var[j])
        primal = std::max(primal, -sol.x[j]);
    double dual = 0;
    for (std::size_t j = 0; j < problem_.num_vars; ++j) {
      double r = direction * problem_.objective[j];
      for (std::size_t i = 0; i < nrows_; ++i)
        r -= direction * sol.duals[i] * problem_.rows[i][j];
      bool is_free = !problem_.free_var.empty() && problem_.free_var[j];
      dual = std::max(dual, is_free ? std::fabs(r) : r);
    }
    sol.primal_residual = primal;
    sol.dual_residual = dual;
  }
  return sol;
}

}  // namespace

template <Scalar T>
LpSolution<T> lp_solve(const LpProblem<T>& problem, const LpOptions& options) {
  Tableau<T> tableau(problem, options);
  return tableau.run();
}

template LpSolution<Rational> lp_solve(const LpProblem<Rational>&, const LpOptions&);
template LpSolution<double> lp_solve(const LpProblem<double>&, const LpOptions&);

}  // namespace switchopt
