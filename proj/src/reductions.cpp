#include "switchopt/reductions.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <sstream>

namespace switchopt {

void CnfFormula::validate() const {
  for (std::size_t j = 0; j < clauses.size(); ++j)
    for (int lit : clauses[j])
      if (lit == 0 || static_cast<std::size_t>(std::abs(lit)) > num_vars)
        throw InvalidArgument("clause " + std::to_string(j + 1) + " has literal " + std::to_string(lit) +
                              " outside 1.." + std::to_string(num_vars));
}

CnfFormula parse_dimacs(std::string_view text) {
  CnfFormula f;
  std::istringstream in{std::string(text)};
  std::string line;
  bool header = false;
  std::size_t declared = 0;
  std::vector<int> pending;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok) || tok == "c" || tok[0] == 'c' || tok == "%")
      continue;
    if (tok == "p") {
      std::string fmt;
      long long vars = -1, cls = -1;
      if (!(ls >> fmt >> vars >> cls) || fmt != "cnf" || vars < 0 || cls < 0)
        throw InvalidArgument("line " + std::to_string(lineno) + ": malformed problem line");
      f.num_vars = static_cast<std::size_t>(vars);
      declared = static_cast<std::size_t>(cls);
      header = true;
      continue;
    }
    if (!header)
      throw InvalidArgument("line " + std::to_string(lineno) + ": clause before the 'p cnf' line");
    std::istringstream body(line);
    long long lit;
    while (body >> lit) {
      if (lit == 0) {
        if (pending.size() != 3)
          throw InvalidArgument("line " + std::to_string(lineno) + ": clause has " +
                                std::to_string(pending.size()) + " literals, expected 3");
        f.clauses.push_back({pending[0], pending[1], pending[2]});
        pending.clear();
      } else {
        pending.push_back(static_cast<int>(lit));
      }
    }
    if (!body.eof())
      throw InvalidArgument("line " + std::to_string(lineno) + ": unexpected token");
  }
  if (!header)
    throw InvalidArgument("missing 'p cnf' line");
  if (!pending.empty())
    throw InvalidArgument("last clause is not terminated by 0");
  if (f.clauses.size() != declared)
    throw InvalidArgument("header declares " + std::to_string(declared) + " clauses, found " +
                          std::to_string(f.clauses.size()));
  f.validate();
  return f;
}

std::string emit_dimacs(const CnfFormula& formula) {
  std::ostringstream out;
  out << "p cnf " << formula.num_vars << ' ' << formula.clauses.size() << '\n';
  for (const auto& c : formula.clauses)
    out << c[0] << ' ' << c[1] << ' ' << c[2] << " 0\n";
  return out.str();
}

std::size_t satisfied_clauses(const CnfFormula& formula, const std::vector<bool>& assignment) {
  if (assignment.size() != formula.num_vars)
    throw DimensionError("assignment length differs from the number of variables");
  std::size_t count = 0;
  for (const auto& c : formula.clauses)
    if (std::any_of(c.begin(), c.end(), [&](int lit) { return assignment[std::abs(lit) - 1] == (lit > 0); }))
      ++count;
  return count;
}

namespace {

// values: 0 unassigned, 1 true, -1 false.
bool dpll_rec(const CnfFormula& f, std::vector<int>& values) {
  // Unit propagation to a fixed point.
  std::vector<std::size_t> trail;
  auto undo = [&] {
    for (std::size_t v : trail)
      values[v] = 0;
  };
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& c : f.clauses) {
      int free_lit = 0;
      std::size_t free_count = 0;
      bool sat = false;
      for (int lit : c) {
        int v = values[std::abs(lit) - 1];
        if (v == 0) {
          if (free_lit != lit)
            ++free_count;
          free_lit = lit;
        } else if ((v > 0) == (lit > 0)) {
          sat = true;
          break;
        }
      }
      if (sat)
        continue;
      if (free_count == 0) {
        undo();
        return false;
      }
      if (free_count == 1) {
        std::size_t var = static_cast<std::size_t>(std::abs(free_lit) - 1);
        values[var] = free_lit > 0 ? 1 : -1;
        trail.push_back(var);
        changed = true;
      }
    }
  }
  auto it = std::find(values.begin(), values.end(), 0);
  if (it == values.end())
    return true;
  for (int choice : {1, -1}) {
    *it = choice;
    if (dpll_rec(f, values))
      return true;
  }
  *it = 0;
  undo();
  return false;
}

}  // namespace

std::optional<std::vector<bool>> dpll(const CnfFormula& formula) {
  formula.validate();
  std::vector<int> values(formula.num_vars, 0);
  if (!dpll_rec(formula, values))
    return std::nullopt;
  std::vector<bool> out(formula.num_vars);
  for (std::size_t v = 0; v < formula.num_vars; ++v)
    out[v] = values[v] > 0;
  return out;
}

std::vector<bool> ReductionArtifact::assignment_of(const std::vector<std::size_t>& sequence) const {
  std::vector<bool> out(sequence.size());
  for (std::size_t t = 0; t < sequence.size(); ++t) {
    std::size_t step = right_stochastic ? sequence.size() - 1 - t : t;
    out[t] = sequence[step] == 0;
  }
  return out;
}

std::vector<std::size_t> ReductionArtifact::sequence_of(const std::vector<bool>& assignment) const {
  std::vector<std::size_t> out(assignment.size());
  for (std::size_t t = 0; t < assignment.size(); ++t) {
    std::size_t step = right_stochastic ? assignment.size() - 1 - t : t;
    out[step] = assignment[t] ? 0 : 1;
  }
  return out;
}

ReductionArtifact sat_to_instance(const CnfFormula& formula, bool right_stochastic) {
  formula.validate();
  if (formula.clauses.empty())
    throw InvalidArgument("formula has no clauses");
  if (formula.num_vars == 0)
    throw InvalidArgument("formula has no variables");
  const std::size_t n = formula.num_vars;
  const std::size_t block = 2 * n + 1;
  const std::size_t size = formula.clauses.size() * block;

  // Column u of a matrix holds a single 1 in the row of the node the token at
  // u moves to. Nodes u_1..u_{2n+1} of clause j sit at offset j*block.
  Matrix<Rational> A(size), B(size);
  Vector<Rational> start(size, Rational(0)), goal(size, Rational(0));
  for (std::size_t j = 0; j < formula.clauses.size(); ++j) {
    const std::size_t off = j * block;
    const auto& clause = formula.clauses[j];
    auto has = [&](int lit) { return std::find(clause.begin(), clause.end(), lit) != clause.end(); };
    for (std::size_t l = 1; l <= 2 * n; ++l) {
      std::size_t from = off + l - 1;
      std::size_t step = off + l;
      bool jumpA = l <= n && has(static_cast<int>(l));
      bool jumpB = l <= n && has(-static_cast<int>(l));
      A(jumpA ? off + n + l : step, from) = 1;
      B(jumpB ? off + n + l : step, from) = 1;
    }
    A(off + 2 * n, off + 2 * n) = 1;
    B(off + 2 * n, off + 2 * n) = 1;
    start[off] = 1;
    goal[off + 2 * n] = 1;
  }

  ReductionArtifact art;
  art.right_stochastic = right_stochastic;
  art.threshold = Rational(static_cast<long>(formula.clauses.size()));
  Instance<Rational>& inst = art.instance;
  inst.n = size;
  inst.K = n;
  if (right_stochastic) {
    inst.matrices = {transpose(A), transpose(B)};
    inst.a = goal;
    inst.objective = Objective<Rational>::linear(start);
  } else {
    inst.matrices = {A, B};
    inst.a = start;
    inst.objective = Objective<Rational>::linear(goal);
  }
  return art;
}

bool check_k_mortal(const std::vector<Matrix<Rational>>& sigma, std::size_t k, const SolverOptions& options) {
  if (sigma.empty())
    throw InvalidArgument("check_k_mortal: empty matrix set");
  const std::size_t n = sigma.front().dim();
  for (const auto& A : sigma)
    for (std::size_t i = 0; i < A.dim(); ++i)
      for (const auto& v : A.row(i))
        if (sgn(v) < 0)
          throw InvalidArgument("check_k_mortal needs non-negative matrices");
  Instance<Rational> inst;
  inst.n = n;
  inst.K = k;
  inst.matrices = sigma;
  inst.a.assign(n, Rational(1));
  inst.objective = Objective<Rational>::linear(Vector<Rational>(n, Rational(-1)));
  return solve(inst, options).value == 0;
}

NormKind parse_norm(std::string_view name) {
  if (name == "1") return NormKind::l1;
  if (name == "2") return NormKind::l2;
  if (name == "inf") return NormKind::linf;
  throw InvalidArgument("norm must be 1, 2 or inf");
}

template <Scalar T>
double jsr_lower_bound(const std::vector<Matrix<T>>& sigma, std::size_t k, const Vector<T>& a, NormKind p,
                       const SolverOptions& options) {
  if (k == 0)
    throw InvalidArgument("jsr_lower_bound needs k >= 1");
  if (sigma.empty())
    throw InvalidArgument("jsr_lower_bound: empty matrix set");
  Instance<T> inst;
  inst.n = a.size();
  inst.K = k;
  inst.matrices = sigma;
  inst.a = a;
  switch (p) {
  case NormKind::l1: inst.objective = Objective<T>::l1(); break;
  case NormKind::l2: inst.objective = Objective<T>::l2sq(); break;
  case NormKind::linf: inst.objective = Objective<T>::linf(); break;
  }
  T norm = evaluate_objective(inst.objective, a);  // squared for l2
  if constexpr (is_exact_v<T>) {
    if (norm != 1)
      throw InvalidArgument("initial vector must have unit norm");
  } else {
    double nv = p == NormKind::l2 ? std::sqrt(norm) : norm;
    if (!(std::fabs(nv - 1.0) <= 1e-12))
      throw InvalidArgument("initial vector must have unit norm (within 1e-12), found " + to_string(nv));
  }
  SolveResult<T> res = solve(inst, options);
  // Work in logs so large k does not overflow.
  double log_norm = res.log10_value;
  if (p == NormKind::l2)
    log_norm /= 2;
  if (res.value == 0)
    return 0;
  return std::pow(10.0, log_norm / static_cast<double>(k));
}

template double jsr_lower_bound(const std::vector<Matrix<Rational>>&, std::size_t, const Vector<Rational>&,
                                NormKind, const SolverOptions&);
template double jsr_lower_bound(const std::vector<Matrix<double>>&, std::size_t, const Vector<double>&, NormKind,
                                const SolverOptions&);

}  // namespace switchopt
