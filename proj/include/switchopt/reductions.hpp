#pragma once

#include "switchopt/solver.hpp"

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace switchopt {

/// 3-CNF. Literal +v is y_v, -v is its negation; variables are 1..num_vars.
struct CnfFormula {
  std::size_t num_vars = 0;
  std::vector<std::array<int, 3>> clauses;

  void validate() const;
};

/// DIMACS "p cnf" input. Every clause must have exactly three literals.
CnfFormula parse_dimacs(std::string_view text);
std::string emit_dimacs(const CnfFormula& formula);

/// assignment[v-1] is the value of y_v.
std::size_t satisfied_clauses(const CnfFormula& formula, const std::vector<bool>& assignment);

/// Complete DPLL search with unit propagation. Small inputs only.
std::optional<std::vector<bool>> dpll(const CnfFormula& formula);

/// Switching instance whose optimum equals the largest number of clauses any
/// assignment satisfies. Matrix 0 sets a variable true, matrix 1 false.
struct ReductionArtifact {
  Instance<Rational> instance;
  Rational threshold;  // number of clauses; reached iff satisfiable
  bool right_stochastic = false;

  std::vector<bool> assignment_of(const std::vector<std::size_t>& sequence) const;
  std::vector<std::size_t> sequence_of(const std::vector<bool>& assignment) const;
};

/// One (2n+1)-node gadget per clause. In the left-stochastic form the token
/// starts at node 1 and walks one node per step; choosing a matrix that makes
/// literal l true jumps from node l to node n+l+1, which then reaches the
/// absorbing node 2n+1 exactly at step n. The objective counts absorbed
/// tokens. The right-stochastic form transposes the matrices, swaps a and c,
/// and reverses the sequence.
ReductionArtifact sat_to_instance(const CnfFormula& formula, bool right_stochastic = false);

/// True iff some product of k matrices from sigma is zero. Entries must be
/// non-negative.
bool check_k_mortal(const std::vector<Matrix<Rational>>& sigma, std::size_t k,
                    const SolverOptions& options = {});

enum class NormKind { l1, l2, linf };

NormKind parse_norm(std::string_view name);

/// (max_x ||x(k)||_p)^(1/k) over all products, with ||a||_p = 1. A lower
/// bound on the largest k-step operator norm growth rate.
template <Scalar T>
double jsr_lower_bound(const std::vector<Matrix<T>>& sigma, std::size_t k, const Vector<T>& a, NormKind p,
                       const SolverOptions& options = {});

extern template double jsr_lower_bound(const std::vector<Matrix<Rational>>&, std::size_t,
                                       const Vector<Rational>&, NormKind, const SolverOptions&);
extern template double jsr_lower_bound(const std::vector<Matrix<double>>&, std::size_t,
                                       const Vector<double>&, NormKind, const SolverOptions&);

}  // namespace switchopt
