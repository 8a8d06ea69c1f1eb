#pragma once

#include "switchopt/instance.hpp"

#include <cstddef>
#include <string>

namespace switchopt {

/// AMPL model and data for the bilinear formulation
///   max f(x(K))
///   x_i(k) = sum_l sum_j A_lij x_j(k-1) z_kl   (i = 1..n, k = 1..K)
///   sum_l z_kl = 1                            (k = 1..K)
///   x(0) = a,  z binary.
/// The data file lists A as "l i j value" rows. Exact values that have no
/// finite decimal expansion are written as a 17-digit decimal followed by a
/// "# exact: p/q" comment.
struct MinlpExport {
  std::string model;
  std::string data;
  std::size_t state_constraints = 0;
  std::size_t assignment_constraints = 0;
  std::size_t binaries = 0;
};

/// Supports linear and l2sq objectives.
template <Scalar T>
MinlpExport export_minlp(const Instance<T>& instance);

MinlpExport export_minlp(const AnyInstance& instance);

extern template MinlpExport export_minlp(const Instance<Rational>&);
extern template MinlpExport export_minlp(const Instance<double>&);

}  // namespace switchopt
