#pragma once

#include "switchopt/instance.hpp"

#include <cstdint>

namespace switchopt {

/// Random instance parameters. Float mode draws matrix entries from
/// U[matrix_lo, matrix_hi] and a from U[a_lo, a_hi]; integer mode draws
/// integers uniformly from the same closed ranges and builds an exact instance.
struct GenSpec {
  std::size_t n = 2;
  std::size_t m = 2;
  std::size_t K = 10;
  std::uint64_t seed = 0;
  bool integer = false;
  double matrix_lo = -1, matrix_hi = 1;
  double a_lo = 0, a_hi = 1;
  ObjectiveKind objective = ObjectiveKind::l2sq;

  /// Integer mode defaults: matrices in {-9..9}, a in {0..9}.
  static GenSpec integer_mode(std::size_t n, std::size_t m, std::size_t K, std::uint64_t seed);
  static GenSpec float_mode(std::size_t n, std::size_t m, std::size_t K, std::uint64_t seed);
};

/// Deterministic: the same spec always yields the same instance. Draw order is
/// matrices (row-major, in index order), then a, then c for a linear objective
/// (c uses the matrix range).
AnyInstance gen_random(const GenSpec& spec);

}  // namespace switchopt
