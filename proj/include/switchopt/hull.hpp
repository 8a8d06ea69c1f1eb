#pragma once

#include "switchopt/linalg.hpp"
#include "switchopt/lp.hpp"

#include <cstddef>
#include <vector>

namespace switchopt {

/// Tolerance policy for binary64 geometry. Exact mode ignores all of it.
struct HullOptions {
  /// Graham turn test: cross(a-o, b-o) must exceed this times |a-o||b-o|.
  double cross_tolerance = 1e-9;
  /// LP path: a point is extreme when the separation value exceeds this.
  double extreme_tolerance = 1e-9;
  /// Points closer than this (relative to the set's largest coordinate, in
  /// the max-norm) are treated as one point.
  double dedup_tolerance = 1e-9;
  LpOptions lp;
  /// Run the per-point separation kernel with OpenMP.
  bool parallel = true;
};

template <Scalar T>
struct PointSet {
  std::size_t dim = 0;
  std::vector<Vector<T>> points;
};

/// Optimal solution of the separation LP for one point p_j of a set S:
/// maximize p_j.z - z0 subject to p_i.z - z0 <= 0 (i != j), p_j.z - z0 <= 1.
/// value > 0 exactly when p_j is a vertex of conv(S); then the hyperplane
/// z.x = z0 separates p_j from the rest.
template <Scalar T>
struct SeparationCertificate {
  Vector<T> z;
  T z0 = 0;
  T value = 0;
  std::size_t lp_iterations = 0;
};

/// Separation LP did not terminate with an optimum (float mode only).
class LpFailure : public NumericError {
public:
  LpFailure(std::size_t point, LpStatus status);
  std::size_t point() const { return point_; }
  LpStatus status() const { return status_; }

private:
  std::size_t point_;
  LpStatus status_;
};

/// Partitions point indices into groups of coincident points (exact equality,
/// or the dedup tolerance in float mode). Each group is sorted by index;
/// groups are ordered lexicographically by their first point.
template <Scalar T>
std::vector<std::vector<std::size_t>> duplicate_groups(const std::vector<Vector<T>>& points,
                                                       const HullOptions& options = {});

/// Graham scan. Returns indices of the hull vertices in counter-clockwise
/// order starting from the lexicographically smallest vertex. Coincident
/// inputs are represented by their smallest index; points in the relative
/// interior of an edge are dropped.
template <Scalar T>
std::vector<std::size_t> extreme_indices_2d(const std::vector<Vector<T>>& points,
                                            const HullOptions& options = {});

/// Solves the separation LP for points[j]. `points` must be free of duplicates.
template <Scalar T>
SeparationCertificate<T> lp_separation(const std::vector<Vector<T>>& points, std::size_t j,
                                       const HullOptions& options = {});

/// LP engine. Deduplicates, separates every point, and returns the vertex
/// indices in lexicographic order of the points.
template <Scalar T>
std::vector<std::size_t> extreme_indices_lp(const std::vector<Vector<T>>& points,
                                            const HullOptions& options = {},
                                            std::size_t* lp_count = nullptr);

template <Scalar T>
PointSet<T> extreme_points_2d(const PointSet<T>& set, const HullOptions& options = {});

template <Scalar T>
PointSet<T> extreme_points_lp(const PointSet<T>& set, const HullOptions& options = {});

namespace kernels {

/// flags[j] != 0 iff points[j] is a vertex. Input must be duplicate-free.
/// The serial version is the reference the OpenMP version is tested against.
template <Scalar T>
std::vector<char> separate_serial(const std::vector<Vector<T>>& points, const HullOptions& options);

template <Scalar T>
std::vector<char> separate_parallel(const std::vector<Vector<T>>& points, const HullOptions& options);

}  // namespace kernels

#define SWITCHOPT_HULL_EXTERN(T)                                                                   \
  extern template std::vector<std::vector<std::size_t>> duplicate_groups(                          \
      const std::vector<Vector<T>>&, const HullOptions&);                                          \
  extern template std::vector<std::size_t> extreme_indices_2d(const std::vector<Vector<T>>&,       \
                                                              const HullOptions&);                 \
  extern template SeparationCertificate<T> lp_separation(const std::vector<Vector<T>>&,            \
                                                         std::size_t, const HullOptions&);         \
  extern template std::vector<std::size_t> extreme_indices_lp(const std::vector<Vector<T>>&,       \
                                                              const HullOptions&, std::size_t*);   \
  extern template PointSet<T> extreme_points_2d(const PointSet<T>&, const HullOptions&);           \
  extern template PointSet<T> extreme_points_lp(const PointSet<T>&, const HullOptions&);           \
  namespace kernels {                                                                              \
  extern template std::vector<char> separate_serial(const std::vector<Vector<T>>&,                 \
                                                    const HullOptions&);                           \
  extern template std::vector<char> separate_parallel(const std::vector<Vector<T>>&,               \
                                                      const HullOptions&);                         \
  }

SWITCHOPT_HULL_EXTERN(Rational)
SWITCHOPT_HULL_EXTERN(double)
#undef SWITCHOPT_HULL_EXTERN

}  // namespace switchopt
