#pragma once

#include "switchopt/random.hpp"
#include "switchopt/solver.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace switchopt {

/// N_0..N_K for one instance.
struct NkTrace {
  std::string id;
  std::vector<std::size_t> nk;
};

/// Counts extreme points of each P_k. The objective is ignored.
template <Scalar T>
NkTrace trace_nk(const Instance<T>& instance, std::size_t K, const SolverOptions& options = {});

/// Vertices grouped by the open quadrants their normal cones reach
/// (sets[1..4]) and by whether the closed cone contains an axis direction
/// (sets[0]). Sets overlap.
struct VertexClassification {
  std::array<std::vector<Vector<Rational>>, 5> sets;
  std::array<std::size_t, 5> counts() const;
};

/// `vertices` must be exactly the vertex set of a 2-D polygon, segment, or point.
VertexClassification classify_vertices(const std::vector<Vector<Rational>>& vertices);
VertexClassification classify_vertices(const Layer<Rational>& layer);

/// Binary matrices A1..A5 (index 1..5).
Matrix<Rational> catalog_matrix(int index);

/// Pairs Sigma_1..Sigma_5 (index 1..5) as {first, second}.
std::array<Matrix<Rational>, 2> catalog_pair(int index);

Instance<Rational> catalog_instance(int pair, const Vector<Rational>& a, std::size_t K);

/// Distinct x(k) strictly inside the second or fourth quadrant (n = 2).
std::size_t count_offdiagonal_reachable(const Instance<Rational>& instance, std::size_t k,
                                        std::uint64_t cap = default_enumeration_cap);

/// S A S^-1 for every A. Throws NumericError if S is singular.
std::vector<Matrix<Rational>> similarity_transform(const std::vector<Matrix<Rational>>& sigma,
                                                   const Matrix<Rational>& S);

struct SimilarityReport {
  std::vector<std::size_t> original;
  std::vector<std::size_t> transformed;
  bool invariant = false;
};

/// Random integer matrix with determinant 1 or -1: a product of elementary
/// shears with multipliers in [-2, 2] and an optional row swap.
Matrix<Rational> random_unimodular(std::size_t n, SplitMix64& rng);

SimilarityReport similarity_report(const std::vector<Matrix<Rational>>& sigma, const Matrix<Rational>& S,
                                   const Vector<Rational>& a, std::size_t K);

bool check_similarity_invariance(const std::vector<Matrix<Rational>>& sigma, const Matrix<Rational>& S,
                                 const Vector<Rational>& a, std::size_t K);

enum class Region { any, q1, int_q1, int_q2, int_q3, int_q4, q1_or_q3 };

bool in_region(const Vector<Rational>& a, Region region);

/// Integer vectors with entries in [-20, 20], nonzero, filtered to `region`.
std::vector<Vector<Rational>> sample_region(Region region, std::size_t count, std::uint64_t seed);

struct GrowthReport {
  int pair = 0;
  Vector<Rational> a;
  std::vector<std::size_t> nk;
  /// Per-k class sizes |E^0_k|..|E^4_k| where they were computed.
  std::vector<std::array<std::size_t, 5>> classes;
  /// Bound failures on samples the bound covers.
  std::vector<std::string> violations;
  /// Bound failures on samples where the bound is not claimed outright
  /// (a on a quadrant boundary). Reported for review.
  std::vector<std::string> flagged;
  /// Log-log slope of N_k where no constant bound applies.
  std::optional<double> fitted_exponent;
  bool asserted = false;  // at least one bound was checked

  bool ok() const { return violations.empty(); }
};

/// Checks the explicit proof constants for Sigma_1..Sigma_5 on one sample a.
/// Sigma_1: a in int Q1 (or int Q3) N_k <= k^2+5k+3, |E^1_k| <= k+1, |E^3_k| <= 2.
/// Sigma_2: N_k <= 8k-12 for k >= 2.
/// Sigma_3: a in Q1 (or Q3) N_k <= 12k-6 for k >= 3, E^3_k within {A2^k a, A3^k a}.
/// Sigma_4: N_k(Sigma_4) = N_k(Sigma_3) for even k, <= 2 N_{k-1}(Sigma_3) for odd k.
/// Sigma_5: a in Q1 (or Q3) N_k <= 6k+8 for k >= 1.
GrowthReport check_growth_bounds(int pair, const Vector<Rational>& a, std::size_t K);

/// Least-squares slope of log N_k against log k over k >= 2.
std::optional<double> fit_exponent(const std::vector<std::size_t>& nk);

enum class Family { rank_one, shared_eigenvector, right_stochastic, commuting, projection_pair };

std::string_view to_string(Family family);
Family parse_family(std::string_view name);

/// A random member of the family with a random integer a. Throws
/// InvalidArgument if the generated matrices miss the structural condition.
Instance<Rational> generate_family(Family family, std::uint64_t seed, std::size_t K);

/// Verifies the structural condition; used by generate_family.
bool has_family_structure(Family family, const std::vector<Matrix<Rational>>& sigma);

struct FamilyReport {
  Family family;
  std::size_t samples = 0;
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

/// Bound on N_k for the family: rank-one N_0 + 2k(m-1); shared eigenvector,
/// right stochastic and projection pairs 2k (k >= 1); commuting (A, A^2) k+1.
std::size_t family_bound(Family family, std::size_t k, std::size_t m);

FamilyReport structured_family_bounds(Family family, std::size_t K, std::size_t samples, std::uint64_t seed);

std::string trace_csv(const NkTrace& trace);

/// Rows "k,e0,e1,e2,e3,e4".
std::string classification_csv(const std::vector<std::array<std::size_t, 5>>& rows);

extern template NkTrace trace_nk(const Instance<Rational>&, std::size_t, const SolverOptions&);
extern template NkTrace trace_nk(const Instance<double>&, std::size_t, const SolverOptions&);

}  // namespace switchopt
