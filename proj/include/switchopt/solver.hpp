#pragma once

#include "switchopt/hull.hpp"
#include "switchopt/instance.hpp"

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

namespace switchopt {

enum class Engine { automatic, graham, lp };
enum class Sense { maximize, minimize };

std::string_view to_string(Engine engine);
Engine parse_engine(std::string_view name);

/// Raised when a deadline passes between layers.
class Timeout : public NumericError {
public:
  using NumericError::NumericError;
};

struct SolverOptions {
  Engine engine = Engine::automatic;
  /// Only maximization is supported; minimize is rejected.
  Sense sense = Sense::maximize;
  /// Divide each layer by its largest absolute coordinate. Requires an
  /// objective with a declared homogeneity degree.
  bool rescale = false;
  HullOptions hull;
  std::optional<std::chrono::steady_clock::time_point> deadline;
  /// Keep every layer in the result (memory grows with sum of N_k).
  bool keep_layers = false;
};

template <Scalar T>
struct LayerPoint {
  Vector<T> x;
  std::optional<std::size_t> parent;
  std::optional<std::size_t> matrix_index;
  /// Position of this point's matrix sequence in lexicographic order within
  /// the layer. Used to prefer the smallest sequence among coincident points.
  std::size_t sequence_rank = 0;
};

template <Scalar T>
struct Layer {
  std::size_t k = 0;
  std::vector<LayerPoint<T>> points;  // lexicographic order of x
  /// True coordinates are x * scale. Stays 1 without rescaling.
  T scale = 1;
  double log10_scale = 0;
};

struct LayerStats {
  std::size_t k = 0;
  std::size_t candidates = 0;
  std::size_t vertices = 0;
  std::size_t lp_solves = 0;
  double seconds = 0;
};

template <Scalar T>
struct SolveResult {
  T value = 0;
  /// log10 of |value|, finite even when value itself overflows a double.
  double log10_value = 0;
  Vector<T> xK;
  std::vector<std::size_t> sequence;
  std::vector<std::size_t> nk_trace;
  std::vector<LayerStats> stats;
  Engine engine = Engine::automatic;
  std::vector<Layer<T>> layers;  // only with keep_layers
};

template <Scalar T>
T evaluate_objective(const Objective<T>& objective, const Vector<T>& x);

/// Builds E_0..E_K. `on_layer` is called after each layer is complete.
template <Scalar T>
std::vector<std::size_t> build_layers(const Instance<T>& instance, std::size_t K, const SolverOptions& options,
                                      Layer<T>& last, std::vector<LayerStats>* stats = nullptr,
                                      std::vector<Layer<T>>* keep = nullptr);

template <Scalar T>
SolveResult<T> solve(const Instance<T>& instance, const SolverOptions& options = {});

template <Scalar T>
struct BruteForceResult {
  T value = 0;
  Vector<T> xK;
  std::vector<std::size_t> sequence;
  std::vector<Vector<T>> reachable;  // X_K without duplicates, lexicographic order
};

inline constexpr std::uint64_t default_enumeration_cap = std::uint64_t{1} << 24;

/// m^k, or nullopt when it exceeds `cap`.
std::optional<std::uint64_t> sequence_count(std::size_t m, std::size_t k, std::uint64_t cap);

/// All distinct x(k) over the m^k sequences, in lexicographic order.
template <Scalar T>
std::vector<Vector<T>> reachable_set(const Instance<T>& instance, std::size_t k,
                                     std::uint64_t cap = default_enumeration_cap);

/// Exhaustive search. Ties go to the lexicographically smallest x(K), then
/// the lexicographically smallest sequence.
template <Scalar T>
BruteForceResult<T> brute_force(const Instance<T>& instance, std::uint64_t cap = default_enumeration_cap);

#define SWITCHOPT_SOLVER_EXTERN(T)                                                                 \
  extern template T evaluate_objective(const Objective<T>&, const Vector<T>&);                     \
  extern template std::vector<std::size_t> build_layers(const Instance<T>&, std::size_t,           \
                                                        const SolverOptions&, Layer<T>&,           \
                                                        std::vector<LayerStats>*,                  \
                                                        std::vector<Layer<T>>*);                   \
  extern template SolveResult<T> solve(const Instance<T>&, const SolverOptions&);                  \
  extern template std::vector<Vector<T>> reachable_set(const Instance<T>&, std::size_t,            \
                                                       std::uint64_t);                             \
  extern template BruteForceResult<T> brute_force(const Instance<T>&, std::uint64_t);

SWITCHOPT_SOLVER_EXTERN(Rational)
SWITCHOPT_SOLVER_EXTERN(double)
#undef SWITCHOPT_SOLVER_EXTERN

}  // namespace switchopt
