#include "switchopt/solver.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace switchopt {

std::string_view to_string(Engine engine) {
  switch (engine) {
  case Engine::automatic: return "auto";
  case Engine::graham: return "graham";
  case Engine::lp: return "lp";
  }
  return "unknown";
}

Engine parse_engine(std::string_view name) {
  if (name == "auto") return Engine::automatic;
  if (name == "graham") return Engine::graham;
  if (name == "lp") return Engine::lp;
  throw InvalidArgument("unknown engine '" + std::string(name) + "' (expected lp, graham, auto)");
}

template <Scalar T>
T evaluate_objective(const Objective<T>& objective, const Vector<T>& x) {
  switch (objective.kind) {
  case ObjectiveKind::linear:
    return dot(objective.c, x);
  case ObjectiveKind::l1: {
    T s = 0;
    for (const T& v : x)
      s += abs_value(v);
    return s;
  }
  case ObjectiveKind::l2sq: {
    T s = 0;
    for (const T& v : x)
      s += v * v;
    return s;
  }
  case ObjectiveKind::linf:
    return max_abs(x);
  case ObjectiveKind::external:
    if (!objective.oracle)
      throw InvalidArgument("external objective has no registered oracle");
    return objective.oracle(x);
  }
  throw InvalidArgument("unknown objective kind");
}

namespace {

using Clock = std::chrono::steady_clock;

template <Scalar T>
Engine resolve_engine(const Instance<T>& instance, Engine requested) {
  if (requested == Engine::automatic)
    return instance.n == 2 ? Engine::graham : Engine::lp;
  if (requested == Engine::graham && instance.n != 2)
    throw InvalidArgument("the graham engine needs n = 2, instance has n = " + std::to_string(instance.n));
  return requested;
}

template <Scalar T>
void check_options(const Instance<T>& instance, const SolverOptions& options) {
  if (options.sense != Sense::maximize)
    throw InvalidArgument("only maximization is supported: the extreme-point search is not valid for "
                          "minimizing a convex function");
  if (options.rescale) {
    if (!instance.objective.homogeneity)
      throw InvalidArgument("rescaling needs an objective with a declared homogeneity degree");
    if constexpr (is_exact_v<T>) {
      if (!is_integer(*instance.objective.homogeneity))
        throw InvalidArgument("exact rescaling needs an integer homogeneity degree");
    }
    if (sgn(*instance.objective.homogeneity) <= 0)
      throw InvalidArgument("homogeneity degree must be positive");
  }
}

template <Scalar T>
void rescale_layer(Layer<T>& layer) {
  T s = 0;
  for (const auto& p : layer.points)
    s = std::max(s, max_abs(p.x));
  if (s == 0)
    return;
  for (auto& p : layer.points)
    for (auto& v : p.x)
      v /= s;
  layer.scale *= s;
  layer.log10_scale += log10_abs(s);
}

}  // namespace

template <Scalar T>
std::vector<std::size_t> build_layers(const Instance<T>& instance, std::size_t K, const SolverOptions& options,
                                      Layer<T>& last, std::vector<LayerStats>* stats,
                                      std::vector<Layer<T>>* keep) {
  instance.validate();
  check_options(instance, options);
  const Engine engine = resolve_engine(instance, options.engine);
  const std::size_t m = instance.m();

  Layer<T> layer;
  layer.points.push_back({instance.a, std::nullopt, std::nullopt, 0});
  if (options.rescale)
    rescale_layer(layer);
  std::vector<std::size_t> trace{1};
  if (keep)
    keep->push_back(layer);

  for (std::size_t k = 1; k <= K; ++k) {
    if (options.deadline && Clock::now() > *options.deadline)
      throw Timeout("deadline passed before layer " + std::to_string(k));
    auto start = Clock::now();

    // Candidates in lexicographic order of their sequences, so the first
    // member of any coincident group carries the smallest sequence.
    std::vector<std::size_t> by_rank(layer.points.size());
    for (std::size_t p = 0; p < layer.points.size(); ++p)
      by_rank[layer.points[p].sequence_rank] = p;
    std::vector<Vector<T>> cand;
    std::vector<std::pair<std::size_t, std::size_t>> origin;  // (parent, matrix)
    cand.reserve(layer.points.size() * m);
    origin.reserve(layer.points.size() * m);
    for (std::size_t p : by_rank)
      for (std::size_t i = 0; i < m; ++i) {
        cand.push_back(mat_vec(instance.matrices[i], layer.points[p].x));
        origin.emplace_back(p, i);
      }

    std::size_t lp_solves = 0;
    std::vector<std::size_t> keep_idx = engine == Engine::graham
                                            ? extreme_indices_2d(cand, options.hull)
                                            : extreme_indices_lp(cand, options.hull, &lp_solves);
    // Candidate index order equals sequence order.
    std::vector<std::size_t> seq_order = keep_idx;
    std::sort(seq_order.begin(), seq_order.end());
    std::sort(keep_idx.begin(), keep_idx.end(),
              [&](std::size_t x, std::size_t y) { return lex_less(cand[x], cand[y]); });

    Layer<T> next;
    next.k = k;
    next.scale = layer.scale;
    next.log10_scale = layer.log10_scale;
    next.points.reserve(keep_idx.size());
    for (std::size_t idx : keep_idx)
      next.points.push_back({std::move(cand[idx]), origin[idx].first, origin[idx].second, 0});
    // Rank assignment: map candidate index -> position in next.points.
    std::vector<std::size_t> where(cand.size(), 0);
    for (std::size_t q = 0; q < keep_idx.size(); ++q)
      where[keep_idx[q]] = q;
    for (std::size_t r = 0; r < seq_order.size(); ++r)
      next.points[where[seq_order[r]]].sequence_rank = r;

    if (options.rescale)
      rescale_layer(next);
    trace.push_back(next.points.size());
    if (stats) {
      LayerStats s;
      s.k = k;
      s.candidates = cand.size();
      s.vertices = next.points.size();
      s.lp_solves = lp_solves;
      s.seconds = std::chrono::duration<double>(Clock::now() - start).count();
      stats->push_back(s);
    }
    if (keep)
      keep->push_back(next);
    layer = std::move(next);
  }
  last = std::move(layer);
  return trace;
}

template <Scalar T>
SolveResult<T> solve(const Instance<T>& instance, const SolverOptions& options) {
  SolveResult<T> result;
  result.engine = resolve_engine(instance, options.engine);
  Layer<T> last;
  std::vector<Layer<T>> kept;
  result.nk_trace =
      build_layers(instance, instance.K, options, last, &result.stats, &kept);

  // Argmax over E_K; E_K is duplicate-free and sorted, so the first maximum
  // is the lexicographically smallest maximizer.
  std::size_t best = 0;
  T best_value = evaluate_objective(instance.objective, last.points[0].x);
  for (std::size_t p = 1; p < last.points.size(); ++p) {
    T v = evaluate_objective(instance.objective, last.points[p].x);
    if (v > best_value) {
      best_value = v;
      best = p;
    }
  }

  // Walk parent pointers back to layer 0.
  std::vector<std::size_t> seq(instance.K);
  if (instance.K > 0) {
    std::size_t cur = best;
    for (std::size_t k = instance.K; k >= 1; --k) {
      const auto& pt = kept[k].points[cur];
      seq[k - 1] = *pt.matrix_index;
      cur = *pt.parent;
    }
  }
  result.sequence = std::move(seq);
  result.xK = apply_sequence(instance, result.sequence);

  if (options.rescale) {
    const double d = to_double(*instance.objective.homogeneity);
    if constexpr (is_exact_v<T>) {
      result.value = best_value * power(last.scale, static_cast<unsigned>(instance.objective.homogeneity->get_num().get_ui()));
    } else {
      result.value = best_value * std::pow(last.scale, d);
    }
    result.log10_value = log10_abs(best_value) + d * last.log10_scale;
  } else {
    result.value = best_value;
    result.log10_value = log10_abs(best_value);
  }
  if (options.keep_layers)
    result.layers = std::move(kept);
  return result;
}

std::optional<std::uint64_t> sequence_count(std::size_t m, std::size_t k, std::uint64_t cap) {
  std::uint64_t total = 1;
  for (std::size_t t = 0; t < k; ++t) {
    if (m != 0 && total > cap / m)
      return std::nullopt;
    total *= m;
  }
  if (total > cap)
    return std::nullopt;
  return total;
}

namespace {

// Depth-first enumeration in lexicographic sequence order; `leaf` sees each
// x(k) with its sequence. Prefixes share their partial products.
template <Scalar T, class Leaf>
void descend(const Instance<T>& instance, std::vector<Vector<T>>& stack, std::vector<std::size_t>& seq,
             std::size_t depth, Leaf& leaf) {
  if (depth == seq.size()) {
    leaf(stack[depth], seq);
    return;
  }
  for (std::size_t i = 0; i < instance.m(); ++i) {
    seq[depth] = i;
    stack[depth + 1] = mat_vec(instance.matrices[i], stack[depth]);
    descend(instance, stack, seq, depth + 1, leaf);
  }
}

template <Scalar T, class Leaf>
void enumerate_all(const Instance<T>& instance, std::size_t k, std::uint64_t cap, Leaf&& leaf) {
  if (!sequence_count(instance.m(), k, cap))
    throw NumericError("enumeration of " + std::to_string(instance.m()) + "^" + std::to_string(k) +
                       " sequences exceeds the cap of " + std::to_string(cap));
  std::vector<Vector<T>> stack(k + 1);
  std::vector<std::size_t> seq(k, 0);
  stack[0] = instance.a;
  descend(instance, stack, seq, 0, leaf);
}

template <Scalar T>
void sort_unique(std::vector<Vector<T>>& pts) {
  std::sort(pts.begin(), pts.end(), [](const Vector<T>& x, const Vector<T>& y) { return lex_less(x, y); });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
}

}  // namespace

template <Scalar T>
std::vector<Vector<T>> reachable_set(const Instance<T>& instance, std::size_t k, std::uint64_t cap) {
  instance.validate();
  std::vector<Vector<T>> pts;
  enumerate_all(instance, k, cap, [&](const Vector<T>& x, const std::vector<std::size_t>&) { pts.push_back(x); });
  sort_unique(pts);
  return pts;
}

template <Scalar T>
BruteForceResult<T> brute_force(const Instance<T>& instance, std::uint64_t cap) {
  instance.validate();
  BruteForceResult<T> out;
  bool have = false;
  enumerate_all(instance, instance.K, cap, [&](const Vector<T>& x, const std::vector<std::size_t>& seq) {
    out.reachable.push_back(x);
    T v = evaluate_objective(instance.objective, x);
    // Sequences arrive in lexicographic order, so equal (value, x) keeps the first.
    if (!have || v > out.value || (v == out.value && lex_less(x, out.xK))) {
      out.value = v;
      out.xK = x;
      out.sequence = seq;
      have = true;
    }
  });
  sort_unique(out.reachable);
  return out;
}

#define SWITCHOPT_SOLVER_INSTANTIATE(T)                                                            \
  template T evaluate_objective(const Objective<T>&, const Vector<T>&);                            \
  template std::vector<std::size_t> build_layers(const Instance<T>&, std::size_t, const SolverOptions&, \
                                                 Layer<T>&, std::vector<LayerStats>*,              \
                                                 std::vector<Layer<T>>*);                          \
  template SolveResult<T> solve(const Instance<T>&, const SolverOptions&);                         \
  template std::vector<Vector<T>> reachable_set(const Instance<T>&, std::size_t, std::uint64_t);   \
  template BruteForceResult<T> brute_force(const Instance<T>&, std::uint64_t);

SWITCHOPT_SOLVER_INSTANTIATE(Rational)
SWITCHOPT_SOLVER_INSTANTIATE(double)

}  // namespace switchopt
