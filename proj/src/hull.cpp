#include "switchopt/hull.hpp"
#include "switchopt/random.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <exception>
#include <functional>
#include <limits>
#include <optional>
#include <numeric>
#include <string>

namespace switchopt {

LpFailure::LpFailure(std::size_t point, LpStatus status)
    : NumericError("separation LP for point " + std::to_string(point) + " ended with status " +
                   std::string(to_string(status))),
      point_(point), status_(status) {}

namespace {

template <Scalar T>
void check_dims(const std::vector<Vector<T>>& points) {
  if (points.empty())
    return;
  const std::size_t d = points.front().size();
  for (const auto& p : points)
    if (p.size() != d)
      throw DimensionError("point set mixes dimensions");
}

double coordinate_scale(const std::vector<Vector<double>>& points) {
  double s = 0;
  for (const auto& p : points)
    for (double v : p)
      s = std::max(s, std::fabs(v));
  return s;
}

template <Scalar T>
T cross(const Vector<T>& o, const Vector<T>& a, const Vector<T>& b) {
  return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

template <Scalar T>
T dist2(const Vector<T>& o, const Vector<T>& a) {
  return (a[0] - o[0]) * (a[0] - o[0]) + (a[1] - o[1]) * (a[1] - o[1]);
}

// Strict left turn o -> a -> b, using the relative cross tolerance in float mode.
template <Scalar T>
bool left_turn(const Vector<T>& o, const Vector<T>& a, const Vector<T>& b, const HullOptions& opt) {
  T c = cross(o, a, b);
  if constexpr (is_exact_v<T>) {
    return sgn(c) > 0;
  } else {
    double scale = std::sqrt(dist2(o, a)) * std::sqrt(dist2(o, b));
    return c > opt.cross_tolerance * scale;
  }
}

}  // namespace

template <Scalar T>
std::vector<std::vector<std::size_t>> duplicate_groups(const std::vector<Vector<T>>& points,
                                                       const HullOptions& options) {
  check_dims(points);
  std::vector<std::size_t> order(points.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return lex_less(points[x], points[y]); });

  std::vector<std::vector<std::size_t>> groups;
  if constexpr (is_exact_v<T>) {
    for (std::size_t idx : order) {
      if (!groups.empty() && points[groups.back().front()] == points[idx])
        groups.back().push_back(idx);
      else
        groups.push_back({idx});
    }
  } else {
    const double tol = options.dedup_tolerance * coordinate_scale(points);
    for (std::size_t idx : order) {
      const auto& p = points[idx];
      bool merged = false;
      // Groups are sorted by first coordinate; only the tail can be within tol.
      for (std::size_t g = groups.size(); g-- > 0;) {
        const auto& rep = points[groups[g].front()];
        if (rep[0] < p[0] - tol)
          break;
        double d = 0;
        for (std::size_t k = 0; k < p.size(); ++k)
          d = std::max(d, std::fabs(rep[k] - p[k]));
        if (d <= tol) {
          groups[g].push_back(idx);
          merged = true;
          break;
        }
      }
      if (!merged)
        groups.push_back({idx});
    }
  }
  for (auto& g : groups)
    std::sort(g.begin(), g.end());
  return groups;
}

template <Scalar T>
std::vector<std::size_t> extreme_indices_2d(const std::vector<Vector<T>>& points, const HullOptions& options) {
  if (points.empty())
    throw InvalidArgument("extreme_indices_2d: empty point set");
  if (points.front().size() != 2)
    throw DimensionError("extreme_indices_2d: points must be two-dimensional");

  std::vector<std::size_t> reps;
  for (const auto& g : duplicate_groups(points, options))
    reps.push_back(g.front());
  if (reps.size() <= 2) {
    std::sort(reps.begin(), reps.end(),
              [&](std::size_t x, std::size_t y) { return lex_less(points[x], points[y]); });
    return reps;
  }

  // Pivot: lowest, then leftmost.
  std::size_t pivot = reps.front();
  for (std::size_t idx : reps) {
    const auto& p = points[idx];
    const auto& q = points[pivot];
    if (p[1] < q[1] || (p[1] == q[1] && p[0] < q[0]))
      pivot = idx;
  }
  const auto& o = points[pivot];
  std::vector<std::size_t> rest;
  for (std::size_t idx : reps)
    if (idx != pivot)
      rest.push_back(idx);

  // Angular sort around the pivot; equal angles by increasing distance.
  if constexpr (is_exact_v<T>) {
    std::sort(rest.begin(), rest.end(), [&](std::size_t x, std::size_t y) {
      int s = sgn(cross(o, points[x], points[y]));
      if (s != 0)
        return s > 0;
      return dist2(o, points[x]) < dist2(o, points[y]);
    });
  } else {
    std::vector<std::pair<double, double>> key(points.size());
    for (std::size_t idx : rest)
      key[idx] = {std::atan2(points[idx][1] - o[1], points[idx][0] - o[0]), dist2(o, points[idx])};
    std::sort(rest.begin(), rest.end(), [&](std::size_t x, std::size_t y) { return key[x] < key[y]; });
  }

  std::vector<std::size_t> stack{pivot};
  for (std::size_t idx : rest) {
    while (stack.size() >= 2 &&
           !left_turn(points[stack[stack.size() - 2]], points[stack.back()], points[idx], options))
      stack.pop_back();
    stack.push_back(idx);
  }
  // Close the polygon: the last vertex must turn left into the pivot.
  while (stack.size() >= 3 && !left_turn(points[stack[stack.size() - 2]], points[stack.back()], o, options))
    stack.pop_back();

  if (stack.size() == 2) {
    // Collinear input: just the two endpoints.
    std::sort(stack.begin(), stack.end(),
              [&](std::size_t x, std::size_t y) { return lex_less(points[x], points[y]); });
    return stack;
  }
  auto first = std::min_element(stack.begin(), stack.end(), [&](std::size_t x, std::size_t y) {
    return lex_less(points[x], points[y]);
  });
  std::rotate(stack.begin(), first, stack.end());
  return stack;
}

namespace {

// Dual separation LP over the columns in `cols`; cols holds j, the mu column.
// data[i * n + d] is the scaled difference (p_i - p_j)_d. x is returned over
// all points.
LpSolution<double> restricted_lp(const std::vector<double>& data, std::size_t n, std::size_t j,
                                 const std::vector<std::size_t>& cols, const LpOptions& options) {
  const std::size_t c = cols.size();
  LpProblem<double> lp;
  lp.num_vars = c;
  lp.maximize = false;
  lp.objective.assign(c, 0.0);
  std::vector<Vector<double>> rows(n, Vector<double>(c, 0.0));
  for (std::size_t k = 0; k < c; ++k) {
    if (cols[k] == j) {
      lp.objective[k] = 1;
      continue;
    }
    for (std::size_t d = 0; d < n; ++d)
      rows[d][k] = data[cols[k] * n + d];
  }
  for (auto& row : rows)
    lp.add_row(std::move(row), RowSense::equal, 0.0);
  lp.add_row(Vector<double>(c, 1.0), RowSense::equal, 1.0);
  LpSolution<double> sol = lp_solve(lp, options);
  if (sol.status == LpStatus::optimal) {
    Vector<double> x(data.size() / n, 0.0);
    for (std::size_t k = 0; k < c; ++k)
      x[cols[k]] = sol.x[k];
    sol.x = std::move(x);
  }
  return sol;
}

// Column generation from the seed columns: add the points with negative
// reduced cost until there are none. The result is an optimum of the full LP.
LpSolution<double> separation_lp(const std::vector<double>& data, std::size_t n, std::size_t j,
                                 const std::vector<std::size_t>& seeds, const LpOptions& options) {
  const std::size_t l = data.size() / n;
  std::vector<std::size_t> cols;
  if (seeds.empty()) {
    cols.resize(l);
    std::iota(cols.begin(), cols.end(), std::size_t{0});
    return restricted_lp(data, n, j, cols, options);
  }
  std::vector<char> in(l, 0);
  cols.push_back(j);
  in[j] = 1;
  for (std::size_t s : seeds)
    if (!in[s]) {
      in[s] = 1;
      cols.push_back(s);
    }
  const std::size_t batch = 4 * (n + 1);
  std::size_t iterations = 0;
  for (;;) {
    LpSolution<double> sol = restricted_lp(data, n, j, cols, options);
    iterations += sol.iterations;
    sol.iterations = iterations;
    if (sol.status != LpStatus::optimal || sol.objective <= 0.5 || cols.size() == l)
      return sol;
    double tol = options.tolerance;
    for (std::size_t d = 0; d < n; ++d)
      tol += options.tolerance * std::fabs(sol.duals[d]);
    std::vector<std::pair<double, std::size_t>> violated;
    for (std::size_t i = 0; i < l; ++i) {
      if (in[i])
        continue;
      double r = sol.duals[n];
      for (std::size_t d = 0; d < n; ++d)
        r += sol.duals[d] * data[i * n + d];
      if (r > tol)
        violated.emplace_back(r, i);
    }
    if (violated.empty())
      return sol;
    if (violated.size() > batch) {
      std::partial_sort(violated.begin(), violated.begin() + static_cast<std::ptrdiff_t>(batch), violated.end(),
                        std::greater<>());
      violated.resize(batch);
    }
    for (const auto& v : violated) {
      in[v.second] = 1;
      cols.push_back(v.second);
    }
  }
}

SeparationCertificate<double> float_separation(const std::vector<Vector<double>>& points, std::size_t j,
                                               const HullOptions& options, const std::vector<std::size_t>& seeds) {
  const std::size_t n = points[j].size();
  const std::size_t l = points.size();
  const Vector<double>& pj = points[j];

  // Coordinates relative to p_j, scaled into [-1, 1].
  double scale = 0;
  for (const auto& p : points)
    for (std::size_t d = 0; d < n; ++d)
      scale = std::max(scale, std::fabs(p[d] - pj[d]));
  if (scale == 0)
    scale = 1;
  std::vector<double> data(l * n, 0.0);
  for (std::size_t i = 0; i < l; ++i)
    if (i != j)
      for (std::size_t d = 0; d < n; ++d)
        data[i * n + d] = (points[i][d] - pj[d]) / scale;

  LpSolution<double> sol = separation_lp(data, n, j, seeds, options.lp);
  if (sol.status != LpStatus::optimal)
    throw LpFailure(j, sol.status);

  SeparationCertificate<double> cert;
  cert.lp_iterations = sol.iterations;
  cert.value = sol.objective;
  cert.z.assign(n, 0.0);
  for (std::size_t d = 0; d < n; ++d)
    cert.z[d] = sol.duals[d] / scale;
  cert.z0 = dot(cert.z, pj) - sol.duals[n];
  return cert;
}

// Exact separation LP on the full point set.
SeparationCertificate<Rational> solve_separation(const std::vector<Vector<Rational>>& points, std::size_t j,
                                                 const HullOptions& options) {
  const std::size_t n = points[j].size();
  const std::size_t l = points.size();
  const Vector<Rational>& pj = points[j];

  // Solve the dual of the separation LP: express p_j as mu * p_j plus a convex
  // combination of the others and minimize mu. Its row multipliers (w, w0)
  // give the separating hyperplane.
  LpProblem<Rational> lp;
  lp.num_vars = l;  // lambda_i for i != j at column i, mu at column j
  lp.maximize = false;
  lp.objective.assign(l, Rational(0));
  lp.objective[j] = 1;
  for (std::size_t d = 0; d < n; ++d) {
    Vector<Rational> row(l, Rational(0));
    for (std::size_t i = 0; i < l; ++i)
      if (i != j)
        row[i] = points[i][d] - pj[d];
    lp.add_row(std::move(row), RowSense::equal, Rational(0));
  }
  lp.add_row(Vector<Rational>(l, Rational(1)), RowSense::equal, Rational(1));

  LpSolution<Rational> sol = lp_solve(lp, options.lp);
  if (sol.status != LpStatus::optimal)
    throw LpFailure(j, sol.status);

  SeparationCertificate<Rational> cert;
  cert.lp_iterations = sol.iterations;
  cert.value = sol.objective;
  cert.z.assign(n, Rational(0));
  for (std::size_t d = 0; d < n; ++d)
    cert.z[d] = sol.duals[d];
  cert.z0 = dot(cert.z, pj) - sol.duals[n];
  return cert;
}

// v as m * 2^e with 0.5 <= |m| < 1; v != 0.
double mantissa_exp(const Rational& v, long& e) {
  long en = 0, ed = 0;
  double mn = mpz_get_d_2exp(&en, v.get_num_mpz_t());
  double md = mpz_get_d_2exp(&ed, v.get_den_mpz_t());
  e = en - ed;
  return mn / md;
}

// Exact mode shortcut. The optimum of the separation LP is 0 or 1, and each
// outcome has a small exact certificate: a direction z with z.(p_i - p_j) < 0
// for all i != j, or p_j inside the hull of at most n + 1 other points. A
// binary64 solve proposes one; it is accepted only after exact verification.
std::optional<SeparationCertificate<Rational>> guided_separation(const std::vector<Vector<Rational>>& points,
                                                                 std::size_t j, const HullOptions& options,
                                                                 const std::vector<std::size_t>& seeds) {
  const std::size_t n = points[j].size();
  const std::size_t l = points.size();
  const Vector<Rational>& pj = points[j];
  SeparationCertificate<Rational> cert;
  cert.z.assign(n, Rational(0));
  if (l == 1) {
    cert.z0 = -1;
    cert.value = 1;
    return cert;
  }

  // Differences, each column scaled by a power of two into [-1, 1].
  std::vector<Vector<Rational>> diff(l);
  std::vector<double> data(l * n, 0.0);
  for (std::size_t i = 0; i < l; ++i) {
    if (i == j)
      continue;
    diff[i].resize(n);
    std::vector<double> mant(n, 0.0);
    std::vector<long> ex(n, 0);
    long top = std::numeric_limits<long>::min();
    for (std::size_t d = 0; d < n; ++d) {
      diff[i][d] = points[i][d] - pj[d];
      if (sgn(diff[i][d]) != 0) {
        mant[d] = mantissa_exp(diff[i][d], ex[d]);
        top = std::max(top, ex[d]);
      }
    }
    for (std::size_t d = 0; d < n; ++d)
      if (mant[d] != 0)
        data[i * n + d] = std::ldexp(mant[d], static_cast<int>(std::max(ex[d] - top, -1000L)));
  }
  LpSolution<double> sol = separation_lp(data, n, j, seeds, options.lp);
  if (sol.status != LpStatus::optimal)
    return std::nullopt;
  cert.lp_iterations = sol.iterations;

  if (sol.objective > 0.5) {
    Vector<Rational> z(n);
    for (std::size_t d = 0; d < n; ++d)
      z[d] = Rational(sol.duals[d]);
    Rational worst;
    bool first = true;
    for (std::size_t i = 0; i < l; ++i) {
      if (i == j)
        continue;
      Rational t = dot(z, diff[i]);
      if (sgn(t) >= 0)
        return std::nullopt;
      if (first || t > worst)
        worst = t;
      first = false;
    }
    // Normalize so that z.(p_i - p_j) <= -1; then z.p_j - z0 = 1.
    for (auto& v : z)
      v /= -worst;
    cert.z = std::move(z);
    cert.z0 = dot(cert.z, pj) - 1;
    cert.value = 1;
    return cert;
  }

  std::vector<Vector<Rational>> support{pj};
  for (std::size_t i = 0; i < l; ++i)
    if (i != j && sol.x[i] > 1e-12)
      support.push_back(points[i]);
  if (support.size() == 1 || support.size() > n + 2)
    return std::nullopt;
  SeparationCertificate<Rational> sub = solve_separation(support, 0, options);
  if (sgn(sub.value) != 0)
    return std::nullopt;
  // p_j lies in the hull of the support, hence of the other points.
  cert.lp_iterations += sub.lp_iterations;
  cert.z0 = 0;
  cert.value = 0;
  return cert;
}

}  // namespace

namespace {

template <Scalar T>
SeparationCertificate<T> separate_point(const std::vector<Vector<T>>& points, std::size_t j,
                                        const HullOptions& options, const std::vector<std::size_t>& seeds) {
  if constexpr (is_exact_v<T>) {
    if (auto cert = guided_separation(points, j, options, seeds))
      return *cert;
    return solve_separation(points, j, options);
  } else {
    return float_separation(points, j, options, seeds);
  }
}

// Maximizers of fixed pseudo-random directions are vertices. They start the
// column set of every separation LP on large sets; empty for small ones.
template <Scalar T>
std::vector<std::size_t> seed_columns(const std::vector<Vector<T>>& points) {
  const std::size_t l = points.size();
  const std::size_t n = points.front().size();
  if (l <= 16 * (n + 1))
    return {};
  std::vector<double> flat(l * n);
  double top = 0;
  for (std::size_t i = 0; i < l; ++i)
    for (std::size_t d = 0; d < n; ++d) {
      double v = to_double(points[i][d]);
      if (!std::isfinite(v))
        return {};
      flat[i * n + d] = v;
      top = std::max(top, std::fabs(v));
    }
  if (top == 0)
    return {};
  for (auto& v : flat)
    v /= top;

  SplitMix64 rng(0x5eedULL);
  std::vector<char> hit(l, 0);
  std::vector<double> dir(n);
  for (std::size_t t = 0; t < 16 * n; ++t) {
    for (auto& v : dir)
      v = rng.uniform(-1.0, 1.0);
    std::size_t best = 0;
    double best_v = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < l; ++i) {
      double v = 0;
      for (std::size_t d = 0; d < n; ++d)
        v += dir[d] * flat[i * n + d];
      if (v > best_v) {
        best_v = v;
        best = i;
      }
    }
    hit[best] = 1;
  }
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < l; ++i)
    if (hit[i])
      out.push_back(i);
  return out;
}

}  // namespace

template <Scalar T>
SeparationCertificate<T> lp_separation(const std::vector<Vector<T>>& points, std::size_t j,
                                       const HullOptions& options) {
  check_dims(points);
  if (j >= points.size())
    throw InvalidArgument("lp_separation: index out of range");
  return separate_point(points, j, options, {});
}

namespace kernels {

namespace {

template <Scalar T>
bool is_extreme(const SeparationCertificate<T>& cert, const HullOptions& options) {
  if constexpr (is_exact_v<T>)
    return sgn(cert.value) > 0;
  else
    return cert.value > options.extreme_tolerance;
}

}  // namespace

template <Scalar T>
std::vector<char> separate_serial(const std::vector<Vector<T>>& points, const HullOptions& options) {
  check_dims(points);
  std::vector<char> flags(points.size(), 0);
  if (points.empty())
    return flags;
  const auto seeds = seed_columns(points);
  for (std::size_t j = 0; j < points.size(); ++j)
    flags[j] = is_extreme(separate_point(points, j, options, seeds), options) ? 1 : 0;
  return flags;
}

template <Scalar T>
std::vector<char> separate_parallel(const std::vector<Vector<T>>& points, const HullOptions& options) {
  check_dims(points);
  const std::ptrdiff_t count = static_cast<std::ptrdiff_t>(points.size());
  std::vector<char> flags(points.size(), 0);
  if (points.empty())
    return flags;
  const auto seeds = seed_columns(points);
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 4)
  for (std::ptrdiff_t j = 0; j < count; ++j) {
    try {
      flags[j] = is_extreme(separate_point(points, static_cast<std::size_t>(j), options, seeds), options) ? 1 : 0;
    } catch (...) {
#pragma omp critical(switchopt_separation_failure)
      if (!failure)
        failure = std::current_exception();
    }
  }
  if (failure)
    std::rethrow_exception(failure);
  return flags;
}

}  // namespace kernels

template <Scalar T>
std::vector<std::size_t> extreme_indices_lp(const std::vector<Vector<T>>& points, const HullOptions& options,
                                            std::size_t* lp_count) {
  if (points.empty())
    throw InvalidArgument("extreme_indices_lp: empty point set");
  std::vector<std::size_t> reps;
  for (const auto& g : duplicate_groups(points, options))
    reps.push_back(g.front());
  std::vector<Vector<T>> unique;
  unique.reserve(reps.size());
  for (std::size_t idx : reps)
    unique.push_back(points[idx]);

  std::vector<char> flags;
  try {
    flags = options.parallel ? kernels::separate_parallel(unique, options)
                             : kernels::separate_serial(unique, options);
  } catch (const LpFailure& e) {
    throw LpFailure(reps[e.point()], e.status());
  }
  if (lp_count)
    *lp_count += unique.size();

  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < reps.size(); ++k)
    if (flags[k])
      out.push_back(reps[k]);
  return out;
}

template <Scalar T>
PointSet<T> extreme_points_2d(const PointSet<T>& set, const HullOptions& options) {
  PointSet<T> out{set.dim, {}};
  for (std::size_t idx : extreme_indices_2d(set.points, options))
    out.points.push_back(set.points[idx]);
  return out;
}

template <Scalar T>
PointSet<T> extreme_points_lp(const PointSet<T>& set, const HullOptions& options) {
  PointSet<T> out{set.dim, {}};
  for (std::size_t idx : extreme_indices_lp(set.points, options))
    out.points.push_back(set.points[idx]);
  return out;
}

#define SWITCHOPT_HULL_INSTANTIATE(T)                                                              \
  template std::vector<std::vector<std::size_t>> duplicate_groups(const std::vector<Vector<T>>&,   \
                                                                  const HullOptions&);             \
  template std::vector<std::size_t> extreme_indices_2d(const std::vector<Vector<T>>&,              \
                                                       const HullOptions&);                        \
  template SeparationCertificate<T> lp_separation(const std::vector<Vector<T>>&, std::size_t,      \
                                                  const HullOptions&);                             \
  template std::vector<std::size_t> extreme_indices_lp(const std::vector<Vector<T>>&,              \
                                                       const HullOptions&, std::size_t*);          \
  template PointSet<T> extreme_points_2d(const PointSet<T>&, const HullOptions&);                  \
  template PointSet<T> extreme_points_lp(const PointSet<T>&, const HullOptions&);                  \
  template std::vector<char> kernels::separate_serial(const std::vector<Vector<T>>&,               \
                                                      const HullOptions&);                         \
  template std::vector<char> kernels::separate_parallel(const std::vector<Vector<T>>&,             \
                                                        const HullOptions&);

SWITCHOPT_HULL_INSTANTIATE(Rational)
SWITCHOPT_HULL_INSTANTIATE(double)

}  // namespace switchopt
