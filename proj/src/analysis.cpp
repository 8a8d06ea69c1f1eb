#include "switchopt/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace switchopt {

template <Scalar T>
NkTrace trace_nk(const Instance<T>& instance, std::size_t K, const SolverOptions& options) {
  Instance<T> copy = instance;
  copy.objective = Objective<T>::l2sq();
  SolverOptions opt = options;
  opt.rescale = false;
  Layer<T> last;
  NkTrace trace;
  trace.nk = build_layers(copy, K, opt, last);
  return trace;
}

template NkTrace trace_nk(const Instance<Rational>&, std::size_t, const SolverOptions&);
template NkTrace trace_nk(const Instance<double>&, std::size_t, const SolverOptions&);

std::array<std::size_t, 5> VertexClassification::counts() const {
  std::array<std::size_t, 5> out{};
  for (std::size_t i = 0; i < 5; ++i)
    out[i] = sets[i].size();
  return out;
}

namespace {

using Vec = Vector<Rational>;

Rational cross(const Vec& u, const Vec& v) { return u[0] * v[1] - u[1] * v[0]; }

// Closed cone swept counter-clockwise from r1 to r2. A half-plane cone has
// r2 = -r1 and spans the left side of r1.
struct Cone {
  Vec r1, r2;
  bool half_plane = false;

  bool interior(const Vec& c) const {
    if (half_plane)
      return sgn(cross(r1, c)) > 0;
    return sgn(cross(r1, c)) > 0 && sgn(cross(c, r2)) > 0;
  }
  bool closed(const Vec& c) const {
    if (half_plane)
      return sgn(cross(r1, c)) >= 0;
    return sgn(cross(r1, c)) >= 0 && sgn(cross(c, r2)) >= 0;
  }
};

bool in_open_quadrant(const Vec& c, int q) {
  int sx = sgn(c[0]);
  int sy = sgn(c[1]);
  switch (q) {
  case 1: return sx > 0 && sy > 0;
  case 2: return sx < 0 && sy > 0;
  case 3: return sx < 0 && sy < 0;
  case 4: return sx > 0 && sy < 0;
  }
  return false;
}

const std::array<Vec, 4>& axes() {
  static const std::array<Vec, 4> dirs{Vec{1, 0}, Vec{0, 1}, Vec{-1, 0}, Vec{0, -1}};
  return dirs;
}

// Interiors of the cone and of quadrant q meet iff one of these directions
// lies in both: the intersection is an open arc whose endpoints are boundary
// rays, and the sum of two non-opposite rays lies strictly between them.
bool meets_quadrant(const Cone& cone, int q) {
  std::vector<Vec> rays{cone.r1, cone.r2};
  for (const auto& e : axes())
    rays.push_back(e);
  std::vector<Vec> cands;
  for (std::size_t i = 0; i < rays.size(); ++i)
    for (std::size_t j = i + 1; j < rays.size(); ++j)
      cands.push_back({rays[i][0] + rays[j][0], rays[i][1] + rays[j][1]});
  for (const auto& r : {cone.r1, cone.r2}) {
    cands.push_back({-r[1], r[0]});
    cands.push_back({r[1], -r[0]});
  }
  for (const auto& c : cands)
    if (c[0] != 0 || c[1] != 0)
      if (in_open_quadrant(c, q) && cone.interior(c))
        return true;
  return false;
}

Vec outward_normal(const Vec& from, const Vec& to) {
  // Edge of a counter-clockwise polygon; the outside is on the right.
  return {to[1] - from[1], from[0] - to[0]};
}

}  // namespace

VertexClassification classify_vertices(const std::vector<Vector<Rational>>& vertices) {
  VertexClassification out;
  if (vertices.empty())
    throw InvalidArgument("classify_vertices: empty vertex set");
  for (const auto& v : vertices)
    if (v.size() != 2)
      throw DimensionError("classify_vertices: points must be two-dimensional");
  if (vertices.size() == 1) {
    for (auto& s : out.sets)
      s.push_back(vertices[0]);
    return out;
  }
  std::vector<std::size_t> order = extreme_indices_2d(vertices);
  if (order.size() != vertices.size())
    throw InvalidArgument("classify_vertices: input is not the vertex set of its convex hull");

  const std::size_t h = order.size();
  for (std::size_t i = 0; i < h; ++i) {
    const Vec& v = vertices[order[i]];
    Cone cone;
    if (h == 2) {
      const Vec& w = vertices[order[1 - i]];
      Vec u{v[0] - w[0], v[1] - w[1]};
      cone.r1 = {u[1], -u[0]};
      cone.r2 = {-u[1], u[0]};
      cone.half_plane = true;
    } else {
      const Vec& prev = vertices[order[(i + h - 1) % h]];
      const Vec& next = vertices[order[(i + 1) % h]];
      cone.r1 = outward_normal(prev, v);
      cone.r2 = outward_normal(v, next);
    }
    bool axis = false;
    for (const auto& e : axes())
      axis = axis || cone.closed(e);
    if (axis)
      out.sets[0].push_back(v);
    for (int q = 1; q <= 4; ++q)
      if (meets_quadrant(cone, q))
        out.sets[q].push_back(v);
  }
  for (auto& s : out.sets)
    std::sort(s.begin(), s.end(), [](const Vec& x, const Vec& y) { return lex_less(x, y); });
  return out;
}

VertexClassification classify_vertices(const Layer<Rational>& layer) {
  std::vector<Vec> pts;
  for (const auto& p : layer.points)
    pts.push_back(p.x);
  return classify_vertices(pts);
}

Matrix<Rational> catalog_matrix(int index) {
  switch (index) {
  case 1: return {{0, 1}, {1, 0}};
  case 2: return {{1, 1}, {0, 1}};
  case 3: return {{1, 0}, {1, 1}};
  case 4: return {{1, 1}, {1, 0}};
  case 5: return {{0, 1}, {1, 1}};
  }
  throw InvalidArgument("catalog matrix index must be 1..5");
}

std::array<Matrix<Rational>, 2> catalog_pair(int index) {
  switch (index) {
  case 1: return {catalog_matrix(1), catalog_matrix(2)};
  case 2: return {catalog_matrix(1), catalog_matrix(4)};
  case 3: return {catalog_matrix(2), catalog_matrix(3)};
  case 4: return {catalog_matrix(4), catalog_matrix(5)};
  case 5: return {catalog_matrix(2), catalog_matrix(4)};
  }
  throw InvalidArgument("catalog pair index must be 1..5");
}

Instance<Rational> catalog_instance(int pair, const Vector<Rational>& a, std::size_t K) {
  auto p = catalog_pair(pair);
  Instance<Rational> inst;
  inst.n = 2;
  inst.K = K;
  inst.matrices = {p[0], p[1]};
  inst.a = a;
  inst.objective = Objective<Rational>::l2sq();
  return inst;
}

std::size_t count_offdiagonal_reachable(const Instance<Rational>& instance, std::size_t k, std::uint64_t cap) {
  if (instance.n != 2)
    throw DimensionError("count_offdiagonal_reachable needs n = 2");
  std::size_t count = 0;
  for (const auto& x : reachable_set(instance, k, cap))
    if (sgn(x[0]) * sgn(x[1]) < 0)
      ++count;
  return count;
}

std::vector<Matrix<Rational>> similarity_transform(const std::vector<Matrix<Rational>>& sigma,
                                                   const Matrix<Rational>& S) {
  Matrix<Rational> inv = inverse(S);
  std::vector<Matrix<Rational>> out;
  for (const auto& A : sigma) {
    if (A.dim() != S.dim())
      throw DimensionError("similarity_transform: dimension mismatch");
    out.push_back(mat_mul(mat_mul(S, A), inv));
  }
  return out;
}

Matrix<Rational> random_unimodular(std::size_t n, SplitMix64& rng) {
  Matrix<Rational> S = Matrix<Rational>::identity(n);
  if (n < 2)
    return rng.integer(0, 1) ? S : Matrix<Rational>{{-1}};
  const int steps = static_cast<int>(rng.integer(1, 4));
  for (int s = 0; s < steps; ++s) {
    std::size_t i = static_cast<std::size_t>(rng.integer(0, static_cast<std::int64_t>(n) - 1));
    std::size_t j = static_cast<std::size_t>(rng.integer(0, static_cast<std::int64_t>(n) - 2));
    if (j >= i)
      ++j;
    Matrix<Rational> E = Matrix<Rational>::identity(n);
    E(i, j) = Rational(rng.integer(-2, 2));
    S = mat_mul(E, S);
  }
  if (rng.integer(0, 1))
    for (std::size_t c = 0; c < n; ++c)
      std::swap(S(0, c), S(1, c));
  return S;
}

SimilarityReport similarity_report(const std::vector<Matrix<Rational>>& sigma, const Matrix<Rational>& S,
                                   const Vector<Rational>& a, std::size_t K) {
  Instance<Rational> base;
  base.n = S.dim();
  base.K = K;
  base.matrices = sigma;
  base.a = a;
  base.objective = Objective<Rational>::l2sq();
  Instance<Rational> moved = base;
  moved.matrices = similarity_transform(sigma, S);
  moved.a = mat_vec(S, a);

  SimilarityReport rep;
  rep.original = trace_nk(base, K).nk;
  rep.transformed = trace_nk(moved, K).nk;
  rep.invariant = rep.original == rep.transformed;
  return rep;
}

bool check_similarity_invariance(const std::vector<Matrix<Rational>>& sigma, const Matrix<Rational>& S,
                                 const Vector<Rational>& a, std::size_t K) {
  return similarity_report(sigma, S, a, K).invariant;
}

bool in_region(const Vector<Rational>& a, Region region) {
  if (a.size() != 2)
    throw DimensionError("regions are defined in two dimensions");
  int s0 = sgn(a[0]);
  int s1 = sgn(a[1]);
  switch (region) {
  case Region::any: return s0 != 0 || s1 != 0;
  case Region::q1: return s0 >= 0 && s1 >= 0 && (s0 || s1);
  case Region::int_q1: return s0 > 0 && s1 > 0;
  case Region::int_q2: return s0 < 0 && s1 > 0;
  case Region::int_q3: return s0 < 0 && s1 < 0;
  case Region::int_q4: return s0 > 0 && s1 < 0;
  case Region::q1_or_q3: return (s0 >= 0 && s1 >= 0 && (s0 || s1)) || (s0 <= 0 && s1 <= 0 && (s0 || s1));
  }
  return false;
}

std::vector<Vector<Rational>> sample_region(Region region, std::size_t count, std::uint64_t seed) {
  SplitMix64 rng(seed);
  std::vector<Vector<Rational>> out;
  while (out.size() < count) {
    Vector<Rational> a{Rational(rng.integer(-20, 20)), Rational(rng.integer(-20, 20))};
    if (in_region(a, region))
      out.push_back(std::move(a));
  }
  return out;
}

std::optional<double> fit_exponent(const std::vector<std::size_t>& nk) {
  std::vector<double> xs, ys;
  for (std::size_t k = 2; k < nk.size(); ++k)
    if (nk[k] > 0) {
      xs.push_back(std::log(static_cast<double>(k)));
      ys.push_back(std::log(static_cast<double>(nk[k])));
    }
  if (xs.size() < 2)
    return std::nullopt;
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= static_cast<double>(xs.size());
  my /= static_cast<double>(xs.size());
  double sxy = 0, sxx = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxy += (xs[i] - mx) * (ys[i] - my);
    sxx += (xs[i] - mx) * (xs[i] - mx);
  }
  return sxx > 0 ? std::optional<double>(sxy / sxx) : std::nullopt;
}

namespace {

std::vector<Layer<Rational>> pair_layers(int pair, const Vector<Rational>& a, std::size_t K) {
  Instance<Rational> inst = catalog_instance(pair, a, K);
  SolverOptions opt;
  std::vector<Layer<Rational>> layers;
  Layer<Rational> last;
  build_layers(inst, K, opt, last, nullptr, &layers);
  return layers;
}

std::vector<std::size_t> counts_of(const std::vector<Layer<Rational>>& layers) {
  std::vector<std::size_t> nk;
  for (const auto& l : layers)
    nk.push_back(l.points.size());
  return nk;
}

std::string describe(const Vector<Rational>& a) { return format_vector(a); }

void record(GrowthReport& rep, bool hard, std::string message) {
  (hard ? rep.violations : rep.flagged).push_back(std::move(message));
}

}  // namespace

GrowthReport check_growth_bounds(int pair, const Vector<Rational>& a, std::size_t K) {
  if (pair < 1 || pair > 5)
    throw InvalidArgument("pair must be 1..5");
  if (a.size() != 2)
    throw DimensionError("catalog pairs act on two-dimensional vectors");
  if (!in_region(a, Region::any))
    throw InvalidArgument("initial vector must be nonzero");

  GrowthReport rep;
  rep.pair = pair;
  rep.a = a;
  auto layers = pair_layers(pair, a, K);
  rep.nk = counts_of(layers);
  const std::string where = " (pair " + std::to_string(pair) + ", a = " + describe(a) + ")";
  auto bound_msg = [&](std::size_t k, std::size_t value, const char* name, long long bound) {
    return "k = " + std::to_string(k) + ": " + name + " = " + std::to_string(value) + " exceeds " +
           std::to_string(bound) + where;
  };

  switch (pair) {
  case 1: {
    // Mirroring a through the origin swaps the roles of Q1 and Q3.
    bool interior = in_region(a, Region::int_q1) || in_region(a, Region::int_q3);
    bool boundary = !interior && in_region(a, Region::q1_or_q3);
    if (!interior && !boundary) {
      rep.fitted_exponent = fit_exponent(rep.nk);
      break;
    }
    rep.asserted = true;
    const bool third = in_region(a, Region::q1_or_q3) && sgn(a[0]) <= 0 && sgn(a[1]) <= 0;
    const int near = third ? 3 : 1;
    const int far = third ? 1 : 3;
    for (std::size_t k = 0; k <= K; ++k) {
      long long kk = static_cast<long long>(k);
      long long bound = kk * kk + 5 * kk + 3;
      if (static_cast<long long>(rep.nk[k]) > bound)
        record(rep, interior, bound_msg(k, rep.nk[k], "N_k", bound));
      auto cls = classify_vertices(layers[k]).counts();
      rep.classes.push_back(cls);
      if (k >= 2) {
        if (static_cast<long long>(cls[near]) > kk + 1)
          record(rep, interior, bound_msg(k, cls[near], near == 1 ? "|E1|" : "|E3|", kk + 1));
        if (cls[far] > 2)
          record(rep, interior, bound_msg(k, cls[far], far == 1 ? "|E1|" : "|E3|", 2));
      }
    }
    break;
  }
  case 2:
    rep.asserted = true;
    for (std::size_t k = 2; k <= K; ++k) {
      long long bound = 8 * static_cast<long long>(k) - 12;
      if (static_cast<long long>(rep.nk[k]) > bound)
        record(rep, true, bound_msg(k, rep.nk[k], "N_k", bound));
    }
    break;
  case 3: {
    if (!in_region(a, Region::q1_or_q3)) {
      rep.fitted_exponent = fit_exponent(rep.nk);
      break;
    }
    rep.asserted = true;
    auto A2 = catalog_matrix(2);
    auto A3 = catalog_matrix(3);
    Vector<Rational> p2 = a, p3 = a;
    for (std::size_t k = 0; k <= K; ++k) {
      long long bound = 12 * static_cast<long long>(k) - 6;
      if (k >= 3 && static_cast<long long>(rep.nk[k]) > bound)
        record(rep, true, bound_msg(k, rep.nk[k], "N_k", bound));
      auto cls = classify_vertices(layers[k]);
      rep.classes.push_back(cls.counts());
      // For a in Q3 the picture is mirrored and E^1 plays the role of E^3.
      const auto& tail = sgn(a[0]) >= 0 && sgn(a[1]) >= 0 ? cls.sets[3] : cls.sets[1];
      for (const auto& v : tail)
        if (v != p2 && v != p3)
          record(rep, true, "k = " + std::to_string(k) + ": vertex " + describe(v) +
                                " is in the far class but is neither A2^k a nor A3^k a" + where);
      p2 = mat_vec(A2, p2);
      p3 = mat_vec(A3, p3);
    }
    break;
  }
  case 4: {
    rep.asserted = true;
    auto sigma3 = counts_of(pair_layers(3, a, K));
    for (std::size_t k = 1; k <= K; ++k) {
      if (k % 2 == 0 && rep.nk[k] != sigma3[k])
        record(rep, true, "k = " + std::to_string(k) + ": N_k = " + std::to_string(rep.nk[k]) +
                              " differs from the pair-3 count " + std::to_string(sigma3[k]) + where);
      if (k % 2 == 1 && rep.nk[k] > 2 * sigma3[k - 1])
        record(rep, true, bound_msg(k, rep.nk[k], "N_k", 2 * static_cast<long long>(sigma3[k - 1])));
    }
    break;
  }
  case 5:
    if (!in_region(a, Region::q1_or_q3)) {
      rep.fitted_exponent = fit_exponent(rep.nk);
      break;
    }
    rep.asserted = true;
    for (std::size_t k = 1; k <= K; ++k) {
      long long bound = 6 * static_cast<long long>(k) + 8;
      if (static_cast<long long>(rep.nk[k]) > bound)
        record(rep, true, bound_msg(k, rep.nk[k], "N_k", bound));
    }
    break;
  }
  return rep;
}

std::string_view to_string(Family family) {
  switch (family) {
  case Family::rank_one: return "rank-one";
  case Family::shared_eigenvector: return "shared-eigenvector";
  case Family::right_stochastic: return "right-stochastic";
  case Family::commuting: return "commuting";
  case Family::projection_pair: return "projection-pair";
  }
  return "unknown";
}

Family parse_family(std::string_view name) {
  for (Family f : {Family::rank_one, Family::shared_eigenvector, Family::right_stochastic, Family::commuting,
                   Family::projection_pair})
    if (name == to_string(f))
      return f;
  throw InvalidArgument("unknown family '" + std::string(name) + "'");
}

namespace {

Matrix<Rational> random_matrix(std::size_t n, SplitMix64& rng, int lo, int hi) {
  Matrix<Rational> M(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      M(i, j) = Rational(rng.integer(lo, hi));
  return M;
}

Vector<Rational> random_nonzero(std::size_t n, SplitMix64& rng, int lo, int hi) {
  while (true) {
    Vector<Rational> v(n);
    bool nz = false;
    for (auto& x : v) {
      x = Rational(rng.integer(lo, hi));
      nz = nz || x != 0;
    }
    if (nz)
      return v;
  }
}

Matrix<Rational> commutator(const Matrix<Rational>& A, const Matrix<Rational>& B) {
  Matrix<Rational> ab = mat_mul(A, B);
  Matrix<Rational> ba = mat_mul(B, A);
  Matrix<Rational> out(A.dim());
  for (std::size_t i = 0; i < A.dim(); ++i)
    for (std::size_t j = 0; j < A.dim(); ++j)
      out(i, j) = ab(i, j) - ba(i, j);
  return out;
}

}  // namespace

bool has_family_structure(Family family, const std::vector<Matrix<Rational>>& sigma) {
  if (sigma.empty())
    return false;
  switch (family) {
  case Family::rank_one: {
    std::size_t big = 0;
    for (const auto& A : sigma)
      if (rank(A) > 1)
        ++big;
    return big <= 1;
  }
  case Family::shared_eigenvector:
  case Family::right_stochastic: {
    // Two 2x2 matrices have a common eigenvector iff their commutator is
    // singular; when it is nonzero its kernel is that (real) eigenvector.
    if (sigma.size() != 2 || sigma[0].dim() != 2)
      return false;
    Matrix<Rational> comm = commutator(sigma[0], sigma[1]);
    if (determinant(comm) != 0)
      return false;
    if (comm == Matrix<Rational>(2)) {
      // Commuting pair: the eigenvectors are shared, but may be complex.
      for (const auto& A : sigma) {
        Rational tr = A(0, 0) + A(1, 1);
        if (tr * tr - 4 * determinant(A) < 0)
          return false;
      }
    }
    if (family == Family::right_stochastic)
      for (const auto& A : sigma)
        for (std::size_t i = 0; i < 2; ++i)
          if (A(i, 0) + A(i, 1) != 1)
            return false;
    return true;
  }
  case Family::commuting:
    for (std::size_t i = 0; i < sigma.size(); ++i)
      for (std::size_t j = i + 1; j < sigma.size(); ++j)
        if (mat_mul(sigma[i], sigma[j]) != mat_mul(sigma[j], sigma[i]))
          return false;
    return true;
  case Family::projection_pair:
    if (sigma.size() != 2)
      return false;
    for (const auto& P : sigma)
      if (mat_mul(P, P) != P)
        return false;
    return true;
  }
  return false;
}

Instance<Rational> generate_family(Family family, std::uint64_t seed, std::size_t K) {
  SplitMix64 rng(seed);
  Instance<Rational> inst;
  inst.K = K;
  inst.objective = Objective<Rational>::l2sq();
  switch (family) {
  case Family::rank_one: {
    inst.n = static_cast<std::size_t>(rng.integer(2, 3));
    std::size_t m = static_cast<std::size_t>(rng.integer(2, 3));
    Matrix<Rational> A;
    do
      A = random_matrix(inst.n, rng, -5, 5);
    while (determinant(A) == 0);
    inst.matrices.push_back(A);
    while (inst.matrices.size() < m) {
      auto u = random_nonzero(inst.n, rng, -3, 3);
      auto v = random_nonzero(inst.n, rng, -3, 3);
      Matrix<Rational> B(inst.n);
      for (std::size_t i = 0; i < inst.n; ++i)
        for (std::size_t j = 0; j < inst.n; ++j)
          B(i, j) = u[i] * v[j];
      inst.matrices.push_back(B);
    }
    break;
  }
  case Family::shared_eigenvector: {
    inst.n = 2;
    // Upper triangular pair (common eigenvector e1), disguised by a shear.
    Matrix<Rational> S = random_unimodular(2, rng);
    std::vector<Matrix<Rational>> tri;
    for (int t = 0; t < 2; ++t) {
      Matrix<Rational> U = random_matrix(2, rng, -4, 4);
      U(1, 0) = 0;
      tri.push_back(U);
    }
    inst.matrices = similarity_transform(tri, S);
    break;
  }
  case Family::right_stochastic:
    inst.n = 2;
    for (int t = 0; t < 2; ++t) {
      Matrix<Rational> M(2);
      for (std::size_t i = 0; i < 2; ++i) {
        Rational p(rng.integer(-8, 8), 4);
        p.canonicalize();
        M(i, 0) = p;
        M(i, 1) = 1 - p;
      }
      inst.matrices.push_back(M);
    }
    break;
  case Family::commuting: {
    inst.n = 2;
    Matrix<Rational> A = random_matrix(2, rng, -3, 3);
    inst.matrices = {A, mat_mul(A, A)};
    break;
  }
  case Family::projection_pair:
    inst.n = 2;
    for (int t = 0; t < 2; ++t) {
      Matrix<Rational> S = random_unimodular(2, rng);
      Matrix<Rational> D(2);
      D(0, 0) = 1;
      inst.matrices.push_back(similarity_transform({D}, S).front());
    }
    break;
  }
  inst.a = random_nonzero(inst.n, rng, -9, 9);
  if (!has_family_structure(family, inst.matrices))
    throw InvalidArgument("generated " + std::string(to_string(family)) +
                          " sample lacks its structural property (seed " + std::to_string(seed) + ")");
  return inst;
}

std::size_t family_bound(Family family, std::size_t k, std::size_t m) {
  switch (family) {
  case Family::rank_one: return 1 + 2 * k * (m - 1);
  case Family::shared_eigenvector:
  case Family::right_stochastic:
  case Family::projection_pair: return k == 0 ? 1 : 2 * k;
  case Family::commuting: return k + 1;
  }
  return 0;
}

FamilyReport structured_family_bounds(Family family, std::size_t K, std::size_t samples, std::uint64_t seed) {
  FamilyReport rep{family, 0, {}};
  for (std::size_t s = 0; s < samples; ++s) {
    Instance<Rational> inst = generate_family(family, seed + s, K);
    auto nk = trace_nk(inst, K).nk;
    ++rep.samples;
    for (std::size_t k = 0; k <= K; ++k) {
      std::size_t bound = family_bound(family, k, inst.m());
      if (nk[k] > bound)
        rep.violations.push_back(std::string(to_string(family)) + " seed " + std::to_string(seed + s) +
                                 ": N_" + std::to_string(k) + " = " + std::to_string(nk[k]) + " > " +
                                 std::to_string(bound));
    }
  }
  return rep;
}

std::string trace_csv(const NkTrace& trace) {
  std::ostringstream out;
  out << "k,N_k\n";
  for (std::size_t k = 0; k < trace.nk.size(); ++k)
    out << k << ',' << trace.nk[k] << '\n';
  return out.str();
}

std::string classification_csv(const std::vector<std::array<std::size_t, 5>>& rows) {
  std::ostringstream out;
  out << "k,e0,e1,e2,e3,e4\n";
  for (std::size_t k = 0; k < rows.size(); ++k) {
    out << k;
    for (std::size_t c : rows[k])
      out << ',' << c;
    out << '\n';
  }
  return out.str();
}

}  // namespace switchopt
