#include "oracles.hpp"
#include "switchopt/hull.hpp"
#include "switchopt/random.hpp"

#include <doctest.h>

#include <set>

using namespace switchopt;
using P = Vector<Rational>;

namespace {

std::vector<P> pick(const std::vector<P>& pts, const std::vector<std::size_t>& idx) {
  std::vector<P> out;
  for (auto i : idx)
    out.push_back(pts[i]);
  return out;
}

std::vector<P> sorted(std::vector<P> v) {
  std::sort(v.begin(), v.end(), [](const P& a, const P& b) { return lex_less(a, b); });
  return v;
}

std::vector<P> random_points(SplitMix64& rng, std::size_t count, int range) {
  std::vector<P> pts;
  for (std::size_t i = 0; i < count; ++i)
    pts.push_back({Rational(rng.integer(-range, range)), Rational(rng.integer(-range, range))});
  return pts;
}

}  // namespace

TEST_CASE("Graham: square corners plus center") {
  std::vector<P> pts{{0, 0}, {1, 0}, {1, 1}, {0, 1}, {Rational(1, 2), Rational(1, 2)}};
  auto idx = extreme_indices_2d(pts);
  // Counter-clockwise from the lexicographically smallest point.
  CHECK(pick(pts, idx) == std::vector<P>{{0, 0}, {1, 0}, {1, 1}, {0, 1}});
}

TEST_CASE("Graham: collinear points give the two endpoints") {
  std::vector<P> pts{{1, 1}, {2, 2}, {0, 0}};
  CHECK(pick(pts, extreme_indices_2d(pts)) == std::vector<P>{{0, 0}, {2, 2}});
  std::vector<P> dup{{3, 3}, {3, 3}};
  CHECK(extreme_indices_2d(dup) == std::vector<std::size_t>{0});
  CHECK_THROWS_AS(extreme_indices_2d(std::vector<P>{}), InvalidArgument);
}

TEST_CASE("Graham: drops points on edges and keeps counter-clockwise order") {
  std::vector<P> pts{{0, 0}, {2, 0}, {4, 0}, {4, 2}, {4, 4}, {2, 4}, {0, 4}, {0, 2}, {1, 1}};
  auto v = pick(pts, extreme_indices_2d(pts));
  CHECK(v == std::vector<P>{{0, 0}, {4, 0}, {4, 4}, {0, 4}});
}

TEST_CASE("Graham and LP agree with the supporting-line oracle on 50 random points") {
  SplitMix64 rng(5);
  for (int t = 0; t < 20; ++t) {
    auto pts = random_points(rng, 50, 10);
    auto oracle_v = oracle::vertices_2d(pts);
    CHECK(sorted(pick(pts, extreme_indices_2d(pts))) == oracle_v);
    CHECK(pick(pts, extreme_indices_lp(pts)) == oracle_v);
  }
}

TEST_CASE("lp_separation on a triangle with an interior point") {
  std::vector<P> pts{{0, 0}, {4, 0}, {0, 4}, {1, 1}};
  auto inner = lp_separation(pts, 3);
  CHECK(inner.value == 0);
  auto corner = lp_separation(pts, 1);
  CHECK(corner.value == 1);
  CHECK(dot(corner.z, pts[1]) - corner.z0 > 0);
  for (std::size_t i = 0; i < pts.size(); ++i)
    if (i != 1)
      CHECK(dot(corner.z, pts[i]) - corner.z0 <= 0);

  // The primal form of the same LP, solved directly, has the same optimum.
  for (std::size_t j = 0; j < pts.size(); ++j) {
    auto sol = lp_solve(oracle::separation_primal(pts, j));
    REQUIRE(sol.status == LpStatus::optimal);
    CHECK(sol.objective == lp_separation(pts, j).value);
  }
}

TEST_CASE("lp_separation on a segment in three dimensions") {
  std::vector<P> pts{{0, 0, 0}, {2, 4, 6}, {1, 2, 3}};
  CHECK(lp_separation(pts, 2).value == 0);
  CHECK(lp_separation(pts, 0).value > 0);
  CHECK(lp_separation(pts, 1).value > 0);
}

TEST_CASE("extreme_points_lp on small sets") {
  PointSet<Rational> single{3, {{1, 2, 3}}};
  CHECK(extreme_points_lp(single).points == single.points);

  PointSet<Rational> cross{4, {}};
  for (std::size_t i = 0; i < 4; ++i)
    for (int s : {1, -1}) {
      P e(4, 0);
      e[i] = s;
      cross.points.push_back(e);
    }
  cross.points.push_back(P(4, 0));
  auto ext = extreme_points_lp(cross);
  CHECK(ext.points.size() == 8);
  CHECK(ext.points == sorted(std::vector<P>(cross.points.begin(), cross.points.end() - 1)));
}

TEST_CASE("duplicates do not hide vertices") {
  std::vector<P> pts{{0, 0}, {1, 0}, {0, 1}, {1, 0}, {0, 0}};
  auto idx = extreme_indices_lp(pts);
  CHECK(idx == std::vector<std::size_t>{0, 2, 1});
  auto groups = duplicate_groups(pts);
  CHECK(groups == std::vector<std::vector<std::size_t>>{{0, 4}, {2}, {1, 3}});
}

TEST_CASE("hull properties in three dimensions") {
  SplitMix64 rng(77);
  Matrix<Rational> S0{{2, 1, 0}, {0, 1, -1}, {1, 0, 3}};
  for (int t = 0; t < 10; ++t) {
    std::vector<P> pts;
    for (int i = 0; i < 25; ++i)
      pts.push_back({Rational(rng.integer(-6, 6)), Rational(rng.integer(-6, 6)), Rational(rng.integer(-6, 6))});
    auto ext = pick(pts, extreme_indices_lp(pts));
    // Idempotence.
    CHECK(pick(ext, extreme_indices_lp(ext)) == ext);
    // Soundness: every input point lies in the hull of the output.
    for (int s = 0; s < 5; ++s)
      CHECK(oracle::in_hull(ext, pts[static_cast<std::size_t>(rng.integer(0, 24))]));
    // Affine invariance.
    std::vector<P> mapped;
    for (const auto& p : pts)
      mapped.push_back(mat_vec(S0, p));
    std::vector<P> image;
    for (const auto& p : ext)
      image.push_back(mat_vec(S0, p));
    CHECK(pick(mapped, extreme_indices_lp(mapped)) == sorted(image));
  }
}

TEST_CASE("float mode: tolerant dedup and agreement with exact") {
  std::vector<Vector<double>> pts{{0, 0}, {1, 0}, {1, 1e-13}, {0, 1}, {0.25, 0.25}};
  auto groups = duplicate_groups(pts);
  CHECK(groups.size() == 4);
  auto g = extreme_indices_2d(pts);
  auto l = extreme_indices_lp(pts);
  CHECK(std::set<std::size_t>(g.begin(), g.end()) == std::set<std::size_t>{0, 1, 3});
  CHECK(std::set<std::size_t>(l.begin(), l.end()) == std::set<std::size_t>{0, 1, 3});
}

TEST_CASE("serial and parallel separation kernels agree") {
  SplitMix64 rng(3);
  for (int t = 0; t < 5; ++t) {
    std::vector<Vector<double>> pts;
    for (int i = 0; i < 60; ++i)
      pts.push_back({rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1)});
    HullOptions opts;
    CHECK(kernels::separate_serial(pts, opts) == kernels::separate_parallel(pts, opts));
  }
  auto pts = random_points(rng, 40, 5);
  std::vector<P> uniq;
  for (const auto& grp : duplicate_groups(pts))
    uniq.push_back(pts[grp.front()]);
  CHECK(kernels::separate_serial(uniq, {}) == kernels::separate_parallel(uniq, {}));
}

TEST_CASE("kernels on large sets agree with the full per-point LP") {
  // Above 16(n + 1) points the kernels start each LP from seed columns.
  SplitMix64 rng(17);
  for (int t = 0; t < 3; ++t) {
    std::vector<Vector<double>> pts;
    for (int i = 0; i < 150; ++i)
      pts.push_back({rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1)});
    std::vector<char> full;
    for (std::size_t j = 0; j < pts.size(); ++j)
      full.push_back(lp_separation(pts, j).value > 1e-9 ? 1 : 0);
    CHECK(kernels::separate_serial(pts, {}) == full);
    CHECK(kernels::separate_parallel(pts, {}) == full);
  }
  std::vector<P> ipts;
  for (int i = 0; i < 120; ++i)
    ipts.push_back({Rational(rng.integer(-9, 9)), Rational(rng.integer(-9, 9)), Rational(rng.integer(-9, 9))});
  std::vector<P> uniq;
  for (const auto& grp : duplicate_groups(ipts))
    uniq.push_back(ipts[grp.front()]);
  REQUIRE(uniq.size() > 64);
  std::vector<char> full;
  for (std::size_t j = 0; j < uniq.size(); ++j)
    full.push_back(sgn(lp_separation(uniq, j).value) > 0 ? 1 : 0);
  CHECK(kernels::separate_serial(uniq, {}) == full);
  for (std::size_t j = 0; j < uniq.size(); ++j) {
    std::vector<P> others(uniq);
    others.erase(others.begin() + static_cast<std::ptrdiff_t>(j));
    CHECK(static_cast<bool>(full[j]) == !oracle::in_hull(others, uniq[j]));
  }
}
