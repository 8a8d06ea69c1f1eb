#include "oracles.hpp"
#include "switchopt/analysis.hpp"

#include <doctest.h>

#include <set>

using namespace switchopt;
using P = Vector<Rational>;

namespace {

std::vector<P> layer_points(const Layer<Rational>& layer) {
  std::vector<P> out;
  for (const auto& p : layer.points)
    out.push_back(p.x);
  return out;
}

Layer<Rational> final_layer(const Instance<Rational>& inst, std::size_t k) {
  Layer<Rational> last;
  build_layers(inst, k, SolverOptions{}, last);
  return last;
}

}  // namespace

TEST_CASE("trace_nk basics") {
  auto inst = catalog_instance(2, {3, 5}, 0);
  CHECK(trace_nk(inst, 0).nk == std::vector<std::size_t>{1});
  auto tr = trace_nk(catalog_instance(1, {1, 2}, 8), 8);
  REQUIRE(tr.nk.size() == 9);
  for (std::size_t k = 0; k <= 8; ++k) {
    CHECK(tr.nk[k] >= 1);
    CHECK(tr.nk[k] <= (std::size_t{1} << k));
    auto inst1 = catalog_instance(1, {1, 2}, k);
    CHECK(tr.nk[k] == oracle::vertices_2d(reachable_set(inst1, k)).size());
  }
  CHECK(trace_csv(tr).rfind("k,N_k\n0,1\n", 0) == 0);
}

TEST_CASE("catalog entries") {
  CHECK(catalog_matrix(4) == Matrix<Rational>{{1, 1}, {1, 0}});
  CHECK(catalog_pair(3)[1] == Matrix<Rational>{{1, 0}, {1, 1}});
  // Products used for Sigma_4.
  auto A = [](int i) { return catalog_matrix(i); };
  CHECK(mat_mul(A(4), A(5)) == mat_mul(A(2), A(2)));
  CHECK(mat_mul(A(4), A(4)) == mat_mul(A(2), A(3)));
  CHECK(mat_mul(A(5), A(5)) == mat_mul(A(3), A(2)));
  CHECK(mat_mul(A(5), A(4)) == mat_mul(A(3), A(3)));
  // A1 A2 A1^-1 = A3.
  CHECK(similarity_transform({A(2)}, A(1)).front() == A(3));
  CHECK_THROWS_AS(catalog_matrix(6), InvalidArgument);
}

TEST_CASE("classify_vertices: square") {
  std::vector<P> sq{{0, 0}, {1, 0}, {1, 1}, {0, 1}};
  auto c = classify_vertices(sq);
  CHECK(c.counts() == std::array<std::size_t, 5>{4, 1, 1, 1, 1});
  CHECK(c.sets[1] == std::vector<P>{{1, 1}});
  CHECK(c.sets[2] == std::vector<P>{{0, 1}});
  CHECK(c.sets[3] == std::vector<P>{{0, 0}});
  CHECK(c.sets[4] == std::vector<P>{{1, 0}});
}

TEST_CASE("classify_vertices: single point and segment") {
  auto c = classify_vertices(std::vector<P>{{2, 3}});
  for (const auto& s : c.sets)
    CHECK(s == std::vector<P>{{2, 3}});
  auto seg = classify_vertices(std::vector<P>{{0, 0}, {2, 1}});
  // Cones are the half-planes 2c1 + c2 >= 0 and <= 0.
  CHECK(seg.counts() == std::array<std::size_t, 5>{2, 1, 2, 1, 2});
  CHECK(seg.sets[1] == std::vector<P>{{2, 1}});
  CHECK(seg.sets[3] == std::vector<P>{{0, 0}});
  CHECK_THROWS(classify_vertices(std::vector<P>{{0, 0}, {1, 1}, {2, 2}}));
}

TEST_CASE("classify_vertices covers every vertex and matches sampled maximizers") {
  for (std::size_t k : {5u, 7u}) {
    auto layer = final_layer(catalog_instance(3, {2, 1}, k), k);
    auto verts = layer_points(layer);
    auto c = classify_vertices(layer);
    std::size_t total = 0;
    std::set<P> uni;
    for (const auto& s : c.sets) {
      total += s.size();
      uni.insert(s.begin(), s.end());
    }
    CHECK(uni == std::set<P>(verts.begin(), verts.end()));
    CHECK(verts.size() <= total);
    for (int q = 1; q <= 4; ++q)
      for (const auto& v : verts) {
        bool in = std::find(c.sets[q].begin(), c.sets[q].end(), v) != c.sets[q].end();
        CHECK(in == oracle::maximizes_in_open_quadrant(verts, v, q));
      }
  }
}

TEST_CASE("Lemmas 5 and 6 on Sigma_1 with a in int Q1") {
  for (P a : {P{1, 2}, P{3, 1}, P{5, 5}}) {
    auto inst = catalog_instance(1, a, 25);
    Layer<Rational> last;
    std::vector<Layer<Rational>> keep;
    build_layers(inst, 25, SolverOptions{}, last, nullptr, &keep);
    for (std::size_t k = 2; k <= 25; ++k) {
      auto counts = classify_vertices(keep[k]).counts();
      CHECK(counts[1] <= k + 1);
      CHECK(counts[3] <= 2);
    }
  }
}

TEST_CASE("count_offdiagonal_reachable") {
  for (std::size_t k = 2; k <= 12; ++k)
    CHECK(count_offdiagonal_reachable(catalog_instance(1, {1, -1}, k), k) <= 4 * k + 4);
  for (std::size_t k = 0; k <= 10; ++k)
    CHECK(count_offdiagonal_reachable(catalog_instance(1, {1, 1}, k), k) == 0);
  CHECK(count_offdiagonal_reachable(catalog_instance(1, {-1, 1}, 0), 0) == 1);
}

TEST_CASE("similarity invariance") {
  auto sig1 = catalog_pair(1);
  std::vector<Matrix<Rational>> sigma(sig1.begin(), sig1.end());
  CHECK(check_similarity_invariance(sigma, Matrix<Rational>::identity(2), {3, -1}, 12));
  SplitMix64 rng(8);
  Matrix<Rational> S{{1, 1}, {0, 1}};
  for (int t = 0; t < 5; ++t) {
    P a{Rational(rng.integer(-9, 9)), Rational(rng.integer(1, 9))};
    auto rep = similarity_report(sigma, S, a, 12);
    CHECK(rep.invariant);
    CHECK(rep.original == rep.transformed);
  }
  for (int t = 0; t < 10; ++t) {
    auto U = random_unimodular(3, rng);
    Rational d = determinant(U);
    CHECK((d == 1 || d == -1));
  }
  CHECK_THROWS_AS(similarity_transform(sigma, Matrix<Rational>{{1, 2}, {2, 4}}), NumericError);
}

TEST_CASE("region sampling") {
  auto s = sample_region(Region::int_q4, 20, 1);
  CHECK(s.size() == 20);
  for (const auto& a : s) {
    CHECK(a[0] > 0);
    CHECK(a[1] < 0);
    CHECK(abs(a[0]) <= 20);
  }
  CHECK(sample_region(Region::q1, 5, 9) == sample_region(Region::q1, 5, 9));
  CHECK(in_region({0, 3}, Region::q1));
  CHECK_FALSE(in_region({0, 3}, Region::int_q1));
  CHECK(in_region({-1, -2}, Region::q1_or_q3));
}

TEST_CASE("growth bounds on the documented examples") {
  auto r5 = check_growth_bounds(5, {3, 2}, 40);
  CHECK(r5.asserted);
  CHECK(r5.ok());
  for (std::size_t k = 1; k <= 40; ++k)
    CHECK(r5.nk[k] <= 6 * k + 8);

  auto r2 = check_growth_bounds(2, {-5, 7}, 40);
  CHECK(r2.ok());
  for (std::size_t k = 2; k <= 40; ++k)
    CHECK(r2.nk[k] <= 8 * k - 12);

  auto r1 = check_growth_bounds(1, {1, 2}, 40);
  CHECK(r1.ok());
  for (std::size_t k = 2; k <= 40; ++k)
    CHECK(r1.nk[k] <= k * k + 5 * k + 3);

  auto r3 = check_growth_bounds(3, {2, 1}, 30);
  CHECK(r3.ok());

  auto r4 = check_growth_bounds(4, {2, 1}, 30);
  CHECK(r4.ok());
  auto t3 = trace_nk(catalog_instance(3, {2, 1}, 30), 30);
  for (std::size_t k = 0; k <= 30; k += 2)
    CHECK(r4.nk[k] == t3.nk[k]);

  // Sigma_1 off Q1 and Q3: no constant, exponent recorded.
  auto off = check_growth_bounds(1, {3, -2}, 20);
  CHECK(off.fitted_exponent.has_value());
}

TEST_CASE("fit_exponent recovers a quadratic") {
  std::vector<std::size_t> nk;
  for (std::size_t k = 0; k <= 30; ++k)
    nk.push_back(3 * k * k + 1);
  auto e = fit_exponent(nk);
  REQUIRE(e);
  CHECK(*e == doctest::Approx(2.0).epsilon(0.05));
}

TEST_CASE("structured families satisfy their structure and bounds") {
  for (Family f : {Family::rank_one, Family::shared_eigenvector, Family::right_stochastic, Family::commuting,
                   Family::projection_pair}) {
    CHECK(parse_family(to_string(f)) == f);
    for (std::uint64_t seed = 1; seed <= 4; ++seed) {
      auto inst = generate_family(f, seed, 15);
      CHECK(has_family_structure(f, inst.matrices));
      auto tr = trace_nk(inst, 15);
      for (std::size_t k = 0; k <= 15; ++k)
        CHECK(tr.nk[k] <= family_bound(f, k, inst.m()));
    }
    CHECK(structured_family_bounds(f, 15, 4, 100).ok());
  }
  Matrix<Rational> A{{1, 2}, {0, 3}}, B{{2, 0}, {1, 3}};
  CHECK_FALSE(has_family_structure(Family::shared_eigenvector, {A, B}));
  CHECK(has_family_structure(Family::shared_eigenvector, {A, Matrix<Rational>{{4, 1}, {0, -1}}}));
  // Commuting rotations share only complex eigenvectors.
  Matrix<Rational> R{{0, -1}, {1, 0}};
  CHECK_FALSE(has_family_structure(Family::shared_eigenvector, {R, mat_mul(R, R)}));
}

TEST_CASE("commuting pair trace versus the hull of distinct products") {
  Matrix<Rational> A{{2, 1}, {-1, 1}};
  Instance<Rational> inst;
  inst.n = 2;
  inst.K = 9;
  inst.matrices = {A, mat_mul(A, A)};
  inst.a = {1, 3};
  inst.objective = Objective<Rational>::l2sq();
  auto tr = trace_nk(inst, 9);
  for (std::size_t k = 0; k <= 9; ++k) {
    CHECK(tr.nk[k] <= k + 1);
    CHECK(tr.nk[k] == oracle::vertices_2d(reachable_set(inst, k)).size());
  }
}

TEST_CASE("classification csv") {
  std::vector<std::array<std::size_t, 5>> rows{{1, 1, 1, 1, 1}, {2, 1, 2, 1, 0}};
  CHECK(classification_csv(rows) == "k,e0,e1,e2,e3,e4\n0,1,1,1,1,1\n1,2,1,2,1,0\n");
}
