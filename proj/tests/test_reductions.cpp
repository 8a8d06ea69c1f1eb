#include "oracles.hpp"
#include "switchopt/generate.hpp"
#include "switchopt/minlp.hpp"
#include "switchopt/reductions.hpp"

#include <doctest.h>

#include <cmath>
#include <set>

using namespace switchopt;
using P = Vector<Rational>;

namespace {

// Every assignment, checked clause by clause.
std::size_t max_satisfiable(const CnfFormula& f) {
  std::size_t best = 0;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << f.num_vars); ++bits) {
    std::size_t sat = 0;
    for (const auto& c : f.clauses) {
      bool ok = false;
      for (int lit : c) {
        bool v = (bits >> (std::abs(lit) - 1)) & 1u;
        ok = ok || (lit > 0 ? v : !v);
      }
      sat += ok;
    }
    best = std::max(best, sat);
  }
  return best;
}

CnfFormula all_sign_patterns() {
  CnfFormula f;
  f.num_vars = 3;
  for (int s = 0; s < 8; ++s)
    f.clauses.push_back({(s & 1) ? -1 : 1, (s & 2) ? -2 : 2, (s & 4) ? -3 : 3});
  return f;
}

CnfFormula random_formula(SplitMix64& rng, std::size_t vars, std::size_t clauses) {
  CnfFormula f;
  f.num_vars = vars;
  for (std::size_t j = 0; j < clauses; ++j) {
    std::array<int, 3> c{};
    for (int& lit : c) {
      lit = static_cast<int>(rng.integer(1, static_cast<std::int64_t>(vars)));
      if (rng.integer(0, 1))
        lit = -lit;
    }
    f.clauses.push_back(c);
  }
  return f;
}

}  // namespace

TEST_CASE("DIMACS round trip and errors") {
  auto f = parse_dimacs("c sample\np cnf 3 2\n1 -2 3 0\n-1 2 -3 0\n");
  CHECK(f.num_vars == 3);
  CHECK(f.clauses.size() == 2);
  CHECK(f.clauses[1] == std::array<int, 3>{-1, 2, -3});
  CHECK(parse_dimacs(emit_dimacs(f)).clauses == f.clauses);
  CHECK_THROWS_AS(parse_dimacs("p cnf 3 1\n1 2 0\n"), InvalidArgument);
  CHECK_THROWS_AS(parse_dimacs("p cnf 2 1\n1 2 3 0\n"), InvalidArgument);
  CHECK_THROWS_AS(parse_dimacs("p cnf 3 2\n1 2 3 0\n"), InvalidArgument);
}

TEST_CASE("DPLL against exhaustive search") {
  SplitMix64 rng(21);
  for (int t = 0; t < 200; ++t) {
    auto f = random_formula(rng, 1 + t % 5, 1 + t % 12);
    auto model = dpll(f);
    CHECK(model.has_value() == (max_satisfiable(f) == f.clauses.size()));
    if (model)
      CHECK(satisfied_clauses(f, *model) == f.clauses.size());
  }
  CHECK_FALSE(dpll(all_sign_patterns()).has_value());
}

TEST_CASE("Figure 2 gadget for y1 or not y3 or y4") {
  CnfFormula f;
  f.num_vars = 4;
  f.clauses = {{1, -3, 4}};
  auto art = sat_to_instance(f);
  const auto& A = art.instance.matrices[0];
  const auto& B = art.instance.matrices[1];
  REQUIRE(A.dim() == 9);
  // Arcs tail -> head, nodes numbered from 1; entry (tail, head) is 1.
  std::set<std::pair<int, int>> ga{{6, 1}, {3, 2}, {4, 3}, {9, 4}, {6, 5}, {7, 6}, {8, 7}, {9, 8}, {9, 9}};
  std::set<std::pair<int, int>> gb{{2, 1}, {3, 2}, {8, 3}, {5, 4}, {6, 5}, {7, 6}, {8, 7}, {9, 8}, {9, 9}};
  for (int r = 1; r <= 9; ++r)
    for (int c = 1; c <= 9; ++c) {
      CHECK(A(r - 1, c - 1) == (ga.count({r, c}) ? 1 : 0));
      CHECK(B(r - 1, c - 1) == (gb.count({r, c}) ? 1 : 0));
    }
}

TEST_CASE("reduction matrices are left stochastic and block diagonal") {
  SplitMix64 rng(4);
  for (int t = 0; t < 10; ++t) {
    auto f = random_formula(rng, 3, 4);
    auto art = sat_to_instance(f);
    const std::size_t block = 7;
    for (const auto& M : art.instance.matrices) {
      REQUIRE(M.dim() == 4 * block);
      for (std::size_t c = 0; c < M.dim(); ++c) {
        Rational sum = 0;
        for (std::size_t r = 0; r < M.dim(); ++r) {
          CHECK((M(r, c) == 0 || M(r, c) == 1));
          if (M(r, c) != 0)
            CHECK(r / block == c / block);
          sum += M(r, c);
        }
        CHECK(sum == 1);
      }
    }
    auto right = sat_to_instance(f, true);
    for (std::size_t l = 0; l < 2; ++l)
      CHECK(right.instance.matrices[l] == transpose(art.instance.matrices[l]));
  }
}

TEST_CASE("single clause reduction") {
  CnfFormula f;
  f.num_vars = 3;
  f.clauses = {{1, 2, 3}};
  auto art = sat_to_instance(f);
  CHECK(art.instance.n == 7);
  CHECK(art.instance.K == 3);
  CHECK(dpll(f).has_value());
  CHECK(solve(art.instance).value == 1);
  CHECK(art.threshold == 1);
}

TEST_CASE("unsatisfiable 8-clause formula") {
  auto f = all_sign_patterns();
  auto art = sat_to_instance(f);
  auto r = solve(art.instance);
  CHECK(r.value < 8);
  CHECK(r.value == 7);
  CHECK(solve(sat_to_instance(f, true).instance).value == 7);
}

TEST_CASE("objective of any sequence counts satisfied clauses") {
  SplitMix64 rng(9);
  for (int t = 0; t < 8; ++t) {
    auto f = random_formula(rng, 3, 5);
    for (bool right : {false, true}) {
      auto art = sat_to_instance(f, right);
      for (std::uint64_t bits = 0; bits < 8; ++bits) {
        std::vector<bool> assignment{bool(bits & 1), bool(bits & 2), bool(bits & 4)};
        auto seq = art.sequence_of(assignment);
        CHECK(art.assignment_of(seq) == assignment);
        auto x = apply_sequence(art.instance, seq);
        CHECK(evaluate_objective(art.instance.objective, x) == satisfied_clauses(f, assignment));
      }
    }
  }
}

TEST_CASE("k-mortality") {
  Matrix<Rational> N{{0, 1}, {0, 0}};
  CHECK(check_k_mortal({N}, 2));
  CHECK_FALSE(check_k_mortal({N}, 1));
  CHECK_FALSE(check_k_mortal({Matrix<Rational>::identity(2)}, 5));
  CHECK(check_k_mortal({N, Matrix<Rational>{{0, 0}, {1, 0}}}, 2));
  CHECK_THROWS_AS(check_k_mortal({Matrix<Rational>{{1, -1}, {0, 1}}}, 2), InvalidArgument);
}

TEST_CASE("JSR lower bound") {
  for (std::size_t k : {1u, 4u, 9u})
    CHECK(jsr_lower_bound<Rational>({Matrix<Rational>{{2, 0}, {0, 2}}}, k, P{1, 0}, NormKind::l2) ==
          doctest::Approx(2.0).epsilon(1e-12));
  CHECK(jsr_lower_bound<Rational>({Matrix<Rational>{{0, -1}, {1, 0}}}, 6, P{0, 1}, NormKind::l2) ==
        doctest::Approx(1.0).epsilon(1e-12));

  // Example 1 pair with a = (2,1)/sqrt(5).
  std::vector<Matrix<double>> fib{Matrix<double>{{1, 1}, {1, 0}}, Matrix<double>{{1, 1}, {0, 1}}};
  Vector<double> a{2 / std::sqrt(5.0), 1 / std::sqrt(5.0)};
  Instance<Rational> ex;
  ex.n = 2;
  ex.K = 8;
  ex.matrices = {Matrix<Rational>{{1, 1}, {1, 0}}, Matrix<Rational>{{1, 1}, {0, 1}}};
  ex.a = {2, 1};
  ex.objective = Objective<Rational>::l2sq();
  double brute = std::sqrt(brute_force(ex).value.get_d() / 5.0);
  CHECK(jsr_lower_bound(fib, 8, a, NormKind::l2) == doctest::Approx(std::pow(brute, 1.0 / 8)).epsilon(1e-12));

  CHECK_THROWS_AS(jsr_lower_bound<Rational>({Matrix<Rational>::identity(2)}, 2, P{1, 1}, NormKind::l2),
                  InvalidArgument);
  CHECK(parse_norm("inf") == NormKind::linf);
}

TEST_CASE("JSR bound below the largest operator norm over products") {
  // Operator infinity-norm: largest absolute row sum.
  std::vector<Matrix<Rational>> sigma{Matrix<Rational>{{1, 2}, {0, 1}}, Matrix<Rational>{{1, 0}, {-1, 2}}};
  for (std::size_t k = 1; k <= 6; ++k) {
    double bound = jsr_lower_bound(sigma, k, P{1, 0}, NormKind::linf);
    Rational best = 0;
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << k); ++code) {
      Matrix<Rational> prod = Matrix<Rational>::identity(2);
      for (std::size_t t = 0; t < k; ++t)
        prod = mat_mul(sigma[(code >> t) & 1u], prod);
      for (std::size_t r = 0; r < 2; ++r)
        best = std::max(best, Rational(abs(prod(r, 0)) + abs(prod(r, 1))));
    }
    CHECK(bound <= std::pow(best.get_d(), 1.0 / static_cast<double>(k)) * (1 + 1e-12));
  }
}

TEST_CASE("MINLP export structure") {
  Instance<Rational> toy;
  toy.n = 1;
  toy.K = 1;
  toy.matrices = {Matrix<Rational>{{3}}};
  toy.a = {Rational(1, 3)};
  toy.objective = Objective<Rational>::l2sq();
  auto ex = export_minlp(toy);
  CHECK(ex.state_constraints == 1);
  CHECK(ex.assignment_constraints == 1);
  CHECK(ex.binaries == 1);
  CHECK(ex.data.find("# exact: 1/3") != std::string::npos);
  CHECK(ex.model.find("binary") != std::string::npos);

  auto fib = std::get<Instance<Rational>>(load_instance(SWITCHOPT_FIXTURES "/example1.json"));
  auto e1 = export_minlp(fib);
  CHECK(e1.state_constraints == 16);
  CHECK(e1.assignment_constraints == 8);
  CHECK(e1.binaries == 16);
  CHECK(export_minlp(fib).data == e1.data);

  toy.objective = Objective<Rational>::l1();
  CHECK_THROWS_AS(export_minlp(toy), InvalidArgument);
}

TEST_CASE("MINLP substitution on Example 1") {
  auto fib = std::get<Instance<Rational>>(load_instance(SWITCHOPT_FIXTURES "/example1.json"));
  auto r = solve(fib);
  std::vector<P> traj{fib.a};
  for (auto l : r.sequence)
    traj.push_back(mat_vec(fib.matrices[l], traj.back()));
  auto ex = export_minlp(fib);
  auto check = oracle::substitute_minlp<Rational>(ex.model, ex.data, r.sequence, traj, 0);
  CHECK(check.constraints_hold);
  CHECK(check.exact_objective == r.value);
  // A wrong trajectory is caught.
  traj[3][0] += 1;
  CHECK_FALSE(oracle::substitute_minlp<Rational>(ex.model, ex.data, r.sequence, traj, 0).constraints_hold);
}
