#include "switchopt/generate.hpp"

#include "switchopt/random.hpp"

#include <cmath>

namespace switchopt {

GenSpec GenSpec::integer_mode(std::size_t n, std::size_t m, std::size_t K, std::uint64_t seed) {
  GenSpec s;
  s.n = n;
  s.m = m;
  s.K = K;
  s.seed = seed;
  s.integer = true;
  s.matrix_lo = -9;
  s.matrix_hi = 9;
  s.a_lo = 0;
  s.a_hi = 9;
  return s;
}

GenSpec GenSpec::float_mode(std::size_t n, std::size_t m, std::size_t K, std::uint64_t seed) {
  GenSpec s;
  s.n = n;
  s.m = m;
  s.K = K;
  s.seed = seed;
  return s;
}

namespace {

template <Scalar T>
Instance<T> draw(const GenSpec& spec, SplitMix64& rng) {
  auto value = [&](double lo, double hi) -> T {
    if constexpr (is_exact_v<T>)
      return Rational(rng.integer(static_cast<std::int64_t>(lo), static_cast<std::int64_t>(hi)));
    else
      return rng.uniform(lo, hi);
  };
  Instance<T> inst;
  inst.n = spec.n;
  inst.K = spec.K;
  for (std::size_t l = 0; l < spec.m; ++l) {
    Matrix<T> M(spec.n);
    for (std::size_t i = 0; i < spec.n; ++i)
      for (std::size_t j = 0; j < spec.n; ++j)
        M(i, j) = value(spec.matrix_lo, spec.matrix_hi);
    inst.matrices.push_back(std::move(M));
  }
  for (std::size_t i = 0; i < spec.n; ++i)
    inst.a.push_back(value(spec.a_lo, spec.a_hi));
  switch (spec.objective) {
  case ObjectiveKind::linear: {
    Vector<T> c;
    for (std::size_t i = 0; i < spec.n; ++i)
      c.push_back(value(spec.matrix_lo, spec.matrix_hi));
    inst.objective = Objective<T>::linear(std::move(c));
    break;
  }
  case ObjectiveKind::l1: inst.objective = Objective<T>::l1(); break;
  case ObjectiveKind::l2sq: inst.objective = Objective<T>::l2sq(); break;
  case ObjectiveKind::linf: inst.objective = Objective<T>::linf(); break;
  case ObjectiveKind::external: throw InvalidArgument("cannot generate an external objective");
  }
  inst.validate();
  return inst;
}

}  // namespace

AnyInstance gen_random(const GenSpec& spec) {
  if (spec.n == 0 || spec.m == 0)
    throw InvalidArgument("n and m must be positive");
  if (!(spec.matrix_lo <= spec.matrix_hi) || !(spec.a_lo <= spec.a_hi))
    throw InvalidArgument("empty entry range");
  if (spec.integer) {
    for (double v : {spec.matrix_lo, spec.matrix_hi, spec.a_lo, spec.a_hi})
      if (v != std::floor(v) || std::fabs(v) > 1e15)
        throw InvalidArgument("integer mode needs integer range bounds");
  }
  SplitMix64 rng(spec.seed);
  if (spec.integer)
    return draw<Rational>(spec, rng);
  return draw<double>(spec, rng);
}

}  // namespace switchopt
