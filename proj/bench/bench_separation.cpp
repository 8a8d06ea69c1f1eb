#include "switchopt/hull.hpp"
#include "switchopt/random.hpp"

#include <benchmark/benchmark.h>

#include <cmath>

using namespace switchopt;

namespace {

// Points on a perturbed sphere plus interior points, so roughly half are vertices.
std::vector<Vector<double>> cloud(std::size_t dim, std::size_t count, std::uint64_t seed) {
  SplitMix64 rng(seed);
  std::vector<Vector<double>> pts;
  for (std::size_t i = 0; i < count; ++i) {
    Vector<double> p(dim);
    double norm = 0;
    for (auto& v : p) {
      v = rng.uniform(-1, 1);
      norm += v * v;
    }
    double r = (i % 2 == 0 ? 1.0 : 0.5) / std::sqrt(norm);
    for (auto& v : p)
      v *= r;
    pts.push_back(std::move(p));
  }
  return pts;
}

void BM_SeparateSerial(benchmark::State& state) {
  auto pts = cloud(static_cast<std::size_t>(state.range(0)), static_cast<std::size_t>(state.range(1)), 7);
  HullOptions opt;
  for (auto _ : state)
    benchmark::DoNotOptimize(kernels::separate_serial(pts, opt));
}

void BM_SeparateParallel(benchmark::State& state) {
  auto pts = cloud(static_cast<std::size_t>(state.range(0)), static_cast<std::size_t>(state.range(1)), 7);
  HullOptions opt;
  for (auto _ : state)
    benchmark::DoNotOptimize(kernels::separate_parallel(pts, opt));
}

}  // namespace

BENCHMARK(BM_SeparateSerial)->Args({3, 100})->Args({5, 200})->Args({5, 400})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SeparateParallel)->Args({3, 100})->Args({5, 200})->Args({5, 400})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
