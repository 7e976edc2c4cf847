#include <benchmark/benchmark.h>

#include <random>

#include "quatsamp/bvp.hpp"
#include "quatsamp/generators.hpp"
#include "quatsamp/qmatrix.hpp"
#include "quatsamp/qpoly.hpp"

using namespace quatsamp;

static void BM_QuaternionMultiply(benchmark::State& state) {
  std::mt19937_64 rng(7);
  const Quaternion a = random_quaternion(rng);
  Quaternion b = random_quaternion(rng);
  for (auto _ : state) {
    b = a * b;
    benchmark::DoNotOptimize(b);
  }
}
BENCHMARK(BM_QuaternionMultiply);

static void BM_BuildPhi(benchmark::State& state) {
  std::mt19937_64 rng(7);
  const BvpSpec spec = random_normal_spec(rng, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_phi(spec));
  }
}
BENCHMARK(BM_BuildPhi)->Arg(8)->Arg(32)->Arg(64);

static void BM_PolynomialZeros(benchmark::State& state) {
  std::mt19937_64 rng(7);
  std::vector<Quaternion> c;
  for (long m = 0; m <= state.range(0); ++m)
    c.push_back(random_nonzero_quaternion(rng));
  const QPoly p(std::move(c));
  for (auto _ : state) {
    benchmark::DoNotOptimize(zeros(p));
  }
}
BENCHMARK(BM_PolynomialZeros)->Arg(4)->Arg(8)->Arg(12);

static void BM_RightEigen(benchmark::State& state) {
  std::mt19937_64 rng(7);
  const QMatrix A = random_qmatrix(rng, static_cast<int>(state.range(0)),
                                   static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(right_eigen(A));
  }
}
BENCHMARK(BM_RightEigen)->Arg(4)->Arg(8)->Arg(16);

static void BM_SamplePointsMethod2(benchmark::State& state) {
  std::mt19937_64 rng(7);
  const BvpSpec spec = random_normal_spec(rng, static_cast<int>(state.range(0)));
  const Quaternion s = random_nonzero_quaternion(rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(sample_points_method2(spec, s));
  }
}
BENCHMARK(BM_SamplePointsMethod2)->Arg(4)->Arg(8);

BENCHMARK_MAIN();
