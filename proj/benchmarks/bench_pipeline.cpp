#include <benchmark/benchmark.h>

#include <random>

#include "gafunc/charpoly.hpp"
#include "gafunc/function.hpp"
#include "gafunc/matrix.hpp"
#include "gafunc/minpoly.hpp"
#include "gafunc/mv_text.hpp"

using namespace gafunc;

namespace {

const char* const kEx3 =
    "-1 - e3 + e6 - e12 - e13 + e15 - e24 - e25 + e26 - e34 - e35 + e36 - e45 + e56 + e123 + e124 + e126 "
    "+ e134 + e135 + e136 + e146 + e234 - e235 - e236 - e245 - e246 - e256 + e456 - e1236 + e1245 - e1246 "
    "+ e1256 - e1345 - e1346 - e1356 + e1456 - e2346 - e2356 + e2456 + e3456 + e12345 - e12346 + e12356";

Multivector<Rational> random_mv(const Signature& sig, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> value(-3, 3);
  std::vector<Rational> c(sig.algebra_dim());
  for (auto& x : c) x = value(rng);
  return Multivector<Rational>(sig, c);
}

}  // namespace

static void BM_GeometricProduct(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Signature sig(n - n / 2, n / 2);
  const auto a = lift_to_real(random_mv(sig, 1), 50), b = lift_to_real(random_mv(sig, 2), 50);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_GeometricProduct)->DenseRange(2, 6, 2);

static void BM_ExactGeometricProduct(benchmark::State& state) {
  const Signature sig(4, 2);
  const auto a = random_mv(sig, 1), b = random_mv(sig, 2);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_ExactGeometricProduct);

static void BM_MinimalPolyEx3(benchmark::State& state) {
  const auto a = parse_multivector(kEx3, Signature(4, 2));
  for (auto _ : state) benchmark::DoNotOptimize(minimal_poly(a));
}
BENCHMARK(BM_MinimalPolyEx3)->Unit(benchmark::kMillisecond);

static void BM_CharPolyEx3(benchmark::State& state) {
  const auto a = parse_multivector(kEx3, Signature(4, 2));
  for (auto _ : state) benchmark::DoNotOptimize(char_poly(a));
}
BENCHMARK(BM_CharPolyEx3)->Unit(benchmark::kMillisecond);

static void BM_NullSpace(benchmark::State& state) {
  const int rows = static_cast<int>(state.range(0));
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> value(-5, 5);
  std::vector<std::vector<Rational>> vectors(static_cast<std::size_t>(rows), std::vector<Rational>(64));
  for (auto& v : vectors) {
    for (auto& x : v) x = value(rng);
  }
  // one dependent row
  vectors.back() = vectors[0];
  for (auto _ : state) benchmark::DoNotOptimize(null_space(vectors));
}
BENCHMARK(BM_NullSpace)->Arg(4)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);

static void BM_ExpPipeline(benchmark::State& state) {
  const auto a = parse_multivector(kEx3, Signature(4, 2));
  const int digits = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(mv_function(a, FunctionSpec::exp(), Precision(digits), {Method::recursive, nullptr}));
  }
}
BENCHMARK(BM_ExpPipeline)->Arg(16)->Arg(50)->Arg(200)->Unit(benchmark::kMillisecond);

static void BM_ExpPipelineCached(benchmark::State& state) {
  const auto a = parse_multivector(kEx3, Signature(4, 2));
  SpectralCache cache;
  for (auto _ : state) {
    benchmark::DoNotOptimize(mv_function(a, FunctionSpec::sin(), Precision(50), {Method::recursive, &cache}));
  }
}
BENCHMARK(BM_ExpPipelineCached)->Unit(benchmark::kMillisecond);

static void BM_MatrixExp(benchmark::State& state) {
  const auto m = rep_of(parse_multivector(kEx3, Signature(4, 2)));
  for (auto _ : state) benchmark::DoNotOptimize(matrix_function(m, FunctionSpec::exp(), Precision(50)));
}
BENCHMARK(BM_MatrixExp)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
