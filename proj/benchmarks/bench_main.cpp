#include <benchmark/benchmark.h>

#include <random>

#include "mdsconv/constructions.hpp"
#include "mdsconv/distance.hpp"

using namespace mdsconv;

namespace {

void field_mul(benchmark::State& state, Field f) {
  std::mt19937_64 rng(1);
  const std::uint64_t q = f.order_u64().value_or(~std::uint64_t{0});
  Element a = f.from_index(1 + rng() % (q - 1)), b = f.from_index(1 + rng() % (q - 1));
  for (auto _ : state) {
    a = a * b + b;
    benchmark::DoNotOptimize(a);
  }
}
BENCHMARK_CAPTURE(field_mul, gf59, Field::create(59));
BENCHMARK_CAPTURE(field_mul, gf2_16, Field::create(2, 16));
BENCHMARK_CAPTURE(field_mul, gf3_5, Field::create(3, 5));

void field_mul_gf2_256(benchmark::State& state) {
  const Field f = Field::create(2, 256, std::nullopt, {});
  Element a = f.from_coefficients(std::vector<std::uint64_t>{0, 1, 1});
  const Element b = f.from_coefficients(std::vector<std::uint64_t>{1, 0, 1, 1});
  for (auto _ : state) {
    a = a * b + b;
    benchmark::DoNotOptimize(a);
  }
}
BENCHMARK(field_mul_gf2_256);

void superregular_cauchy(benchmark::State& state) {
  const Matrix m = cauchy_matrix(static_cast<std::uint64_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(is_superregular(m).holds);
}
BENCHMARK(superregular_cauchy)->Arg(11)->Arg(19)->Unit(benchmark::kMillisecond);

void trellis_cauchy(benchmark::State& state, CodeParams params) {
  const ConvCode code = construct(Family::Cauchy, params).code;
  for (auto _ : state) benchmark::DoNotOptimize(free_distance_trellis(code));
}
BENCHMARK_CAPTURE(trellis_cauchy, n3_k1_d1, CodeParams{3, 1, 1})->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(trellis_cauchy, n7_k1_d2, CodeParams{7, 1, 2})->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(trellis_cauchy, n6_k2_d3, CodeParams{6, 2, 3})->Unit(benchmark::kMillisecond);

void bruteforce_cauchy(benchmark::State& state) {
  const ConvCode code = construct(Family::Cauchy, {3, 2, 1}).code;
  for (auto _ : state) benchmark::DoNotOptimize(free_distance_bruteforce(code, 4).weight);
}
BENCHMARK(bruteforce_cauchy)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
