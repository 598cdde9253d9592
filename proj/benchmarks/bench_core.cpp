#include <toric/additive.hpp>
#include <toric/cox.hpp>
#include <toric/fan.hpp>
#include <toric/linalg.hpp>
#include <toric/lp.hpp>
#include <toric/projectivity.hpp>

#include <benchmark/benchmark.h>

#include <random>

using namespace toric;

namespace {

IntMat random_matrix(std::size_t rows, std::size_t cols, int mag, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> d(-mag, mag);
  IntMat m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = d(rng);
  return m;
}

}  // namespace

static void BM_BuildFamilyFan(benchmark::State& state) {
  const std::size_t n = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(build_paper_fan(n));
}
BENCHMARK(BM_BuildFamilyFan)->Arg(3)->Arg(4)->Arg(5)->Arg(6);

static void BM_ValidateFamilyFan3(benchmark::State& state) {
  Fan f = build_paper_fan(3);
  for (auto _ : state) benchmark::DoNotOptimize(fan_validate(f));
}
BENCHMARK(BM_ValidateFamilyFan3);

static void BM_ProjectivityVerdictFamily3(benchmark::State& state) {
  Fan f = build_paper_fan(3);
  for (auto _ : state) benchmark::DoNotOptimize(is_projective(f));
}
BENCHMARK(BM_ProjectivityVerdictFamily3);

static void BM_SupportSystemFeasibility(benchmark::State& state) {
  LinearSystem sys = build_support_system(build_paper_fan(3));
  for (auto _ : state) benchmark::DoNotOptimize(feasible(sys));
}
BENCHMARK(BM_SupportSystemFeasibility);

static void BM_Hnf(benchmark::State& state) {
  IntMat m = random_matrix(state.range(0), state.range(0) + 2, 9, 42);
  for (auto _ : state) benchmark::DoNotOptimize(hnf(m));
}
BENCHMARK(BM_Hnf)->Arg(4)->Arg(8)->Arg(16);

static void BM_Snf(benchmark::State& state) {
  IntMat m = random_matrix(state.range(0), state.range(0) + 2, 9, 43);
  for (auto _ : state) benchmark::DoNotOptimize(snf(m));
}
BENCHMARK(BM_Snf)->Arg(4)->Arg(8);

static void BM_PrimitiveCollections(benchmark::State& state) {
  Fan f = build_paper_fan(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(primitive_collections(f));
}
BENCHMARK(BM_PrimitiveCollections)->Arg(3)->Arg(5);

static void BM_QuotientMap(benchmark::State& state) {
  Fan f = build_paper_fan(3);
  PointY y{{Rat(1), Rat(2), Rat(3), Rat(5), Rat(7), Rat(11), Rat(13)}};
  for (auto _ : state) benchmark::DoNotOptimize(quotient_map(y, f));
}
BENCHMARK(BM_QuotientMap);

static void BM_OrbitReport(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(ga_orbit_report(3));
}
BENCHMARK(BM_OrbitReport);

BENCHMARK_MAIN();
