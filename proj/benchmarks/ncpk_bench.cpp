#include <benchmark/benchmark.h>

#include "ncpk/formulas.hpp"
#include "ncpk/geometry.hpp"
#include "ncpk/hurwitz.hpp"
#include "ncpk/nc.hpp"
#include "ncpk/nc_poset.hpp"
#include "ncpk/paths.hpp"

using namespace ncpk;

static void BM_EnumerateNC(benchmark::State& st) {
  KParams p(static_cast<int>(st.range(0)), static_cast<int>(st.range(1)));
  for (auto _ : st) benchmark::DoNotOptimize(enumerate_nc(p).size());
}
BENCHMARK(BM_EnumerateNC)->Args({1, 6})->Args({2, 4})->Args({3, 4})->Unit(benchmark::kMillisecond);

static void BM_BuildPoset(benchmark::State& st) {
  KParams p(static_cast<int>(st.range(0)), static_cast<int>(st.range(1)));
  for (auto _ : st) benchmark::DoNotOptimize(build_poset(p).size());
}
BENCHMARK(BM_BuildPoset)->Args({1, 6})->Args({2, 4})->Args({3, 4})->Unit(benchmark::kMillisecond);

static void BM_MobiusRecursion(benchmark::State& st) {
  auto H = build_poset(KParams(2, 4));
  for (auto _ : st) benchmark::DoNotOptimize(brute_mobius(H));
}
BENCHMARK(BM_MobiusRecursion)->Unit(benchmark::kMillisecond);

static void BM_HurwitzOrbit(benchmark::State& st) {
  KParams p(static_cast<int>(st.range(0)), static_cast<int>(st.range(1)));
  auto f = cambrian_bottom_factorization(p);
  for (auto _ : st) benchmark::DoNotOptimize(hurwitz_orbit_size(f));
}
BENCHMARK(BM_HurwitzOrbit)->Args({1, 6})->Args({2, 4})->Args({3, 3})->Unit(benchmark::kMillisecond);

static void BM_CommutationClasses(benchmark::State& st) {
  KParams p(static_cast<int>(st.range(0)), static_cast<int>(st.range(1)));
  for (auto _ : st) benchmark::DoNotOptimize(commutation_classes(p).size());
}
BENCHMARK(BM_CommutationClasses)->Args({1, 5})->Args({2, 4})->Unit(benchmark::kMillisecond);

static void BM_BuildCambrian(benchmark::State& st) {
  KParams p(static_cast<int>(st.range(0)), static_cast<int>(st.range(1)));
  for (auto _ : st) benchmark::DoNotOptimize(build_cambrian(p).classes.size());
}
BENCHMARK(BM_BuildCambrian)->Args({1, 5})->Args({2, 3})->Unit(benchmark::kMillisecond);

static void BM_NcToNn(benchmark::State& st) {
  KParams p(2, 4);
  auto all = enumerate_nc(p);
  for (auto _ : st)
    for (const auto& w : all) benchmark::DoNotOptimize(nc_to_nn(w, p).size());
}
BENCHMARK(BM_NcToNn)->Unit(benchmark::kMillisecond);

static void BM_Determinant(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(determinant_count(static_cast<int>(st.range(0)), 4));
}
BENCHMARK(BM_Determinant)->Arg(8)->Arg(20);

BENCHMARK_MAIN();
