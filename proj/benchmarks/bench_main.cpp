#include <benchmark/benchmark.h>

#include "hgm/charsums.hpp"
#include "hgm/family.hpp"
#include "hgm/hgm_sums.hpp"
#include "hgm/zeta.hpp"

namespace {

using namespace hgm;

// Full table of g(j/(q-1)) on a fresh field each iteration.
void BM_GaussTable(benchmark::State& state) {
  const int p = static_cast<int>(state.range(0));
  const int r = static_cast<int>(state.range(1));
  for (auto _ : state) {
    const FieldCtx F = build_field(p, r);
    benchmark::DoNotOptimize(gauss_table(F).at_index(1));
  }
}
BENCHMARK(BM_GaussTable)->Args({13, 1})->Args({7, 2})->Args({3, 5})->Args({101, 1})->Args({2, 10})->Unit(benchmark::kMicrosecond);

void BM_HSum(benchmark::State& state) {
  const FieldCtx F = build_field(static_cast<int>(state.range(0)), 1);
  const HgmParams P({ParamPoint(1, 4), ParamPoint(3, 4), ParamPoint(0, 1)},
                    {ParamPoint(1, 2), ParamPoint(1, 2), ParamPoint(1, 3)});
  gauss_table(F);
  for (auto _ : state) benchmark::DoNotOptimize(h_sum(F, P, F.from_int(5)));
}
BENCHMARK(BM_HSum)->Arg(13)->Arg(37)->Arg(109)->Unit(benchmark::kMicrosecond);

void BM_PointSum(benchmark::State& state) {
  const FieldCtx F = build_field(static_cast<int>(state.range(0)), 1);
  const HgmParams P({ParamPoint(1, 4), ParamPoint(0, 1)}, {ParamPoint(3, 4), ParamPoint(1, 2)});
  for (auto _ : state) benchmark::DoNotOptimize(hgm_point_sum(F, P, F.from_int(2)));
}
BENCHMARK(BM_PointSum)->Arg(13)->Arg(109)->Arg(1009)->Unit(benchmark::kMicrosecond);

void BM_CountX(benchmark::State& state) {
  const FieldCtx F = build_field(static_cast<int>(state.range(0)), 1);
  const auto spec = CoverSpec::make({1, 3, 6}, {3, 7, 18}, 12);
  for (auto _ : state) benchmark::DoNotOptimize(count_X(F, spec, F.from_int(2)));
}
BENCHMARK(BM_CountX)->Arg(13)->Arg(37)->Arg(61)->Unit(benchmark::kMillisecond);

void BM_CountXDirect(benchmark::State& state) {
  const FieldCtx F = build_field(static_cast<int>(state.range(0)), 1);
  const auto spec = CoverSpec::make({1, 3, 6}, {3, 7, 18}, 12);
  for (auto _ : state) benchmark::DoNotOptimize(count_X_direct(F, spec, F.from_int(2)));
}
BENCHMARK(BM_CountXDirect)->Arg(13)->Arg(37)->Unit(benchmark::kMillisecond);

void BM_LPolynomial(benchmark::State& state) {
  const HgmParams P({ParamPoint(1, 4), ParamPoint(0, 1)}, {ParamPoint(3, 4), ParamPoint(1, 2)});
  for (auto _ : state) benchmark::DoNotOptimize(l_polynomial(state.range(0), P, Rational(2), 4));
}
BENCHMARK(BM_LPolynomial)->Arg(5)->Arg(13)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
