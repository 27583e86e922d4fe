#include <benchmark/benchmark.h>

#include "wavelet_landau/cascade.hpp"
#include "wavelet_landau/closed_form.hpp"
#include "wavelet_landau/complex_erf.hpp"
#include "wavelet_landau/inverse_map.hpp"
#include "wavelet_landau/landau.hpp"
#include "wavelet_landau/zak.hpp"

using namespace wavelet_landau;

static void BM_Cerf(benchmark::State& state) {
  // trigonometric-series regime, the dominant cost of the closed forms
  const cd z{2.3, 1.7};
  for (auto _ : state) benchmark::DoNotOptimize(cerf(z));
}
BENCHMARK(BM_Cerf);

static void BM_ClosedFormPoint(benchmark::State& state) {
  double x = 1.3;
  for (auto _ : state) {
    benchmark::DoNotOptimize(T2_closed(x, -0.7));
    x = -x;
  }
}
BENCHMARK(BM_ClosedFormPoint);

static void BM_SynthPoint(benchmark::State& state) {
  const LandauOrbital orb{0, build_T(make_filter("haar"), 1), 0, 0};
  for (auto _ : state) benchmark::DoNotOptimize(synth(orb, 1.3, -0.7));
}
BENCHMARK(BM_SynthPoint);

static void BM_ZakTransformGaussian(benchmark::State& state) {
  const LineFunction g = gaussian_line();
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(zak_transform(g, n, n));
  state.SetComplexityN(n);
}
BENCHMARK(BM_ZakTransformGaussian)->Arg(32)->Arg(64)->Arg(128)->Complexity();

static void BM_JCriterion(benchmark::State& state) {
  const KqFunction fld = t_kq_field(make_filter("d4"), 1);
  for (auto _ : state) benchmark::DoNotOptimize(J_criterion(fld, 2));
}
BENCHMARK(BM_JCriterion);

static void BM_OverlapLineGaussian(benchmark::State& state) {
  const LineFunction g = gaussian_line();
  for (auto _ : state) benchmark::DoNotOptimize(overlap_S(g, 1, 1));
}
BENCHMARK(BM_OverlapLineGaussian);

static void BM_OverlapCellGrid(benchmark::State& state) {
  const KqFunction fld = t_kq_field(make_filter("haar"), 1);
  for (auto _ : state) benchmark::DoNotOptimize(overlap_S_kq(fld, 1, 2));
}
BENCHMARK(BM_OverlapCellGrid);

static void BM_ExtractFilter(benchmark::State& state) {
  const KqFunction fld = t_kq_field(make_filter("d6"), 1);
  for (auto _ : state) benchmark::DoNotOptimize(extract_filter(fld, 0.3));
}
BENCHMARK(BM_ExtractFilter);

static void BM_CascadeDepth(benchmark::State& state) {
  const FilterBank d4 = make_filter("d4");
  const int depth = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(scaling_function(d4, depth));
  state.SetComplexityN(1 << depth);
}
BENCHMARK(BM_CascadeDepth)->Arg(8)->Arg(10)->Arg(12)->Complexity();

static void BM_GramSlaterFourSite(benchmark::State& state) {
  const LineFunction T2 = build_T(make_filter("haar"), 1);
  const std::vector<std::pair<int, int>> sites{{0, 0}, {1, 0}, {0, 2}, {1, 2}};
  for (auto _ : state) benchmark::DoNotOptimize(gram_slater(T2, 2, sites));
}
BENCHMARK(BM_GramSlaterFourSite);

static void BM_ComparisonRow(benchmark::State& state) {
  // one closed-vs-quadrature grid row: 5 points, both evaluation routes
  for (auto _ : state)
    benchmark::DoNotOptimize(closed_vs_quadrature_table(5, 3.0));
}
BENCHMARK(BM_ComparisonRow);

BENCHMARK_MAIN();
