#include <benchmark/benchmark.h>

#include <vector>

#include "herbrand/cohomology.hpp"
#include "herbrand/depth.hpp"
#include "herbrand/laurent.hpp"

using namespace herbrand;

static void BM_BuildPsiPhi(benchmark::State& state) {
  const auto profile = catalog::cyclotomic(3, static_cast<std::int64_t>(state.range(0)));
  for (auto _ : state) {
    auto psi = build_psi(profile);
    benchmark::DoNotOptimize(invert(psi));
  }
}
BENCHMARK(BM_BuildPsiPhi)->Arg(1)->Arg(3)->Arg(6);

static void BM_TowerCompose(benchmark::State& state) {
  std::vector<RamificationProfile> steps;
  for (std::int64_t i = 0; i < state.range(0); ++i) steps.push_back(catalog::artin_schreier(2, 2 * i + 1));
  for (auto _ : state) benchmark::DoNotOptimize(HerbrandData::tower(steps).psi());
}
BENCHMARK(BM_TowerCompose)->Arg(2)->Arg(8)->Arg(32);

static void BM_DepthLlc(benchmark::State& state) {
  const HerbrandData ext(catalog::cyclotomic(2, 3));
  const Rational d(7, 3);
  for (auto _ : state) benchmark::DoNotOptimize(depth_llc({d, 1}, ext));
}
BENCHMARK(BM_DepthLlc);

static void BM_EnumerateH1(benchmark::State& state) {
  const auto m = GGroup::trivial_action(FiniteGroup::dihedral4(), FiniteGroup::symmetric3());
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_h1(m).size());
}
BENCHMARK(BM_EnumerateH1);

static void BM_ShapiroS3(benchmark::State& state) {
  const auto s3 = FiniteGroup::symmetric3();
  const std::vector<Elem> trivial{0};
  const auto h = make_subgroup(s3, trivial, "1");
  const auto m = GGroup::trivial_action(h.group, FiniteGroup::cyclic(2));
  for (auto _ : state) benchmark::DoNotOptimize(shapiro_check(s3, h, m).passed);
}
BENCHMARK(BM_ShapiroS3);

static void BM_SeriesApply(benchmark::State& state) {
  const auto precision = state.range(0);
  const auto sigma = as_automorphism(3, 2, precision);
  std::vector<TruncatedLaurentSeries::Coeff> c(static_cast<std::size_t>(precision), 1);
  const TruncatedLaurentSeries x(3, 1, c, precision + 1);
  (void)sigma.apply(x);  // warm the power cache
  for (auto _ : state) benchmark::DoNotOptimize(sigma.apply(x));
}
BENCHMARK(BM_SeriesApply)->Arg(64)->Arg(256);

static void BM_AsAutomorphism(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(as_automorphism(5, 3, state.range(0)));
}
BENCHMARK(BM_AsAutomorphism)->Arg(64)->Arg(256);

BENCHMARK_MAIN();
