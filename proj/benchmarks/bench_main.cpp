#include <cmath>

#include <benchmark/benchmark.h>

#include <disclab/core_set.hpp>
#include <disclab/legendre.hpp>
#include <disclab/measure.hpp>
#include <disclab/moments.hpp>
#include <disclab/obstacle.hpp>
#include <disclab/oracle.hpp>
#include <disclab/radial.hpp>
#include <disclab/seqspace.hpp>
#include <disclab/transforms.hpp>
#include <disclab/walk.hpp>
#include <disclab/wizard.hpp>

using namespace disclab;

static void BM_CoreSet(benchmark::State& st) {
    auto w = Weight::expDist(ClosedSet::point(0.0));
    for (auto _ : st) benchmark::DoNotOptimize(coreSet(w, static_cast<int>(st.range(0))));
}
BENCHMARK(BM_CoreSet)->Arg(8)->Arg(11)->Arg(14)->Unit(benchmark::kMillisecond);

static void BM_FatCantorCore(benchmark::State& st) {
    auto w = Weight::indicator(ClosedSet::fatCantor(FatCantor()));
    for (auto _ : st) benchmark::DoNotOptimize(coreSet(w, 12));
}
BENCHMARK(BM_FatCantorCore)->Unit(benchmark::kMillisecond);

static void BM_MomentsT1(benchmark::State& st) {
    auto G = RadialWeight::t1(1.0, 1.0);
    for (auto _ : st) benchmark::DoNotOptimize(momentsOfG(G, static_cast<size_t>(st.range(0))));
}
BENCHMARK(BM_MomentsT1)->Arg(100)->Arg(500)->Unit(benchmark::kMillisecond);

static void BM_UpperEnvelope(benchmark::State& st) {
    auto k = admissibleToG(MomentSequence::logPowerFamily(1.0, 2.0, static_cast<size_t>(st.range(0)))).k;
    std::vector<double> xs;
    for (int i = 1; i <= 1000; ++i) xs.push_back(i * 1e-3);
    for (auto _ : st) benchmark::DoNotOptimize(upperEnvelope(k, xs));
}
BENCHMARK(BM_UpperEnvelope)->Arg(100)->Arg(1000)->Unit(benchmark::kMicrosecond);

static void BM_TaylorInner(benchmark::State& st) {
    auto nu = CircleMeasure::dirac(0.0);
    for (auto _ : st)
        benchmark::DoNotOptimize(taylorOf([&](Complex z) { return singularInner(nu, z); }, 512, 0.97));
}
BENCHMARK(BM_TaylorInner)->Unit(benchmark::kMillisecond);

static void BM_RsdClassify(benchmark::State& st) {
    std::vector<Complex> c;
    for (int n = 0; n <= 512; ++n) c.push_back(std::exp(-2.0 * std::sqrt(static_cast<double>(n))));
    TaylorSeries f(c);
    for (auto _ : st) benchmark::DoNotOptimize(rsdClassify(f));
}
BENCHMARK(BM_RsdClassify)->Unit(benchmark::kMicrosecond);

static void BM_IsCyclic(benchmark::State& st) {
    auto w = Weight::expDist(ClosedSet::point(0.0));
    auto nu = CircleMeasure::dirac(kPi);
    for (auto _ : st) benchmark::DoNotOptimize(isCyclic(nu, w, 14, 1e-8));
}
BENCHMARK(BM_IsCyclic)->Unit(benchmark::kMillisecond);

static void BM_Obstacle(benchmark::State& st) {
    auto w = Weight::expDist(ClosedSet::point(0.0));
    auto nu = CircleMeasure::dirac(0.0);
    auto core = coreSet(w, 14);
    for (auto _ : st) benchmark::DoNotOptimize(buildObstacleSequence(nu, w, static_cast<int>(st.range(0)), core));
}
BENCHMARK(BM_Obstacle)->Arg(6)->Arg(10)->Arg(14)->Unit(benchmark::kMillisecond);

static void BM_HatWalks(benchmark::State& st) {
    HatDomain hat(Profile::power(2.0, 1.0), 0.0, 2.0);
    WalkOptions opt;
    opt.walks = static_cast<size_t>(st.range(0));
    for (auto _ : st) benchmark::DoNotOptimize(runWalks(hat, {1.0, 0.5}, opt));
    st.SetItemsProcessed(static_cast<int64_t>(st.iterations() * st.range(0)));
}
BENCHMARK(BM_HatWalks)->Arg(10000)->Unit(benchmark::kMillisecond);

static void BM_BuildProfile(benchmark::State& st) {
    auto F = Majorant::inversePower(1.0, 1.0);
    for (auto _ : st) benchmark::DoNotOptimize(buildProfile(F, 0.5));
}
BENCHMARK(BM_BuildProfile)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
