#include <benchmark/benchmark.h>

#include "equiblow/pipeline.hpp"

using namespace equiblow;

namespace {

Ideal cyclic(const RingPtr& r) {
    return Ideal(r, {parse_poly("a + b + c + d", r), parse_poly("a*b + b*c + c*d + d*a", r),
                     parse_poly("a*b*c + b*c*d + c*d*a + d*a*b", r), parse_poly("a*b*c*d - 1", r)});
}

void BM_BuchbergerCyclic4(benchmark::State& state) {
    auto r = make_ring({"a", "b", "c", "d"});
    auto ideal = cyclic(r);
    for (auto _ : state) benchmark::DoNotOptimize(buchberger(ideal));
}
BENCHMARK(BM_BuchbergerCyclic4);

void center_scan(benchmark::State& state, Exec exec) {
    std::vector<std::string> names;
    for (int i = 0; i < 10; ++i) names.push_back("x" + std::to_string(i));
    auto r = make_ring(names);
    WeightMatrix w({{1, -1, 2, -2, 1, -1, 0, 0, 3, -3}}, 10);
    Ideal ideal(r, {parse_poly("x0*x1 + x2*x3 + x4*x5", r), parse_poly("x8*x9*x6", r)});
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_blowup_centers(w, ideal, {}, exec));
}
void BM_CenterScanSerial(benchmark::State& s) { center_scan(s, Exec::Serial); }
void BM_CenterScanParallel(benchmark::State& s) { center_scan(s, Exec::Parallel); }
BENCHMARK(BM_CenterScanSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CenterScanParallel)->Unit(benchmark::kMillisecond);

void sampling(benchmark::State& state, Exec exec) {
    auto r = make_ring({"x", "y", "z", "t"});
    auto gb = buchberger(Ideal(r, {parse_poly("x*y*(z - t)", r)}));
    for (auto _ : state) benchmark::DoNotOptimize(sample_points(gb, 200, exec));
}
void BM_SampleSerial(benchmark::State& s) { sampling(s, Exec::Serial); }
void BM_SampleParallel(benchmark::State& s) { sampling(s, Exec::Parallel); }
BENCHMARK(BM_SampleSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SampleParallel)->Unit(benchmark::kMillisecond);

void BM_FullDesingularizationE2(benchmark::State& state) {
    auto r = make_ring({"x", "y", "z"});
    auto m = dcritical_chart(parse_poly("x*y*z", r), WeightMatrix({{1, -1, 0}}, 3));
    for (auto _ : state) benchmark::DoNotOptimize(partial_desingularization(m));
}
BENCHMARK(BM_FullDesingularizationE2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
