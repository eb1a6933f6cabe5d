// Serial reference against the OpenMP kernel for each parallel routine.

#include "qreal/identity_lab.hpp"
#include "qreal/qbinomial.hpp"
#include "qreal/qcore.hpp"
#include "qreal/qseries.hpp"
#include "qreal/snake.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace qreal;

const RealSpec kSilver = parse_real_spec("[2;(2)]");

void BM_BinomialRowSeries_Serial(benchmark::State& state)
{
    for (auto _ : state) {
        benchmark::DoNotOptimize(binomial_row_series_serial(kSilver, 8, RowKind::falling, state.range(0)));
    }
}

void BM_BinomialRowSeries_Parallel(benchmark::State& state)
{
    for (auto _ : state) {
        benchmark::DoNotOptimize(binomial_row_series(kSilver, 8, RowKind::falling, state.range(0)));
    }
}

void BM_BSeries_Serial(benchmark::State& state)
{
    for (auto _ : state) benchmark::DoNotOptimize(B_series_serial(kSilver, 8, state.range(0)));
}

void BM_BSeries_Parallel(benchmark::State& state)
{
    for (auto _ : state) benchmark::DoNotOptimize(B_series(kSilver, 8, state.range(0)));
}

SnakeGraph bench_graph() { return SnakeGraph::from_cf(cf_expand(make_rational(52, 23))); }

void BM_TupleHistogram_Serial(benchmark::State& state)
{
    const auto g = bench_graph();
    for (auto _ : state) benchmark::DoNotOptimize(tuple_histogram_serial(g, state.range(0)));
}

void BM_TupleHistogram_Parallel(benchmark::State& state)
{
    const auto g = bench_graph();
    for (auto _ : state) benchmark::DoNotOptimize(tuple_histogram(g, state.range(0)));
}

void BM_Suite(benchmark::State& state)
{
    SuiteConfig config;
    config.filter = "PASCAL,ALT_FORMS,BRACE_PROPS";
    config.trials = 10;
    config.jobs = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(run_suite(config));
}

} // namespace

BENCHMARK(BM_BinomialRowSeries_Serial)->Arg(24)->Arg(48)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BinomialRowSeries_Parallel)->Arg(24)->Arg(48)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BSeries_Serial)->Arg(32)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BSeries_Parallel)->Arg(32)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TupleHistogram_Serial)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TupleHistogram_Parallel)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Suite)->Arg(1)->Arg(0)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
