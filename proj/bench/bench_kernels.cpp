// Serial reference vs OpenMP kernels.
#include <benchmark/benchmark.h>

#include "braidforge/coherence.hpp"
#include "braidforge/examples.hpp"

using namespace braidforge;

namespace {

const examples::Example& sf2()
{
    static const examples::Example e = examples::sf_example(2);
    return e;
}

void BM_braiding_to_mor(benchmark::State& st)
{
    const auto& e = sf2();
    const GObject& h = e.generators[2];
    const Wiring w = e.category.braiding_wiring(h, h);
    const Exec ex = st.range(0) ? Exec::Parallel : Exec::Serial;
    for (auto _ : st)
        benchmark::DoNotOptimize(w.to_mor(ex));
}
BENCHMARK(BM_braiding_to_mor)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_pentagon_suite(benchmark::State& st)
{
    const auto e = examples::sf_example(1);
    SuiteOptions o;
    o.exec = st.range(0) ? Exec::Parallel : Exec::Serial;
    const GeneratorSet g(e.generators);
    for (auto _ : st)
        benchmark::DoNotOptimize(pentagon_suite(e.category, g, o));
}
BENCHMARK(BM_pentagon_suite)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
