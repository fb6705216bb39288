#include <benchmark/benchmark.h>

#include "jsperfect/exactmath.hpp"
#include "jsperfect/pell.hpp"
#include "jsperfect/residues.hpp"
#include "jsperfect/rules.hpp"
#include "jsperfect/sieve_range.hpp"

using namespace jsp;

static void BM_SieveE1(benchmark::State& st) {
    SieveRange rg;
    rg.e = 1;
    rg.w_min = 1;
    rg.w_max = st.range(0);
    SieveOptions opt;
    opt.threads = 1;
    long points = 0;
    for (auto _ : st) {
        auto s = sieve_range(rg, opt, [](const Report&) {});
        points = s.points;
    }
    st.counters["points/s"] = benchmark::Counter(static_cast<double>(points), benchmark::Counter::kIsIterationInvariantRate);
}
BENCHMARK(BM_SieveE1)->Arg(200)->Arg(800)->Unit(benchmark::kMillisecond);

static void BM_RunRulesFull(benchmark::State& st) {
    JohnsonParams p{2 * st.range(0) + 7, st.range(0), 1};
    for (auto _ : st) benchmark::DoNotOptimize(run_rules(p));
}
BENCHMARK(BM_RunRulesFull)->Arg(100)->Arg(2000);

static void BM_ResidueTables(benchmark::State& st) {
    for (auto _ : st) benchmark::DoNotOptimize(residue_tables_1perfect());
}
BENCHMARK(BM_ResidueTables)->Unit(benchmark::kMillisecond);

static void BM_Factorize(benchmark::State& st) {
    // product of two primes just above 10^9, past trial division
    ExactInt x = ExactInt("1000000007") * ExactInt("1000000009");
    for (auto _ : st) benchmark::DoNotOptimize(factorize(x));
}
BENCHMARK(BM_Factorize)->Unit(benchmark::kMicrosecond);

static void BM_PellExclusion(benchmark::State& st) {
    ExactInt limit("2500000000000000");
    for (auto _ : st) benchmark::DoNotOptimize(exclusion_scan(limit));
}
BENCHMARK(BM_PellExclusion)->Unit(benchmark::kMicrosecond);
BENCHMARK_MAIN();
