#include <benchmark/benchmark.h>

#include "revform/constructions.hpp"
#include "revform/cyclic.hpp"
#include "revform/encounter.hpp"
#include "revform/oracle.hpp"
#include "revform/prover.hpp"

using namespace revform;

static void BM_EncounterGdk(benchmark::State& state) {
    const int k = static_cast<int>(state.range(0));
    Word w = gdk(square_free_stream(16), k);
    Formula f = make_phi(3 * k);
    for (auto _ : state) benchmark::DoNotOptimize(avoids(w, f));
    state.SetLabel("|w|=" + std::to_string(w.size()));
}
BENCHMARK(BM_EncounterGdk)->Arg(1)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

static void BM_EncounterSquareFree(benchmark::State& state) {
    Word w = square_free_stream(static_cast<std::size_t>(state.range(0)));
    Formula f = parse_formula("x x");
    for (auto _ : state) benchmark::DoNotOptimize(avoids(w, f));
}
BENCHMARK(BM_EncounterSquareFree)->Arg(100)->Arg(400)->Arg(1600)->Unit(benchmark::kMillisecond);

static void BM_EncounterVsOracle(benchmark::State& state) {
    Word w = Word::from_string("0120210121");
    Formula f = make_phi(2);
    if (state.range(0) == 0)
        for (auto _ : state) benchmark::DoNotOptimize(encounters(w, f));
    else
        for (auto _ : state) benchmark::DoNotOptimize(oracle_encounters(w, f));
}
BENCHMARK(BM_EncounterVsOracle)->Arg(0)->Arg(1);

static void BM_BadFactorRho(benchmark::State& state) {
    ExponentWord w = ExponentWord::from_digits(rho_prefix(static_cast<unsigned>(state.range(0))), 2);
    for (auto _ : state) benchmark::DoNotOptimize(find_bad_factor(w, 2, 5));
}
BENCHMARK(BM_BadFactorRho)->Arg(7)->Arg(9)->Arg(11)->Unit(benchmark::kMicrosecond);

static void BM_ProvePhi1(benchmark::State& state) {
    SearchOptions o;
    o.incremental = state.range(0) != 0;
    for (auto _ : state) benchmark::DoNotOptimize(prove_unavoidable(make_phi(1), 3, {1000, 1000000}, o));
}
BENCHMARK(BM_ProvePhi1)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

static void BM_CensusPhi1(benchmark::State& state) {
    const auto len = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(census(make_phi(1), 4, len));
}
BENCHMARK(BM_CensusPhi1)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);

static void BM_Cyclic3Scan(benchmark::State& state) {
    ExponentWord ones(std::vector<int>(40, 1), 3);
    const int k = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(cyclic3_scan(k, ones, 40));
}
BENCHMARK(BM_Cyclic3Scan)->DenseRange(1, 8);

BENCHMARK_MAIN();
