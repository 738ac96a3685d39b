#include <benchmark/benchmark.h>

#include "klreg/klreg.hpp"

using namespace klreg;

namespace {

const Permutation kIntroV{5, 8, 9, 10, 1, 2, 11, 3, 4, 6, 7};
const Permutation kIntroW{1, 4, 5, 8, 2, 3, 9, 6, 10, 11, 7};
const Permutation kBigV{6, 11, 12, 13, 14, 15, 1, 16, 2, 3, 4, 5, 7, 8, 9, 10};
const Permutation kBigW{1, 6, 2, 3, 7, 8, 11, 12, 4, 5, 9, 10, 13, 14, 15, 16};

Ladder large_ladder() {
    return Ladder({10, 10, 10, 10, 8, 4, 4, 4, 2, 2}, {2, 2},
                  {{{4, 0}, 3}, {{5, 2}, 4}, {{5, 6}, 3}, {{8, 6}, 4}, {{10, 8}, 2}});
}

void BM_ZipIntro(benchmark::State& s) {
    for (auto _ : s) benchmark::DoNotOptimize(zip(kIntroV, kIntroW).degree);
}
BENCHMARK(BM_ZipIntro);

void BM_ZipS16(benchmark::State& s) {
    for (auto _ : s) benchmark::DoNotOptimize(zip(kBigV, kBigW).degree);
}
BENCHMARK(BM_ZipS16);

void BM_RecurrenceIntro(benchmark::State& s) {
    for (auto _ : s) benchmark::DoNotOptimize(groth_degree_recursive(kIntroV, kIntroW));
}
BENCHMARK(BM_RecurrenceIntro);

void BM_ClosureIntro(benchmark::State& s) {
    for (auto _ : s) benchmark::DoNotOptimize(closure(kIntroV, kIntroW).max_size);
}
BENCHMARK(BM_ClosureIntro);

// All comparable pairs in S_n, zip only.
void BM_ZipSweep(benchmark::State& s) {
    const auto perms = all_321_avoiding(static_cast<int>(s.range(0)));
    std::vector<std::pair<Permutation, Permutation>> pairs;
    for (const auto& v : perms)
        for (const auto& w : perms)
            if (bruhat_leq(w, v)) pairs.emplace_back(v, w);
    for (auto _ : s)
        for (const auto& [v, w] : pairs) benchmark::DoNotOptimize(groth_degree(v, w));
    s.SetItemsProcessed(static_cast<int64_t>(s.iterations() * pairs.size()));
}
BENCHMARK(BM_ZipSweep)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_LadderAnalyze(benchmark::State& s) {
    const auto L = large_ladder();
    for (auto _ : s) benchmark::DoNotOptimize(analyze_ladder(L).regularity);
}
BENCHMARK(BM_LadderAnalyze);

void BM_LadderGenerators(benchmark::State& s) {
    const Ladder L({5, 5, 5, 5, 2, 2}, {2, 1}, {{{4, 0}, 3}, {{4, 2}, 2}, {{6, 3}, 2}});
    for (auto _ : s) benchmark::DoNotOptimize(ladder_generators(L).size());
}
BENCHMARK(BM_LadderGenerators)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
