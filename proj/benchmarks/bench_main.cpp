#include <benchmark/benchmark.h>

#include <random>

#include "gqu/census.hpp"
#include "gqu/quniform.hpp"

namespace {

gqu::Relation random_relation(const gqu::Universe& u, std::mt19937_64& rng) {
    std::vector<std::pair<int, int>> pairs;
    std::uniform_int_distribution<int> coin(0, 1);
    for (int x = 0; x < u.size; ++x)
        for (int y = 0; y < u.size; ++y)
            if (x == y || coin(rng)) pairs.emplace_back(x, y);
    return gqu::Relation(u, pairs);
}

void BM_Compose(benchmark::State& state) {
    const gqu::Universe u(static_cast<int>(state.range(0)));
    std::mt19937_64 rng(7);
    const gqu::Relation r = random_relation(u, rng);
    const gqu::Relation s = random_relation(u, rng);
    for (auto _ : state) benchmark::DoNotOptimize(gqu::compose(r, s));
}
BENCHMARK(BM_Compose)->Arg(4)->Arg(8)->Arg(16);

void BM_PervinRoundtrip(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto topos = gqu::enumerate_gentopologies(n, true);
    for (auto _ : state)
        for (const auto& mu : topos)
            benchmark::DoNotOptimize(gqu::induced_supratopology(gqu::pervin_base(mu)));
    state.SetItemsProcessed(state.iterations() * static_cast<long>(topos.size()));
}
BENCHMARK(BM_PervinRoundtrip)->Arg(2)->Arg(3);

void BM_DecideSpace(benchmark::State& state) {
    gqu::CensusConfig cfg;
    cfg.n = 2;
    const auto bases = gqu::enumerate_bases(cfg);
    for (auto _ : state)
        for (const auto& b : bases)
            benchmark::DoNotOptimize(gqu::decide_space_properties(b));
    state.SetItemsProcessed(state.iterations() * static_cast<long>(bases.size()));
}
BENCHMARK(BM_DecideSpace);

} // namespace

BENCHMARK_MAIN();
