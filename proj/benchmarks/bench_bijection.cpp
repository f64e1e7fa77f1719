#include <benchmark/benchmark.h>

#include "rcbij/energy.hpp"
#include "rcbij/verify.hpp"

using namespace rcbij;

namespace {

struct Case {
    AffineType t;
    std::vector<Factor> factors;
};

// indexed by state.range(0)
const std::vector<Case>& cases() {
    static const std::vector<Case> c{
        {{Family::A1, 3}, {{1, 1}, {2, 1}, {1, 2}}},
        {{Family::D1, 4}, {{4, 1}, {2, 2}}},
        {{Family::B1, 3}, {{1, 1}, {3, 1}, {1, 1}}},
        {{Family::C1, 2}, {{1, 1}, {2, 1}, {1, 1}}},
        {{Family::A2odd, 3}, {{1, 1}, {2, 1}}},
    };
    return c;
}

void label(benchmark::State& state, const Case& c) {
    state.SetLabel(instance_name({c.t, c.factors, std::nullopt}));
}

void BM_EnumerateHighest(benchmark::State& state) {
    const Case& c = cases()[static_cast<std::size_t>(state.range(0))];
    enumerate_highest(c.t, c.factors);  // warm the factor caches
    std::size_t n = 0;
    for (auto _ : state) {
        auto paths = enumerate_highest(c.t, c.factors);
        n = paths.size();
        benchmark::DoNotOptimize(paths.data());
    }
    state.counters["paths"] = static_cast<double>(n);
    label(state, c);
}

void BM_Phi(benchmark::State& state) {
    const Case& c = cases()[static_cast<std::size_t>(state.range(0))];
    auto paths = enumerate_highest(c.t, c.factors);
    for (auto _ : state)
        for (const auto& p : paths) benchmark::DoNotOptimize(phi(c.t, p));
    state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(paths.size()));
    label(state, c);
}

void BM_PhiInv(benchmark::State& state) {
    const Case& c = cases()[static_cast<std::size_t>(state.range(0))];
    std::vector<RC> rcs;
    for (const auto& p : enumerate_highest(c.t, c.factors)) rcs.push_back(phi(c.t, p));
    for (auto _ : state)
        for (const auto& rc : rcs) benchmark::DoNotOptimize(phi_inv(c.t, rc, c.factors));
    state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(rcs.size()));
    label(state, c);
}

void BM_EnumerateRcs(benchmark::State& state) {
    const Case& c = cases()[static_cast<std::size_t>(state.range(0))];
    Mult L = mult_of(c.factors);
    auto ws = candidate_weights(c.t, L);
    for (auto _ : state)
        for (const auto& w : ws) benchmark::DoNotOptimize(enumerate_rcs(c.t, L, w));
    label(state, c);
}

void BM_Energy(benchmark::State& state) {
    const Case& c = cases()[static_cast<std::size_t>(state.range(0))];
    auto paths = enumerate_highest(c.t, c.factors);
    for (const auto& p : paths) energy(c.t, p);  // local energy tables are cached
    for (auto _ : state)
        for (const auto& p : paths) benchmark::DoNotOptimize(energy(c.t, p));
    state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(paths.size()));
    label(state, c);
}

}  // namespace

BENCHMARK(BM_EnumerateHighest)->DenseRange(0, 4);
BENCHMARK(BM_Phi)->DenseRange(0, 4);
BENCHMARK(BM_PhiInv)->DenseRange(0, 4);
BENCHMARK(BM_EnumerateRcs)->DenseRange(0, 4);
BENCHMARK(BM_Energy)->DenseRange(0, 4)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
