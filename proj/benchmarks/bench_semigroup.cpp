#include <benchmark/benchmark.h>

#include <memory>

#include "ulrich/semigroup_ulrich.hpp"

using namespace ulrich;

namespace {

void bm_semigroup_construction(benchmark::State& state) {
    for (auto _ : state) {
        NumericalSemigroup H({8, 15});
        benchmark::DoNotOptimize(H.frobenius());
    }
}
BENCHMARK(bm_semigroup_construction);

void bm_gorenstein_enumeration(benchmark::State& state) {
    auto H = std::make_shared<const NumericalSemigroup>(std::vector<Int>{8, 15});
    for (auto _ : state) {
        auto records = enumerate_gorenstein(H);
        benchmark::DoNotOptimize(records.size());
    }
}
BENCHMARK(bm_gorenstein_enumeration);

void bm_bruteforce_enumeration(benchmark::State& state) {
    auto H = std::make_shared<const NumericalSemigroup>(std::vector<Int>{4, 6, 4 * state.range(0) - 1});
    EnumerationLimits limits;
    limits.candidate_cap = 150;
    for (auto _ : state) {
        auto records = enumerate_bruteforce(H, limits);
        benchmark::DoNotOptimize(records.size());
    }
}
BENCHMARK(bm_bruteforce_enumeration)->DenseRange(2, 4);

void bm_ulrich_test(benchmark::State& state) {
    auto H = std::make_shared<const NumericalSemigroup>(std::vector<Int>{4, 6, 15});
    MonomialIdeal I(H, {4, 6});
    for (auto _ : state) {
        benchmark::DoNotOptimize(is_ulrich(I));
    }
}
BENCHMARK(bm_ulrich_test);

} // namespace

BENCHMARK_MAIN();
