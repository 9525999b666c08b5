#include <benchmark/benchmark.h>

#include "ulrich/betti.hpp"
#include "ulrich/rdp_catalog.hpp"
#include "ulrich/ulrich_cycles.hpp"

using namespace ulrich;

namespace {

DualGraph three_arm_star() {
    std::vector<VertexSpec> vs{{"C", -3}};
    std::vector<EdgeSpec> es;
    for (int a = 1; a <= 3; ++a) {
        std::string prev = "C";
        for (int k = 1; k <= 2; ++k) {
            const std::string id = "A" + std::to_string(a) + std::to_string(k);
            vs.push_back({id, -2});
            es.push_back({prev, id, 1});
            prev = id;
        }
    }
    return DualGraph(vs, es);
}

void bm_graph_build(benchmark::State& state) {
    const ADEType t(ADEFamily::E, 8);
    for (auto _ : state) {
        DualGraph g = build_ade(t);
        benchmark::DoNotOptimize(g.fundamental_cycle());
    }
}
BENCHMARK(bm_graph_build);

void bm_rdp_enumeration(benchmark::State& state) {
    DualGraph g = build_ade(ADEType(ADEFamily::E, static_cast<Int>(state.range(0))));
    for (auto _ : state) {
        auto reports = enumerate_rdp(g);
        benchmark::DoNotOptimize(reports.size());
    }
}
BENCHMARK(bm_rdp_enumeration)->DenseRange(6, 8);

void bm_bruteforce_box(benchmark::State& state) {
    DualGraph g = build_ade(ADEType(ADEFamily::E, 8));
    for (auto _ : state) {
        auto res = enumerate_bruteforce(g, 9);
        benchmark::DoNotOptimize(res.reports.size());
    }
}
BENCHMARK(bm_bruteforce_box);

void bm_chain_enumeration(benchmark::State& state) {
    DualGraph g = three_arm_star();
    for (auto _ : state) {
        auto reports = enumerate_chain(g);
        benchmark::DoNotOptimize(reports.size());
    }
}
BENCHMARK(bm_chain_enumeration);

void bm_betti_sequence(benchmark::State& state) {
    const BettiParams p{4, 9};
    for (auto _ : state) {
        auto seq = betti_sequence(p, 64);
        benchmark::DoNotOptimize(seq.back());
    }
}
BENCHMARK(bm_betti_sequence);

} // namespace
