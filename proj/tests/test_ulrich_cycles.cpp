#include <doctest.h>

#include <set>

#include "ulrich/errors.hpp"
#include "ulrich/rdp_catalog.hpp"
#include "ulrich/ulrich_cycles.hpp"

using namespace ulrich;

namespace {

DualGraph star(Int center_self, Int arms, Int arm_len) {
    std::vector<VertexSpec> vs{{"C", center_self}};
    std::vector<EdgeSpec> es;
    for (Int a = 1; a <= arms; ++a) {
        std::string prev = "C";
        for (Int k = 1; k <= arm_len; ++k) {
            const std::string id = "A" + std::to_string(a) + std::to_string(k);
            vs.push_back({id, -2});
            es.push_back({prev, id, 1});
            prev = id;
        }
    }
    return DualGraph(vs, es);
}

DualGraph cyclic_quotient() {
    return DualGraph({{"E1", -2}, {"E2", -3}, {"E3", -2}},
                     {{"E1", "E2", 1}, {"E2", "E3", 1}});
}

std::set<Cycle> cycles_of(const std::vector<UlrichCycleReport>& reports) {
    std::set<Cycle> out;
    for (const auto& r : reports) out.insert(r.cycle);
    return out;
}

} // namespace

TEST_CASE("is_ulrich_cycle on worked examples") {
    DualGraph e6 = build_ade(ADEType(ADEFamily::E, 6));
    CHECK(is_ulrich_cycle(e6, Cycle({2, 2, 3, 4, 3, 2})));
    CHECK_FALSE(is_ulrich_cycle(e6, Cycle({3, 2, 4, 6, 4, 2}))); // U = 3

    DualGraph a1 = build_ade(ADEType(ADEFamily::A, 1));
    CHECK(is_ulrich_cycle(a1, Cycle({1})));
    CHECK_FALSE(is_ulrich_cycle(a1, Cycle({0})));
}

TEST_CASE("brute-force box enumeration") {
    DualGraph a4 = build_ade(ADEType(ADEFamily::A, 4));
    auto res = enumerate_bruteforce(a4, 3);
    CHECK(cycles_of(res.reports) ==
          std::set<Cycle>{Cycle({1, 1, 1, 1}), Cycle({1, 2, 2, 1})});

    DualGraph d4 = build_ade(ADEType(ADEFamily::D, 4));
    res = enumerate_bruteforce(d4, 3);
    CHECK(cycles_of(res.reports) ==
          std::set<Cycle>{Cycle({1, 2, 1, 1}), Cycle({2, 2, 1, 1}), Cycle({1, 2, 2, 1}),
                          Cycle({1, 2, 1, 2})});

    res = enumerate_bruteforce(cyclic_quotient(), 3);
    CHECK(cycles_of(res.reports) == std::set<Cycle>{Cycle({1, 1, 1})});
    CHECK_FALSE(res.touched_boundary);

    CHECK_THROWS_AS(enumerate_bruteforce(a4, 0), validation_error);
    CHECK_THROWS_AS(enumerate_bruteforce(a4, 50, 10), resource_limit_error);
}

TEST_CASE("chain enumeration on the three-arm stars") {
    DualGraph s2 = star(-3, 3, 2);
    const auto reports = enumerate_chain(s2);
    REQUIRE(reports.size() == 3);
    CHECK(reports[0].cycle == Cycle({1, 1, 1, 1, 1, 1, 1}));
    CHECK(reports[1].cycle == Cycle({2, 2, 1, 2, 1, 2, 1}));
    CHECK(reports[2].cycle == Cycle({3, 2, 1, 2, 1, 2, 1}));
    for (std::size_t k = 0; k < 3; ++k) {
        CHECK(reports[k].colength == static_cast<Int>(k) + 1);
        CHECK(reports[k].u == 0);
        // Each chain step drops the colength by exactly one.
        CHECK(reports[k].colength == static_cast<Int>(reports[k].chain.size()) + 1);
    }

    DualGraph s1 = star(-3, 3, 1);
    const auto small = enumerate_chain(s1);
    REQUIRE(small.size() == 2);
    CHECK(small[0].cycle == Cycle({1, 1, 1, 1}));
    CHECK(small[1].cycle == Cycle({2, 1, 1, 1}));
    CHECK(small[1].colength == 2);
}

TEST_CASE("chain enumeration stops at the maximal ideal on the cyclic quotient") {
    const auto reports = enumerate_chain(cyclic_quotient());
    REQUIRE(reports.size() == 1);
    CHECK(reports[0].cycle == Cycle({1, 1, 1}));
}

TEST_CASE("chain method rejects RDP graphs, rdp method rejects the rest") {
    CHECK_THROWS_AS(enumerate_chain(build_ade(ADEType(ADEFamily::A, 3))), validation_error);
    CHECK_THROWS_AS(enumerate_rdp(star(-3, 3, 2)), validation_error);
}

TEST_CASE("rdp enumeration reproduces the printed lists") {
    DualGraph e7 = build_ade(ADEType(ADEFamily::E, 7));
    auto reports = enumerate_rdp(e7);
    REQUIRE(reports.size() == 3);
    CHECK(reports[0].cycle == Cycle({2, 2, 3, 4, 3, 2, 1}));
    CHECK(reports[1].cycle == Cycle({3, 2, 4, 6, 5, 4, 2}));
    CHECK(reports[2].cycle == Cycle({3, 2, 4, 6, 5, 4, 3}));
    CHECK(reports[2].colength == 3);

    DualGraph a5 = build_ade(ADEType(ADEFamily::A, 5));
    CHECK(enumerate_rdp(a5).size() == 3);

    DualGraph e8 = build_ade(ADEType(ADEFamily::E, 8));
    reports = enumerate_rdp(e8);
    REQUIRE(reports.size() == 2);
    CHECK(reports[1].cycle == Cycle({5, 4, 7, 10, 8, 6, 4, 2}));
}

TEST_CASE("structured enumerations match the brute-force oracle") {
    std::vector<DualGraph> graphs;
    graphs.push_back(star(-3, 3, 1));
    graphs.push_back(star(-3, 3, 2));
    graphs.push_back(cyclic_quotient());
    graphs.push_back(star(-4, 4, 1));
    for (Int n : {1, 4, 7}) graphs.push_back(build_ade(ADEType(ADEFamily::A, n)));
    graphs.push_back(build_ade(ADEType(ADEFamily::D, 5)));
    graphs.push_back(build_ade(ADEType(ADEFamily::E, 6)));
    for (const auto& g : graphs) {
        const auto fast = enumerate_ulrich_cycles(g);
        const auto oracle = enumerate_bruteforce(g, static_cast<Int>(g.size()) + 1);
        REQUIRE(cycles_of(fast) == cycles_of(oracle.reports));
    }
}

TEST_CASE("every report satisfies the multiplicity identity") {
    for (const auto& g : {build_ade(ADEType(ADEFamily::D, 6)), star(-3, 3, 2)}) {
        for (const auto& r : enumerate_ulrich_cycles(g)) {
            CHECK(r.multiplicity == (r.mu - 1) * r.colength);
            if (g.is_rdp()) {
                CHECK(r.mu == 3);
                CHECK_FALSE(r.module_marks.empty());
            }
        }
    }
}

TEST_CASE("module marks") {
    DualGraph e6 = build_ade(ADEType(ADEFamily::E, 6));
    CHECK(module_marks(e6, e6.fundamental_cycle()) ==
          std::vector<std::string>{"E1", "E2", "E3", "E4", "E5", "E6"});
    CHECK(module_marks(e6, Cycle({2, 2, 3, 4, 3, 2})) ==
          std::vector<std::string>{"E2", "E6"});

    DualGraph e8 = build_ade(ADEType(ADEFamily::E, 8));
    CHECK(module_marks(e8, Cycle({5, 4, 7, 10, 8, 6, 4, 2})) ==
          std::vector<std::string>{"E2"});

    CHECK_THROWS_AS(module_marks(star(-3, 3, 1), star(-3, 3, 1).fundamental_cycle()),
                    validation_error);
}

TEST_CASE("kato length") {
    // M = A: just the colength.
    DualGraph e6 = build_ade(ADEType(ADEFamily::E, 6));
    const Cycle z1({2, 2, 3, 4, 3, 2});
    CHECK(kato_length(e6, z1, 1, std::vector<Int>(6, 0)) == 2);
    // M = M_2 (rank 1): 1*2 + a_2 = 4 = mu(M_2) * colength, the freeness count.
    std::vector<Int> k(6, 0);
    k[1] = 1;
    CHECK(kato_length(e6, z1, 0, k) == 4);

    DualGraph a1 = build_ade(ADEType(ADEFamily::A, 1));
    CHECK(kato_length(a1, a1.fundamental_cycle(), 0, {1}) == 2);

    CHECK_THROWS_AS(kato_length(e6, z1, 0, {1, 0}), validation_error);
}

TEST_CASE("fund linear solutions") {
    CHECK(fund_linear_solutions(1) == std::vector<std::vector<Int>>{{1}});
    CHECK(fund_linear_solutions(3) ==
          std::vector<std::vector<Int>>{{1, 1, 1}, {1, 2, 2}, {1, 2, 3}});
    CHECK(fund_linear_solutions(5).size() == 5);
    for (Int m = 1; m <= 8; ++m) {
        std::vector<std::vector<Int>> closed;
        for (Int kk = 0; kk < m; ++kk) {
            std::vector<Int> x;
            for (Int i = 1; i <= m; ++i) x.push_back(std::min<Int>(i, kk + 1));
            closed.push_back(x);
        }
        std::sort(closed.begin(), closed.end());
        CHECK(fund_linear_solutions(m) == closed);
    }
}
