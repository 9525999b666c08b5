#include <doctest.h>

#include <memory>
#include <set>

#include "ulrich/errors.hpp"
#include "ulrich/semigroup_ulrich.hpp"

using namespace ulrich;

namespace {

std::shared_ptr<const NumericalSemigroup> ns(std::vector<Int> gens) {
    return std::make_shared<const NumericalSemigroup>(std::move(gens));
}

std::set<std::vector<Int>> as_set(const std::vector<UlrichIdealRecord>& records) {
    std::set<std::vector<Int>> out;
    for (const auto& r : records) out.insert(r.ideal.min_generators());
    return out;
}

// The ideal list of k[[t^4, t^6, t^{4l-1}]] as printed: (t^4, t^6),
// (t^{4l-4}, t^{4l-1}), and the pairs (t^{4(l-q)-6}, t^{4l-1}),
// (t^{4(l-q)-8}, t^{4l-1}) for 0 <= q <= l-3.
std::set<std::vector<Int>> family_list(Int l) {
    std::set<std::vector<Int>> out;
    out.insert({4, 6});
    out.insert({4 * l - 4, 4 * l - 1});
    for (Int q = 0; q + 3 <= l; ++q) {
        out.insert({4 * (l - q) - 6, 4 * l - 1});
        out.insert({4 * (l - q) - 8, 4 * l - 1});
    }
    return out;
}

} // namespace

TEST_CASE("brute force on the worked examples") {
    CHECK(as_set(enumerate_bruteforce(ns({3, 5, 7}))) ==
          std::set<std::vector<Int>>{{3, 5, 7}});
    CHECK(enumerate_bruteforce(ns({3, 5})).empty());
    CHECK(enumerate_bruteforce(ns({5, 6, 7, 8})).empty());
    CHECK(enumerate_bruteforce(ns({1})).empty());
}

TEST_CASE("brute force resource guard") {
    // <8,15> has genus 49; the candidate set blows past the default cap.
    CHECK_THROWS_AS(enumerate_bruteforce(ns({8, 15})), resource_limit_error);
}

TEST_CASE("gorenstein enumeration") {
    const auto records = enumerate_gorenstein(ns({8, 15}));
    REQUIRE(records.size() == 7);
    std::set<Int> cs;
    for (const auto& r : records) {
        REQUIRE(r.mu == 2);
        REQUIRE(r.c.has_value());
        cs.insert(*r.c);
        REQUIRE(r.ideal.min_generators()[1] == 60);
        REQUIRE(r.ideal.min_generators()[0] % 8 == 0);
    }
    CHECK(cs == std::set<Int>{4, 12, 20, 28, 36, 44, 52});

    CHECK(enumerate_gorenstein(ns({2, 7})).size() == 3);
    CHECK(enumerate_gorenstein(ns({6, 7, 8, 9, 10})).empty()); // <a..2a-2>, a = 6
    CHECK_THROWS_AS(enumerate_gorenstein(ns({3, 5, 7})), validation_error);
}

TEST_CASE("two-generator closed form") {
    CHECK(enumerate_two_gen(3, 5).empty());
    CHECK(enumerate_two_gen(8, 15).size() == 7);
    CHECK(enumerate_two_gen(15, 8).size() == 7); // swap handled
    CHECK(enumerate_two_gen(2, 7).size() == 3);
    CHECK_THROWS_AS(enumerate_two_gen(4, 6), validation_error);
    CHECK_THROWS_AS(enumerate_two_gen(1, 5), validation_error);
}

TEST_CASE("two-generator count laws") {
    // #X = l for <2, 2l+1>; #X = (b-1)/2 for even a > 2.
    for (Int l = 1; l <= 6; ++l)
        CHECK(enumerate_two_gen(2, 2 * l + 1).size() == static_cast<std::size_t>(l));
    for (Int b : {3, 5, 7, 9})
        CHECK(enumerate_two_gen(4, b).size() == static_cast<std::size_t>((b - 1) / 2));
    // Both odd: empty also through the brute-force and Gorenstein routes.
    CHECK(enumerate_bruteforce(ns({3, 7})).empty());
    CHECK(enumerate_gorenstein(ns({5, 7})).empty());
}

TEST_CASE("the <4, 6, 4l-1> family reproduces its printed list") {
    for (Int l : {2, 3, 4}) {
        auto H = ns({4, 6, 4 * l - 1});
        CHECK(as_set(enumerate_gorenstein(H)) == family_list(l));
        CHECK(as_set(enumerate_bruteforce(H)) == family_list(l));
    }
}

TEST_CASE("methods agree on symmetric semigroups") {
    const std::vector<std::vector<Int>> corpus = {{2, 5},  {2, 9},   {3, 4},      {3, 8},
                                                  {4, 7},  {4, 9},   {5, 6},      {5, 8},
                                                  {4, 6, 7}, {4, 6, 11}, {5, 6, 7, 8}};
    for (const auto& gens : corpus) {
        auto H = ns(gens);
        REQUIRE(H->is_symmetric());
        EnumerationLimits limits;
        limits.candidate_cap = 150;
        const auto brute = as_set(enumerate_bruteforce(H, limits));
        const auto gor = as_set(enumerate_gorenstein(H));
        CHECK(brute == gor);
        if (H->generators().size() == 2)
            CHECK(as_set(enumerate_two_gen(H->generators()[0], H->generators()[1])) == gor);
    }
}

TEST_CASE("enumerated ideals satisfy the structural laws") {
    for (const auto& gens :
         std::vector<std::vector<Int>>{{3, 5, 7}, {4, 6, 15}, {2, 11}, {4, 9}, {5, 6}}) {
        auto H = ns(gens);
        EnumerationLimits limits;
        limits.candidate_cap = 150;
        for (const auto& r : enumerate_bruteforce(H, limits)) {
            CHECK(r.mu >= 2);
            CHECK(r.mu <= H->multiplicity());                    // mu <= e
            CHECK(r.reduction_exponent == r.mu * r.colength);    // e = mu * l
            if (r.mu == 2) {
                CHECK(colon_principal(r.reduction_exponent, r.ideal) == r.ideal);
                CHECK(*r.c == r.ideal.min_generators()[1] - r.ideal.min_generators()[0]);
            }
        }
    }
}

TEST_CASE("records arrive sorted by colength then exponents") {
    const auto records = enumerate_gorenstein(ns({8, 15}));
    for (std::size_t i = 1; i < records.size(); ++i) {
        const bool ordered =
            records[i - 1].colength < records[i].colength ||
            (records[i - 1].colength == records[i].colength &&
             records[i - 1].ideal.min_generators() < records[i].ideal.min_generators());
        CHECK(ordered);
    }
}
