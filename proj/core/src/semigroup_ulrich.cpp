#include "ulrich/semigroup_ulrich.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "ulrich/errors.hpp"

namespace ulrich {

namespace {

UlrichIdealRecord make_record(MonomialIdeal ideal) {
    UlrichIdealRecord r{std::move(ideal), 0, 0, 0, std::nullopt};
    r.colength = r.ideal.colength();
    r.mu = r.ideal.mu();
    r.reduction_exponent = r.ideal.reduction_exponent();
    if (r.mu == 2) r.c = r.ideal.min_generators()[1] - r.ideal.min_generators()[0];
    return r;
}

void sort_records(std::vector<UlrichIdealRecord>& out) {
    std::sort(out.begin(), out.end(), [](const UlrichIdealRecord& x, const UlrichIdealRecord& y) {
        if (x.colength != y.colength) return x.colength < y.colength;
        return x.ideal.min_generators() < y.ideal.min_generators();
    });
}

} // namespace

std::vector<UlrichIdealRecord> enumerate_bruteforce(
    const std::shared_ptr<const NumericalSemigroup>& Hp, const EnumerationLimits& limits) {
    const NumericalSemigroup& H = *Hp;
    const Int q = H.gap_count();
    if (q == 0) return {}; // H = N: the ring is regular, only parameter ideals are Ulrich

    // Exponent set of m^q: sums of q positive elements of H. Everything at or
    // above q*a_1 + F + 1 belongs, so the complement D inside H is finite.
    const Int a1 = H.multiplicity();
    const Int limit = q * a1 + H.frobenius() + 1;
    std::vector<Int> depth(static_cast<std::size_t>(limit) + 1, -1);
    depth[0] = 0;
    for (Int x = 0; x <= limit; ++x) {
        if (depth[static_cast<std::size_t>(x)] < 0) continue;
        const Int next = std::min<Int>(depth[static_cast<std::size_t>(x)] + 1, q);
        for (Int a : H.generators()) {
            if (x + a > limit) continue;
            auto& slot = depth[static_cast<std::size_t>(x + a)];
            if (slot < next) slot = next;
        }
    }
    auto in_mq = [&](Int x) { return x <= limit ? depth[static_cast<std::size_t>(x)] >= q : true; };

    std::vector<Int> candidates; // positive elements of H outside m^q
    for (Int x = 1; x <= limit; ++x) {
        if (H.contains(x) && !in_mq(x)) candidates.push_back(x);
    }
    if (static_cast<Int>(candidates.size()) > limits.candidate_cap) {
        throw resource_limit_error(
            "brute force: candidate set of size " + std::to_string(candidates.size()) +
            " exceeds cap " + std::to_string(limits.candidate_cap) +
            " (raise --cap / ULRICH_CAP, or use the Gorenstein method)");
    }

    // Minimal exponents of m^q itself; every enumerated ideal is generated by a
    // chosen closed subset of the candidates together with these.
    std::vector<Int> mq_gens;
    for (Int x = 1; x <= limit + a1; ++x) {
        if (!in_mq(x)) continue;
        bool dominated = false;
        for (Int g : mq_gens) {
            if (H.contains(x - g)) { dominated = true; break; }
        }
        if (!dominated) mq_gens.push_back(x);
    }

    // Walk subsets T of the candidate list (ascending) that are closed under
    // adding H-elements: excluding x is only allowed when no included y
    // satisfies x - y in H.
    std::vector<UlrichIdealRecord> out;
    std::vector<Int> chosen;
    std::uint64_t leaves = 0;
    const std::size_t n = candidates.size();

    auto emit = [&]() {
        if (++leaves > limits.leaf_cap)
            throw resource_limit_error("brute force: leaf cap exceeded");
        std::vector<Int> exps = chosen;
        exps.insert(exps.end(), mq_gens.begin(), mq_gens.end());
        MonomialIdeal I(Hp, std::move(exps));
        if (I.mu() < 2) return;
        if (is_ulrich(I)) out.push_back(make_record(std::move(I)));
    };

    auto rec = [&](auto&& self, std::size_t i) -> void {
        if (i == n) { emit(); return; }
        const Int x = candidates[i];
        chosen.push_back(x);
        self(self, i + 1);
        chosen.pop_back();
        for (Int y : chosen) {
            if (H.contains(x - y)) return; // x forced in; cannot exclude
        }
        self(self, i + 1);
    };
    rec(rec, 0);

    sort_records(out);
    return out;
}

std::vector<UlrichIdealRecord> enumerate_gorenstein(
    const std::shared_ptr<const NumericalSemigroup>& Hp) {
    const NumericalSemigroup& H = *Hp;
    if (!H.is_symmetric()) throw validation_error("gorenstein method: H is not symmetric");

    std::set<std::pair<Int, Int>> pairs;
    for (Int c = 1; c <= H.frobenius(); ++c) {
        if (H.contains(c) || !H.contains(2 * c)) continue;
        if (!H.extend(c).is_symmetric()) continue;
        const Int a = H.min_translate(c);
        pairs.emplace(a, a + c);
    }

    std::vector<UlrichIdealRecord> out;
    for (const auto& [a, b] : pairs) out.push_back(make_record(MonomialIdeal(Hp, {a, b})));
    sort_records(out);
    return out;
}

std::vector<UlrichIdealRecord> enumerate_two_gen(Int a, Int b) {
    if (a <= 1 || b <= 1) throw validation_error("two-gen method: generators must exceed 1");
    if (std::gcd(a, b) != 1) throw validation_error("two-gen method: gcd(a, b) must be 1");
    if (a % 2 != 0 && b % 2 != 0) return {}; // both odd: no nonparameter Ulrich ideals
    if (a % 2 != 0) std::swap(a, b);

    auto Hp = std::make_shared<const NumericalSemigroup>(std::vector<Int>{a, b});
    std::vector<UlrichIdealRecord> out;
    for (Int cp = 1; cp < b; cp += 2) {
        const Int c = a * cp / 2;
        const Int alpha = Hp->min_translate(c);
        out.push_back(make_record(MonomialIdeal(Hp, {alpha, alpha + c})));
    }
    sort_records(out);
    return out;
}

} // namespace ulrich
