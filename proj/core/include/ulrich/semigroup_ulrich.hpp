#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "ulrich/monomial_ideal.hpp"

namespace ulrich {

/// One monomial Ulrich ideal with the derived quantities reported alongside it.
struct UlrichIdealRecord {
    MonomialIdeal ideal;
    Int colength = 0;
    Int mu = 0;
    Int reduction_exponent = 0; // a = min exponent
    std::optional<Int> c;       // b - a for two-generated ideals
};

struct EnumerationLimits {
    /// Cap on the number of candidate exponents outside m^q; the brute-force
    /// subset walk aborts when exceeded.
    Int candidate_cap = 40;
    /// Cap on leaves visited by the subset walk.
    std::uint64_t leaf_cap = std::uint64_t{1} << 26;
};

/// All monomial Ulrich ideals with mu >= 2, by exhaustive search. Every such
/// ideal contains m^q (q = gap count), so the ideals are in bijection with the
/// H-closed subsets of the finite complement; each candidate is filtered
/// through diagnose_ulrich. Sorted by (colength, generator exponents).
/// Throws resource_limit_error when the candidate set or leaf count exceeds
/// the limits.
std::vector<UlrichIdealRecord> enumerate_bruteforce(
    const std::shared_ptr<const NumericalSemigroup>& H, const EnumerationLimits& limits = {});

/// All monomial Ulrich ideals with mu >= 2 of a Gorenstein (symmetric)
/// semigroup ring: for every c not in H with 2c in H such that H + <c> is
/// again symmetric, the ideal (t^a, t^{a+c}) with a = min_translate(H, c).
/// Throws validation_error when H is not symmetric.
std::vector<UlrichIdealRecord> enumerate_gorenstein(
    const std::shared_ptr<const NumericalSemigroup>& H);

/// Closed form for H = <a, b> with gcd(a, b) = 1 and a, b > 1: empty when both
/// are odd; otherwise (with a even after swapping) one ideal per odd c' in
/// [1, b), namely c = a c' / 2, alpha = min_translate(H, c). The count is
/// (b - 1) / 2.
std::vector<UlrichIdealRecord> enumerate_two_gen(Int a, Int b);

} // namespace ulrich
