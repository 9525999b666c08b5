#pragma once

#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "ulrich/semigroup.hpp" // for Int

namespace ulrich {

using BigInt = boost::multiprecision::cpp_int;

/// Parameters of the minimal free resolution of A/I for an Ulrich ideal I:
/// d = dim A, n = mu(I) >= d (n = d is the parameter / Koszul case).
///
/// The resolution is minimal in a strong sense: every differential has all of
/// its entries inside I itself. That concerns the matrices, not their sizes;
/// this module computes only the ranks.
struct BettiParams {
    Int dimension; // d
    Int mu;        // n
};

BigInt binomial(Int n, Int k);

/// Closed form: beta_0 = 1; beta_i = C(d,i) + (n-d) beta_{i-1} for 1 <= i <= d;
/// beta_i = (n-d)^{i-d} (n-d+1)^d for i >= d, with the convention 0^0 = 1 so
/// that n = d reproduces the Koszul binomials. Grows exponentially, hence the
/// big-integer result.
BigInt betti(const BettiParams& p, Int i);

/// [beta_0, ..., beta_upto] computed purely by the recursion
/// beta_i = C(d,i) + (n-d) beta_{i-1}; the independent route against the
/// closed form.
std::vector<BigInt> betti_sequence(const BettiParams& p, Int upto);

} // namespace ulrich
