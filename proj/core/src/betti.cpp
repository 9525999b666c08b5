#include "ulrich/betti.hpp"

#include "ulrich/errors.hpp"

namespace ulrich {

namespace {

void check(const BettiParams& p) {
    if (p.dimension < 0) throw validation_error("betti: dimension must be >= 0");
    if (p.mu < p.dimension) throw validation_error("betti: mu must be >= dimension");
}

BigInt power(BigInt base, Int exp) {
    BigInt out = 1;
    for (Int i = 0; i < exp; ++i) out *= base;
    return out; // 0^0 = 1 by the empty product
}

} // namespace

BigInt binomial(Int n, Int k) {
    if (k < 0 || k > n) return 0;
    BigInt out = 1;
    for (Int i = 0; i < k; ++i) {
        out *= n - i;
        out /= i + 1;
    }
    return out;
}

BigInt betti(const BettiParams& p, Int i) {
    check(p);
    if (i < 0) throw validation_error("betti: index must be >= 0");
    const Int d = p.dimension;
    const Int n = p.mu;
    if (i >= d) return power(n - d, i - d) * power(n - d + 1, d);
    BigInt prev = 1; // beta_0
    for (Int j = 1; j <= i; ++j) prev = binomial(d, j) + (n - d) * prev;
    return prev;
}

std::vector<BigInt> betti_sequence(const BettiParams& p, Int upto) {
    check(p);
    if (upto < 0) throw validation_error("betti: upto must be >= 0");
    std::vector<BigInt> out;
    out.reserve(static_cast<std::size_t>(upto) + 1);
    out.emplace_back(1);
    for (Int i = 1; i <= upto; ++i)
        out.push_back(binomial(p.dimension, i) + (p.mu - p.dimension) * out.back());
    return out;
}

} // namespace ulrich
