#include "ulrich/semigroup.hpp"

#include <algorithm>
#include <numeric>

#include "ulrich/errors.hpp"

namespace ulrich {

namespace {

// Sieve of membership flags on [0, bound].
std::vector<bool> sieve(const std::vector<Int>& gens, Int bound) {
    std::vector<bool> member(static_cast<std::size_t>(bound) + 1, false);
    member[0] = true;
    for (Int x = 0; x <= bound; ++x) {
        if (!member[static_cast<std::size_t>(x)]) continue;
        for (Int a : gens) {
            if (x + a <= bound) member[static_cast<std::size_t>(x + a)] = true;
        }
    }
    return member;
}

} // namespace

NumericalSemigroup::NumericalSemigroup(std::vector<Int> raw_generators) {
    if (raw_generators.empty()) throw validation_error("semigroup: generator list is empty");
    for (Int a : raw_generators) {
        if (a <= 0) throw validation_error("semigroup: generators must be positive");
    }
    std::sort(raw_generators.begin(), raw_generators.end());
    raw_generators.erase(std::unique(raw_generators.begin(), raw_generators.end()),
                         raw_generators.end());

    Int g = 0;
    for (Int a : raw_generators) g = std::gcd(g, a);
    if (g != 1) throw validation_error("semigroup: gcd of generators is not 1");

    if (raw_generators.front() == 1) {
        gens_ = {1};
        frobenius_ = -1;
        gap_count_ = 0;
        return;
    }

    // Grow the sieve until the top multiplicity() consecutive entries are all
    // members; from there on everything is a member, so the Frobenius number
    // lies inside the sieve.
    const Int a1 = raw_generators.front();
    Int bound = std::max<Int>(raw_generators.back() * 2, 64);
    std::vector<bool> member;
    for (;;) {
        member = sieve(raw_generators, bound);
        bool tail_full = true;
        for (Int x = bound - a1 + 1; x <= bound; ++x) {
            if (!member[static_cast<std::size_t>(x)]) { tail_full = false; break; }
        }
        if (tail_full) break;
        bound *= 2;
    }

    Int F = -1;
    for (Int x = bound; x >= 0; --x) {
        if (!member[static_cast<std::size_t>(x)]) { F = x; break; }
    }
    frobenius_ = F;
    member_.assign(member.begin(), member.begin() + F + 1);
    gap_count_ = 0;
    for (Int x = 1; x <= F; ++x) {
        if (!member_[static_cast<std::size_t>(x)]) ++gap_count_;
    }

    // Minimal generators are exactly the positive members that are not a sum of
    // two positive members; any generating set contains all of them.
    for (Int a : raw_generators) {
        bool redundant = false;
        for (Int h = a1; h <= a - a1; ++h) {
            if (contains(h) && contains(a - h)) { redundant = true; break; }
        }
        if (!redundant) gens_.push_back(a);
    }
}

bool NumericalSemigroup::is_symmetric() const {
    if (frobenius_ % 2 == 0) return false; // F even (F = -1 passes: H = N is symmetric)
    for (Int x = 0; x <= frobenius_; ++x) {
        if (contains(x) == contains(frobenius_ - x)) return false;
    }
    return true;
}

std::vector<Int> NumericalSemigroup::gaps() const {
    std::vector<Int> out;
    out.reserve(static_cast<std::size_t>(gap_count_));
    for (Int x = 1; x <= frobenius_; ++x) {
        if (!contains(x)) out.push_back(x);
    }
    return out;
}

std::vector<Int> NumericalSemigroup::apery(Int m) const {
    if (m <= 0 || !contains(m)) throw validation_error("apery: m must be a positive element of H");
    std::vector<Int> out(static_cast<std::size_t>(m), -1);
    Int filled = 0;
    for (Int x = 0; filled < m; ++x) {
        if (!contains(x)) continue;
        Int r = x % m;
        if (out[static_cast<std::size_t>(r)] < 0) {
            out[static_cast<std::size_t>(r)] = x;
            ++filled;
        }
    }
    return out;
}

NumericalSemigroup NumericalSemigroup::extend(Int c) const {
    if (c <= 0) throw validation_error("extend: c must be positive");
    std::vector<Int> gens = gens_;
    gens.push_back(c);
    return NumericalSemigroup(gens);
}

Int NumericalSemigroup::min_translate(Int c) const {
    if (c <= 0) throw validation_error("min_translate: c must be positive");
    for (Int h = 0;; ++h) {
        if (contains(h) && contains(h + c)) return h;
    }
}

} // namespace ulrich
