#pragma once

#include <cstdint>
#include <vector>

namespace ulrich {

using Int = std::int64_t;

/// A numerical semigroup H = <a_1, ..., a_l>: the set of nonnegative integer
/// combinations of coprime positive generators. Immutable after construction;
/// membership below the Frobenius number is answered from a precomputed sieve.
class NumericalSemigroup {
public:
    /// Canonicalizes the given generators: duplicates and redundant generators
    /// are dropped, so generators() is the unique minimal generating set.
    /// Throws validation_error unless the input is nonempty, positive and has gcd 1.
    explicit NumericalSemigroup(std::vector<Int> raw_generators);

    /// Minimal generating set, sorted ascending.
    const std::vector<Int>& generators() const { return gens_; }

    /// Largest integer not in H; -1 when H = N.
    Int frobenius() const { return frobenius_; }

    /// Number of positive integers not in H (the genus q).
    Int gap_count() const { return gap_count_; }

    /// Smallest nonzero element (= multiplicity of the semigroup ring).
    Int multiplicity() const { return gens_.front(); }

    /// Number of minimal generators (= embedding dimension of the semigroup ring).
    Int embedding_dimension() const { return static_cast<Int>(gens_.size()); }

    bool contains(Int x) const {
        if (x < 0) return false;
        if (x > frobenius_) return true;
        return member_[static_cast<std::size_t>(x)];
    }

    /// H is symmetric iff x in H <=> F - x not in H for all x; equivalently the
    /// semigroup ring is Gorenstein.
    bool is_symmetric() const;

    /// Ascending list of gaps (positive integers outside H).
    std::vector<Int> gaps() const;

    /// Apery set of m in H: entry r is the least element of H congruent to r mod m.
    /// Throws validation_error if m <= 0 or m is not in H.
    std::vector<Int> apery(Int m) const;

    /// Semigroup generated by generators() and c. Equals *this when c is in H.
    NumericalSemigroup extend(Int c) const;

    /// Least h in H with h + c in H; 0 iff c is in H. Requires c > 0.
    Int min_translate(Int c) const;

    /// Equality as sets (compared via the canonical generating sets).
    bool operator==(const NumericalSemigroup& other) const { return gens_ == other.gens_; }
    bool operator!=(const NumericalSemigroup& other) const { return !(*this == other); }

private:
    std::vector<Int> gens_;
    Int frobenius_ = -1;
    Int gap_count_ = 0;
    std::vector<bool> member_; // index range [0, frobenius_]; empty when H = N
};

} // namespace ulrich
