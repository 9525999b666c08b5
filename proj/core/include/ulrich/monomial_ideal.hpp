#pragma once

#include <memory>
#include <vector>

#include "ulrich/semigroup.hpp"

namespace ulrich {

/// An m-primary monomial ideal of the semigroup ring k[[t^H]], encoded by its
/// minimal exponents g_1 < ... < g_n (all positive elements of H). The exponent
/// set of the ideal is the union of the g_i + H.
class MonomialIdeal {
public:
    /// Minimalizes the exponent list: g is dropped when g - g' lies in H for
    /// another kept exponent g'. Throws validation_error for an empty list,
    /// an exponent outside H, or exponent 0 (the unit ideal).
    MonomialIdeal(std::shared_ptr<const NumericalSemigroup> ambient, std::vector<Int> exponents);

    const NumericalSemigroup& semigroup() const { return *ambient_; }
    const std::shared_ptr<const NumericalSemigroup>& semigroup_ptr() const { return ambient_; }

    /// Sorted minimal generator exponents.
    const std::vector<Int>& min_generators() const { return gens_; }

    /// Minimal number of generators mu_A(I) = n.
    Int mu() const { return static_cast<Int>(gens_.size()); }

    /// Smallest exponent a; (t^a) is a reduction of the ideal.
    Int reduction_exponent() const { return gens_.front(); }

    /// Whether t^x lies in the ideal.
    bool contains_exponent(Int x) const;

    /// Colength l_A(A/I) = #(H \ exp(I)); always finite.
    Int colength() const;

    bool operator==(const MonomialIdeal& other) const;
    bool operator<(const MonomialIdeal& other) const { return gens_ < other.gens_; }

private:
    std::shared_ptr<const NumericalSemigroup> ambient_;
    std::vector<Int> gens_;
};

/// Ideal product: generated by all pairwise sums, minimalized.
/// Throws validation_error when the ambient semigroups differ.
MonomialIdeal product(const MonomialIdeal& I, const MonomialIdeal& J);

/// The colon ideal (t^a) : I = { h in H : h + g in a + H for every generator g },
/// as a monomial ideal. Throws unit_colon_error when 0 qualifies (the colon is
/// the whole ring). Requires a in H, a > 0.
MonomialIdeal colon_principal(Int a, const MonomialIdeal& I);

/// Outcome of the Ulrich test with the quantities it was decided on.
/// With a = min exponent and Q = (t^a): e_I^0(A) = l(A/Q) = a, so the ideal is
/// Ulrich iff I^2 = QI and a = mu * colength. Parameter ideals (mu = 1) pass
/// trivially and are flagged.
struct UlrichDiagnosis {
    bool ulrich = false;
    bool parameter = false;
    bool stable = false;       // I^2 = QI
    bool length_equal = false; // a = mu * colength
    Int reduction = 0;         // a
    Int mu = 0;
    Int colength = 0;
};

UlrichDiagnosis diagnose_ulrich(const MonomialIdeal& I);

inline bool is_ulrich(const MonomialIdeal& I) { return diagnose_ulrich(I).ulrich; }

} // namespace ulrich
