#include "ulrich/monomial_ideal.hpp"

#include <algorithm>

#include "ulrich/errors.hpp"

namespace ulrich {

namespace {

std::vector<Int> minimalize(const NumericalSemigroup& H, std::vector<Int> exps) {
    std::sort(exps.begin(), exps.end());
    exps.erase(std::unique(exps.begin(), exps.end()), exps.end());
    std::vector<Int> kept;
    for (Int g : exps) {
        bool dominated = false;
        for (Int h : kept) {
            if (H.contains(g - h)) { dominated = true; break; }
        }
        if (!dominated) kept.push_back(g);
    }
    return kept;
}

} // namespace

MonomialIdeal::MonomialIdeal(std::shared_ptr<const NumericalSemigroup> ambient,
                             std::vector<Int> exponents)
    : ambient_(std::move(ambient)) {
    if (!ambient_) throw validation_error("ideal: missing ambient semigroup");
    if (exponents.empty()) throw validation_error("ideal: exponent list is empty");
    for (Int g : exponents) {
        if (g == 0) throw validation_error("ideal: exponent 0 would give the unit ideal");
        if (g < 0 || !ambient_->contains(g))
            throw validation_error("ideal: exponent " + std::to_string(g) + " is not in H");
    }
    gens_ = minimalize(*ambient_, std::move(exponents));
}

bool MonomialIdeal::contains_exponent(Int x) const {
    for (Int g : gens_) {
        if (ambient_->contains(x - g)) return true;
    }
    return false;
}

Int MonomialIdeal::colength() const {
    // Everything above frobenius + min generator lies in the ideal.
    const Int limit = ambient_->frobenius() + reduction_exponent();
    Int count = 0;
    for (Int x = 0; x <= limit; ++x) {
        if (ambient_->contains(x) && !contains_exponent(x)) ++count;
    }
    return count;
}

bool MonomialIdeal::operator==(const MonomialIdeal& other) const {
    return *ambient_ == *other.ambient_ && gens_ == other.gens_;
}

MonomialIdeal product(const MonomialIdeal& I, const MonomialIdeal& J) {
    if (I.semigroup() != J.semigroup())
        throw validation_error("product: ambient semigroups differ");
    std::vector<Int> sums;
    sums.reserve(I.min_generators().size() * J.min_generators().size());
    for (Int g : I.min_generators())
        for (Int h : J.min_generators()) sums.push_back(g + h);
    return MonomialIdeal(I.semigroup_ptr(), std::move(sums));
}

MonomialIdeal colon_principal(Int a, const MonomialIdeal& I) {
    const NumericalSemigroup& H = I.semigroup();
    if (a <= 0 || !H.contains(a)) throw validation_error("colon: a must be a positive element of H");

    // h qualifies iff h + g - a is in H for every generator g. All h beyond
    // frobenius + a qualify, so minimal generators live in [0, F + a + a_1].
    auto qualifies = [&](Int h) {
        for (Int g : I.min_generators()) {
            if (!H.contains(h + g - a)) return false;
        }
        return true;
    };
    if (qualifies(0)) throw unit_colon_error();

    const Int limit = H.frobenius() + a + H.multiplicity();
    std::vector<Int> found;
    for (Int h = 1; h <= limit; ++h) {
        if (H.contains(h) && qualifies(h)) found.push_back(h);
    }
    return MonomialIdeal(I.semigroup_ptr(), std::move(found));
}

UlrichDiagnosis diagnose_ulrich(const MonomialIdeal& I) {
    UlrichDiagnosis d;
    d.reduction = I.reduction_exponent();
    d.mu = I.mu();
    d.colength = I.colength();
    if (d.mu == 1) {
        d.parameter = true;
        d.ulrich = true;
        d.stable = true;
        d.length_equal = true;
        return d;
    }
    const MonomialIdeal Q(I.semigroup_ptr(), {d.reduction});
    d.stable = product(I, I) == product(Q, I);
    d.length_equal = d.reduction == d.mu * d.colength;
    d.ulrich = d.stable && d.length_equal;
    return d;
}

} // namespace ulrich
