#include "ulrich/rdp_catalog.hpp"

#include <algorithm>

#include "ulrich/errors.hpp"
#include "ulrich/ulrich_cycles.hpp"

namespace ulrich {

namespace {

std::string pow_str(const std::string& var, Int e) {
    return e == 1 ? var : var + "^" + std::to_string(e);
}

IdealCatalogEntry entry(const ADEType& t, int dim, std::vector<std::string> gens,
                        std::string tag) {
    return IdealCatalogEntry{t, dim, std::move(gens), std::move(tag)};
}

} // namespace

ADEType::ADEType(ADEFamily fam, Int n) : family(fam), index(n) {
    switch (fam) {
        case ADEFamily::A:
            if (n < 1) throw validation_error("ADE type: A_n needs n >= 1");
            break;
        case ADEFamily::D:
            if (n < 4) throw validation_error("ADE type: D_n needs n >= 4");
            break;
        case ADEFamily::E:
            if (n < 6 || n > 8) throw validation_error("ADE type: E_n needs n in {6,7,8}");
            break;
    }
}

std::string ADEType::name() const {
    switch (family) {
        case ADEFamily::A: return "A" + std::to_string(index);
        case ADEFamily::D: return "D" + std::to_string(index);
        default: return "E" + std::to_string(index);
    }
}

ADEFamily parse_ade_family(const std::string& s) {
    if (s == "A" || s == "a") return ADEFamily::A;
    if (s == "D" || s == "d") return ADEFamily::D;
    if (s == "E" || s == "e") return ADEFamily::E;
    throw validation_error("ADE family must be A, D or E");
}

DualGraph build_ade(const ADEType& t) {
    const Int n = t.index;
    std::vector<VertexSpec> verts;
    std::vector<EdgeSpec> edges;
    auto id = [](Int i) { return "E" + std::to_string(i); };
    for (Int i = 1; i <= n; ++i) verts.push_back({id(i), -2});
    switch (t.family) {
        case ADEFamily::A:
            for (Int i = 1; i < n; ++i) edges.push_back({id(i), id(i + 1), 1});
            break;
        case ADEFamily::D:
            for (Int i = 1; i < n - 2; ++i) edges.push_back({id(i), id(i + 1), 1});
            edges.push_back({id(n - 2), id(n - 1), 1});
            edges.push_back({id(n - 2), id(n), 1});
            break;
        case ADEFamily::E:
            for (Int i = 2; i < n; ++i) edges.push_back({id(i), id(i + 1), 1});
            edges.push_back({id(1), id(4), 1});
            break;
    }
    return DualGraph(std::move(verts), std::move(edges));
}

std::vector<Int> mckay_ranks(const ADEType& t) {
    return build_ade(t).fundamental_cycle().coefficients;
}

std::vector<IdealCatalogEntry> surface_ideals(const ADEType& t) {
    const Int n = t.index;
    std::vector<IdealCatalogEntry> out;
    switch (t.family) {
        case ADEFamily::A: {
            const Int m = n / 2;
            const Int top = n % 2 == 0 ? m : m + 1;
            const std::string tag = n % 2 == 0 ? "A_even:m" : "A_odd:m+1";
            for (Int i = 1; i <= top; ++i)
                out.push_back(entry(t, 2, {"x", pow_str("y", i), "z"}, tag));
            break;
        }
        case ADEFamily::D: {
            const Int m = n / 2;
            if (n % 2 == 0) {
                for (Int i = 1; i <= m - 1; ++i)
                    out.push_back(entry(t, 2, {"x", pow_str("y", i), "z"}, "D_even:m+2"));
                out.push_back(entry(
                    t, 2, {"x + sqrt(-1)*" + pow_str("y", m - 1), pow_str("y", m), "z"},
                    "D_even:m+2"));
                out.push_back(entry(
                    t, 2, {"x - sqrt(-1)*" + pow_str("y", m - 1), pow_str("y", m), "z"},
                    "D_even:m+2"));
                out.push_back(entry(t, 2, {"x^2", "y", "z"}, "D_even:m+2"));
            } else {
                for (Int i = 1; i <= m; ++i)
                    out.push_back(entry(t, 2, {"x", pow_str("y", i), "z"}, "D_odd:m+1"));
                out.push_back(entry(t, 2, {"x^2", "y", "z"}, "D_odd:m+1"));
            }
            break;
        }
        case ADEFamily::E: {
            const Int top = n == 6 ? 2 : (n == 7 ? 3 : 2);
            const std::string tag = "E" + std::to_string(n) + ":" + std::to_string(top);
            for (Int i = 1; i <= top; ++i)
                out.push_back(entry(t, 2, {"x", pow_str("y", i), "z"}, tag));
            break;
        }
    }
    return out;
}

std::vector<IdealCatalogEntry> curve_ideals(const ADEType& t) {
    const Int n = t.index;
    std::vector<IdealCatalogEntry> out;
    switch (t.family) {
        case ADEFamily::A: {
            const Int top = n % 2 == 0 ? n / 2 : (n + 1) / 2;
            const std::string tag = n % 2 == 0 ? "A_even:n/2" : "A_odd:(n+1)/2";
            for (Int i = 1; i <= top; ++i)
                out.push_back(entry(t, 1, {"x", pow_str("y", i)}, tag));
            break;
        }
        case ADEFamily::D: {
            if (n % 2 == 0) {
                const Int m = n / 2;
                out.push_back(entry(t, 1, {"x^2", "y"}, "D_even:3"));
                out.push_back(entry(
                    t, 1, {"x + sqrt(-1)*" + pow_str("y", m - 1), pow_str("y", m)}, "D_even:3"));
                out.push_back(entry(
                    t, 1, {"x - sqrt(-1)*" + pow_str("y", m - 1), pow_str("y", m)}, "D_even:3"));
            } else {
                out.push_back(entry(t, 1, {"x^2", "y"}, "D_odd:2"));
                out.push_back(entry(t, 1, {"x", pow_str("y", (n - 1) / 2)}, "D_odd:2"));
            }
            break;
        }
        case ADEFamily::E: {
            if (n == 6) out.push_back(entry(t, 1, {"x", "y^2"}, "E6:1"));
            if (n == 7) out.push_back(entry(t, 1, {"x", "y^3"}, "E7:1"));
            // E8 has none.
            break;
        }
    }
    return out;
}

std::size_t expected_ulrich_cycle_count(const ADEType& t) {
    const Int n = t.index;
    const Int m = n / 2;
    switch (t.family) {
        case ADEFamily::A: return static_cast<std::size_t>(n % 2 == 0 ? m : m + 1);
        case ADEFamily::D: return static_cast<std::size_t>(n % 2 == 0 ? m + 2 : m + 1);
        default: return n == 6 ? 2 : (n == 7 ? 3 : 2);
    }
}

std::vector<Int> expected_ulrich_colengths(const ADEType& t) {
    const Int n = t.index;
    const Int m = n / 2;
    std::vector<Int> out;
    switch (t.family) {
        case ADEFamily::A: {
            const Int count = n % 2 == 0 ? m : m + 1;
            for (Int k = 0; k < count; ++k) out.push_back(k + 1); // l(A/I_k) = k+1
            break;
        }
        case ADEFamily::D: {
            // l = k+1 for k = 0..m-2, then m, m (even) or m (odd), and 2.
            for (Int k = 0; k + 2 <= m; ++k) out.push_back(k + 1);
            out.push_back(m);
            if (n % 2 == 0) out.push_back(m);
            out.push_back(2);
            break;
        }
        default: {
            const Int count = n == 7 ? 3 : 2;
            for (Int k = 0; k < count; ++k) out.push_back(k + 1);
            break;
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

const std::vector<SimpleGoodIdealRow>& simple_good_ideal_table(const ADEType& t) {
    static const std::vector<SimpleGoodIdealRow> e6{
        {{2, 1, 2, 3, 2, 1}, 1, 3},   {{2, 2, 3, 4, 3, 2}, 2, 3},
        {{3, 2, 4, 6, 4, 2}, 3, 4},   {{3, 2, 4, 6, 5, 3}, 4, 4},
        {{3, 3, 5, 6, 4, 2}, 4, 4},   {{3, 4, 5, 6, 4, 2}, 6, 4},
        {{3, 2, 4, 6, 5, 4}, 6, 4},   {{4, 3, 6, 8, 6, 3}, 6, 5},
        {{4, 3, 6, 8, 6, 4}, 7, 5},   {{4, 4, 6, 8, 6, 3}, 7, 5},
        {{5, 4, 8, 10, 7, 4}, 10, 6}, {{5, 4, 7, 10, 8, 4}, 10, 6},
        {{6, 5, 10, 12, 8, 4}, 15, 7}, {{6, 4, 8, 12, 10, 5}, 15, 7}};
    static const std::vector<SimpleGoodIdealRow> e7{
        {{2, 2, 3, 4, 3, 2, 1}, 1, 3},    {{3, 2, 4, 6, 5, 4, 2}, 2, 3},
        {{3, 2, 4, 6, 5, 4, 3}, 3, 3},    {{4, 3, 6, 8, 6, 4, 2}, 3, 4},
        {{5, 3, 6, 9, 7, 5, 3}, 4, 4},    {{6, 4, 8, 12, 9, 6, 3}, 6, 5},
        {{6, 4, 8, 12, 10, 7, 4}, 7, 5},  {{7, 4, 8, 12, 9, 6, 3}, 7, 5},
        {{8, 5, 10, 15, 12, 8, 4}, 10, 6}, {{9, 6, 12, 18, 15, 10, 5}, 15, 7}};
    static const std::vector<SimpleGoodIdealRow> e8{
        {{3, 2, 4, 6, 5, 4, 3, 2}, 1, 3},       {{5, 4, 7, 10, 8, 6, 4, 2}, 2, 3},
        {{6, 4, 8, 12, 10, 8, 6, 3}, 3, 4},     {{8, 5, 10, 15, 12, 9, 6, 3}, 4, 4},
        {{9, 6, 12, 18, 15, 12, 8, 4}, 6, 5},   {{10, 7, 14, 20, 16, 12, 8, 4}, 7, 5},
        {{12, 8, 16, 24, 20, 15, 10, 5}, 10, 6}, {{15, 10, 20, 30, 24, 18, 12, 6}, 15, 7}};
    if (t.family != ADEFamily::E)
        throw validation_error("simple good ideal tables exist for E6, E7, E8 only");
    return t.index == 6 ? e6 : (t.index == 7 ? e7 : e8);
}

} // namespace ulrich
