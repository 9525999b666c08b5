#include "ulrich/ulrich_cycles.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "ulrich/errors.hpp"

namespace ulrich {

namespace {

UlrichCycleReport make_report(const DualGraph& g, Cycle z, std::vector<Cycle> chain = {}) {
    UlrichCycleReport r;
    const auto stats = g.ideal_stats(z);
    r.colength = stats.colength;
    r.multiplicity = stats.multiplicity;
    r.mu = stats.mu;
    r.u = g.u_value(z);
    if (r.u != 0) throw std::logic_error("enumeration emitted a cycle with U != 0");
    if (g.is_rdp()) r.module_marks = module_marks(g, z);
    r.cycle = std::move(z);
    r.chain = std::move(chain);
    return r;
}

void sort_reports(std::vector<UlrichCycleReport>& reports) {
    std::sort(reports.begin(), reports.end(),
              [](const UlrichCycleReport& a, const UlrichCycleReport& b) {
                  if (a.colength != b.colength) return a.colength < b.colength;
                  return a.cycle < b.cycle;
              });
}

// Assignment order in which every vertex after the first is adjacent to an
// earlier one; keeps the anti-nef pruning tight on chain-shaped graphs.
std::vector<std::size_t> assignment_order(const DualGraph& g) {
    const std::size_t n = g.size();
    auto degree = [&](std::size_t v) {
        std::size_t d = 0;
        for (std::size_t w = 0; w < n; ++w)
            if (w != v && g.entry(v, w) > 0) ++d;
        return d;
    };
    std::size_t start = 0;
    for (std::size_t v = 1; v < n; ++v)
        if (degree(v) < degree(start)) start = v;
    std::vector<std::size_t> order{start};
    std::vector<bool> placed(n, false);
    placed[start] = true;
    while (order.size() < n) {
        for (std::size_t v = 0; v < n; ++v) {
            if (placed[v]) continue;
            bool adjacent = false;
            for (std::size_t w : order)
                if (g.entry(v, w) > 0) { adjacent = true; break; }
            if (adjacent) {
                order.push_back(v);
                placed[v] = true;
                break;
            }
        }
    }
    return order;
}

// DFS over the box 0 <= Z <= box (componentwise), keeping only assignments that
// can still complete to an anti-nef cycle: unassigned coefficients only add to
// a row, so once a vertex's intersection number against the assigned part is
// positive it can never recover. Calls visit(z) for every surviving full
// assignment.
template <class Visit>
void scan_antinef_box(const DualGraph& g, const std::vector<Int>& box, std::uint64_t node_cap,
                      Visit&& visit) {
    const std::size_t n = g.size();
    const auto order = assignment_order(g);
    Cycle z(std::vector<Int>(n, 0));
    std::uint64_t nodes = 0;
    constexpr std::size_t kNone = static_cast<std::size_t>(-1);

    // First assigned vertex with a positive partial row, or kNone.
    auto partial_fail = [&](std::size_t upto) -> std::size_t {
        for (std::size_t k = 0; k <= upto; ++k) {
            const std::size_t u = order[k];
            Int row = 0;
            for (std::size_t k2 = 0; k2 <= upto; ++k2) row += g.entry(u, order[k2]) * z[order[k2]];
            if (row > 0) return u;
        }
        return kNone;
    };

    auto rec = [&](auto&& self, std::size_t pos) -> void {
        if (pos == n) {
            visit(z);
            return;
        }
        const std::size_t v = order[pos];
        for (Int value = 0; value <= box[v]; ++value) {
            if (++nodes > node_cap)
                throw resource_limit_error("cycle enumeration: node cap exceeded");
            z[v] = value;
            const std::size_t bad = partial_fail(pos);
            if (bad == kNone) {
                self(self, pos + 1);
            } else if (bad != v) {
                break; // raising v never lowers another vertex's row
            }
            // bad == v: a larger value at v can still fix its own row
        }
        z[v] = 0;
    };
    rec(rec, 0);
}

} // namespace

bool is_ulrich_cycle(const DualGraph& g, const Cycle& z) {
    if (z.size() != g.size()) throw validation_error("is_ulrich_cycle: size mismatch");
    if (z.is_zero()) return false;
    if (!g.is_antinef(z)) return false;
    const bool by_u = g.u_value(z) == 0 && (1 - g.dot(z, g.fundamental_cycle())) >= 3;
    if (g.is_rdp()) {
        const bool by_pairing = g.dot(z, g.fundamental_cycle()) == -2;
        if (by_u != by_pairing)
            throw std::logic_error("Ulrich criteria disagree on an RDP graph");
    }
    return by_u;
}

CycleEnumerationResult enumerate_bruteforce(const DualGraph& g, Int bound,
                                            std::uint64_t node_cap) {
    if (bound < 1) throw validation_error("brute force: bound must be >= 1");
    const Cycle& z0 = g.fundamental_cycle();
    std::vector<Int> box(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) box[i] = bound * z0[i];

    CycleEnumerationResult result;
    scan_antinef_box(g, box, node_cap, [&](const Cycle& z) {
        if (!is_ulrich_cycle(g, z)) return;
        for (std::size_t i = 0; i < g.size(); ++i)
            if (z[i] == box[i]) result.touched_boundary = true;
        result.reports.push_back(make_report(g, z));
    });
    sort_reports(result.reports);
    return result;
}

std::vector<UlrichCycleReport> enumerate_chain(const DualGraph& g) {
    if (g.multiplicity() < 3)
        throw validation_error("chain method requires multiplicity >= 3 (got an RDP graph)");
    const std::size_t n = g.size();
    const Cycle& z0 = g.fundamental_cycle();

    std::vector<std::size_t> steep; // vertices with self-intersection <= -3
    for (std::size_t v = 0; v < n; ++v)
        if (g.vertices()[v].self_intersection <= -3) steep.push_back(v);

    auto components_of = [&](const std::vector<std::size_t>& vs) {
        std::vector<std::vector<std::size_t>> comps;
        std::vector<bool> used(n, false);
        for (std::size_t s : vs) {
            if (used[s]) continue;
            std::vector<std::size_t> comp{s};
            used[s] = true;
            std::vector<std::size_t> stack{s};
            while (!stack.empty()) {
                const std::size_t v = stack.back();
                stack.pop_back();
                for (std::size_t w : vs) {
                    if (!used[w] && g.entry(v, w) > 0) {
                        used[w] = true;
                        comp.push_back(w);
                        stack.push_back(w);
                    }
                }
            }
            std::sort(comp.begin(), comp.end());
            comps.push_back(std::move(comp));
        }
        return comps;
    };

    // Laufer on the induced subgraph.
    auto fundamental_on = [&](const std::vector<std::size_t>& comp) {
        Cycle y(std::vector<Int>(n, 0));
        for (std::size_t v : comp) y[v] = 1;
        for (;;) {
            bool raised = false;
            for (std::size_t v : comp) {
                Int row = 0;
                for (std::size_t w : comp) row += g.entry(v, w) * y[w];
                if (row > 0) {
                    ++y[v];
                    raised = true;
                    break;
                }
            }
            if (!raised) return y;
        }
    };

    std::set<Cycle> seen{z0};
    std::vector<UlrichCycleReport> out;
    out.push_back(make_report(g, z0));

    auto rec = [&](auto&& self, const Cycle& z, const std::vector<Cycle>& chain) -> void {
        std::vector<std::size_t> zero;
        for (std::size_t v = 0; v < n; ++v)
            if (g.dot_vertex(z, v) == 0) zero.push_back(v);
        for (const auto& comp : components_of(zero)) {
            bool covers_steep = true;
            for (std::size_t v : steep)
                if (std::find(comp.begin(), comp.end(), v) == comp.end()) covers_steep = false;
            if (!covers_steep) continue;
            const Cycle y = fundamental_on(comp);
            bool ok = true;
            for (std::size_t v : steep)
                if (y[v] != z0[v]) ok = false; // K(Z0 - Y) = 0 forces the Z0 coefficient there
            if (!ok) continue;
            if (!dominated_by(y, z0)) continue;
            const Cycle znext = z + y;
            if (!g.is_antinef(znext)) continue;
            for (std::size_t v : comp) {
                if (g.dot_vertex(z0, v) != 0)
                    throw validation_error(
                        "chain method: a step component leaves { E : E.Z0 = 0 }; "
                        "the two component readings diverge on this graph");
            }
            if (g.u_value(znext) != 0)
                throw std::logic_error("chain step produced a cycle with U != 0");
            // Continuations depend only on znext, so each cycle is expanded once;
            // the first witness chain is the one kept.
            if (seen.insert(znext).second) {
                std::vector<Cycle> next_chain = chain;
                next_chain.push_back(y);
                out.push_back(make_report(g, znext, next_chain));
                self(self, znext, next_chain);
            }
        }
    };
    rec(rec, z0, {});

    sort_reports(out);
    return out;
}

std::vector<UlrichCycleReport> enumerate_rdp(const DualGraph& g, Int bound,
                                             std::uint64_t node_cap) {
    if (g.multiplicity() != 2)
        throw validation_error("rdp method requires a rational double point graph");
    if (bound <= 0) bound = static_cast<Int>(g.size()) + 1;
    const Cycle& z0 = g.fundamental_cycle();
    std::vector<Int> box(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) box[i] = bound * z0[i];

    std::vector<UlrichCycleReport> out;
    scan_antinef_box(g, box, node_cap, [&](const Cycle& z) {
        if (z.is_zero()) return;
        if (g.dot(z, z0) != -2) return;
        if (!is_ulrich_cycle(g, z)) throw std::logic_error("Z.Z0 = -2 cycle failed the U test");
        out.push_back(make_report(g, z));
    });
    sort_reports(out);
    return out;
}

std::vector<UlrichCycleReport> enumerate_ulrich_cycles(const DualGraph& g) {
    return g.multiplicity() == 2 ? enumerate_rdp(g) : enumerate_chain(g);
}

std::vector<std::string> module_marks(const DualGraph& g, const Cycle& z) {
    if (!g.is_rdp()) throw validation_error("module marks are defined on RDP graphs only");
    const auto stats = g.ideal_stats(z);
    const Cycle& z0 = g.fundamental_cycle();
    std::vector<std::string> marks;
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (z[i] == z0[i] * stats.colength) marks.push_back(g.id_of(i));
    }
    return marks;
}

Int kato_length(const DualGraph& g, const Cycle& z, Int k0, const std::vector<Int>& k) {
    if (!g.is_rdp()) throw validation_error("kato length: RDP graph required");
    if (k.size() != g.size()) throw validation_error("kato length: multiplicity vector size mismatch");
    const auto stats = g.ideal_stats(z);
    const Cycle& z0 = g.fundamental_cycle();
    Int rank = k0;
    Int chern = 0;
    for (std::size_t i = 0; i < g.size(); ++i) {
        rank += k[i] * z0[i];
        chern += k[i] * z[i];
    }
    return rank * stats.colength + chern;
}

std::vector<std::vector<Int>> fund_linear_solutions(Int m) {
    if (m < 1) throw validation_error("fund linear: m must be >= 1");
    // x_1 = 1, x_2 <= 2 x_1, x_{i-1} + x_{i+1} <= 2 x_i, and x_{m-1} <= x_m.
    // The final monotonicity closes the system: without it the concavity
    // constraints admit descending tails such as (1, 2, 1).
    std::vector<std::vector<Int>> out;
    std::vector<Int> x(static_cast<std::size_t>(m));
    x[0] = 1;
    auto rec = [&](auto&& self, Int i) -> void {
        if (i == m) {
            if (m == 1 || x[static_cast<std::size_t>(m - 1)] >= x[static_cast<std::size_t>(m - 2)])
                out.emplace_back(x.begin(), x.end());
            return;
        }
        const Int upper = i == 1 ? 2 * x[0] : 2 * x[static_cast<std::size_t>(i - 1)] -
                                                  x[static_cast<std::size_t>(i - 2)];
        for (Int v = 1; v <= std::min<Int>(upper, m); ++v) {
            x[static_cast<std::size_t>(i)] = v;
            self(self, i + 1);
        }
    };
    if (m == 1) {
        out.push_back({1});
    } else {
        rec(rec, 1);
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace ulrich
