#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ulrich/dual_graph.hpp"

namespace ulrich {

/// An Ulrich cycle together with the invariants of its ideal.
struct UlrichCycleReport {
    Cycle cycle;
    Int colength = 0;
    Int multiplicity = 0;
    Int mu = 0;
    Int u = 0;                             // always 0
    std::vector<Cycle> chain;              // Y-steps of the chain decomposition, when found that way
    std::vector<std::string> module_marks; // vertices whose module is Ulrich (RDP graphs only)
};

/// Z is an Ulrich cycle iff it is effective nonzero, anti-nef, U(Z) = 0 and
/// mu >= 3. On RDP graphs this is equivalent to Z.Z_0 = -2; both criteria are
/// evaluated and must agree.
bool is_ulrich_cycle(const DualGraph& g, const Cycle& z);

struct CycleEnumerationResult {
    std::vector<UlrichCycleReport> reports;
    /// Some emitted cycle touched the search box boundary; the bound should be raised.
    bool touched_boundary = false;
};

/// Exhaustive scan of the box 0 <= Z <= bound * Z_0, filtered by
/// is_ulrich_cycle; the oracle for the structured enumerations. Walks only
/// anti-nef-completable prefixes; aborts via resource_limit_error when more
/// than node_cap assignments are visited.
CycleEnumerationResult enumerate_bruteforce(const DualGraph& g, Int bound,
                                            std::uint64_t node_cap = std::uint64_t{1} << 26);

/// Chain algorithm for multiplicity >= 3: grow from Z_0 by adding the
/// fundamental cycle of a connected component of { E : E . Z = 0 } that
/// contains every vertex with self-intersection <= -3 with its full Z_0
/// coefficient. Throws validation_error on RDP graphs (multiplicity 2).
std::vector<UlrichCycleReport> enumerate_chain(const DualGraph& g);

/// RDP route: all anti-nef Z with Z . Z_0 = -2, searched inside the box
/// bound * Z_0 (bound defaults to #vertices + 1 when <= 0). Throws
/// validation_error unless the graph has multiplicity 2.
std::vector<UlrichCycleReport> enumerate_rdp(const DualGraph& g, Int bound = 0,
                                             std::uint64_t node_cap = std::uint64_t{1} << 26);

/// Dispatches to enumerate_rdp on RDP graphs and enumerate_chain otherwise.
std::vector<UlrichCycleReport> enumerate_ulrich_cycles(const DualGraph& g);

/// Vertices i with a_i = n_i * colength(Z): the indecomposable modules that are
/// Ulrich with respect to the ideal of Z. Requires an RDP graph.
std::vector<std::string> module_marks(const DualGraph& g, const Cycle& z);

/// Length l(M/IM) for M = A^{k0} + sum M_i^{k_i} over an RDP, by the
/// Riemann-Roch formula: rank * colength(Z) + sum k_i a_i with
/// rank = k0 + sum k_i n_i. The multiplicity vector is indexed by vertex.
Int kato_length(const DualGraph& g, const Cycle& z, Int k0, const std::vector<Int>& k);

/// All positive integer solutions of x_1 = 1, x_2 <= 2 x_1,
/// x_{i-1} + x_{i+1} <= 2 x_i, by bounded search; equals
/// (1, 2, ..., k, k+1, ..., k+1) for k = 0 .. m-1.
std::vector<std::vector<Int>> fund_linear_solutions(Int m);

} // namespace ulrich
