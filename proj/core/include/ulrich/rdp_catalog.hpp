#pragma once

#include <string>
#include <vector>

#include "ulrich/dual_graph.hpp"

namespace ulrich {

enum class ADEFamily { A, D, E };

/// One of the simple singularity types A_n (n >= 1), D_n (n >= 4), E_6/E_7/E_8.
struct ADEType {
    ADEFamily family;
    Int index;

    ADEType(ADEFamily fam, Int n); // validates the index range
    std::string name() const;      // "A4", "D8", "E6", ...
};

/// Parses "A", "D" or "E" (case-insensitive). Throws validation_error.
ADEFamily parse_ade_family(const std::string& s);

/// Minimal-resolution dual graph: every vertex has self-intersection -2.
/// Vertex ids and order: A_n is the path E1..En; D_n is the chain E1..E_{n-2}
/// with the fork ends E_{n-1}, E_n attached to E_{n-2}; E_n is the chain
/// E2..En with the branch vertex E1 attached to E4.
DualGraph build_ade(const ADEType& t);

/// Coefficients of the fundamental cycle, in catalog vertex order; these are
/// the ranks of the nonfree indecomposable maximal Cohen-Macaulay modules.
std::vector<Int> mckay_ranks(const ADEType& t);

/// One ideal of the classification, stored symbolically.
struct IdealCatalogEntry {
    ADEType type;
    int dimension;                        // 1 or 2
    std::vector<std::string> generators;  // e.g. {"x", "y^2", "z"}
    std::string count_formula_tag;        // which counting case produced it
};

/// Nonparameter Ulrich ideals of the two-dimensional singularity of type t
/// (hypersurface k[[x,y,z]]/(f)); the list length matches enumerate_rdp.
std::vector<IdealCatalogEntry> surface_ideals(const ADEType& t);

/// Nonparameter Ulrich ideals of the one-dimensional simple singularity
/// k[[x,y]]/(f) of type t.
std::vector<IdealCatalogEntry> curve_ideals(const ADEType& t);

/// Expected number of Ulrich cycles: m, m+1, m+2, m+1, 2, 3, 2 for
/// A_2m, A_2m+1, D_2m, D_2m+1, E6, E7, E8.
std::size_t expected_ulrich_cycle_count(const ADEType& t);

/// Expected multiset of colengths of the Ulrich cycles, sorted ascending.
std::vector<Int> expected_ulrich_colengths(const ADEType& t);

/// One row of the simple good ideal tables for E6/E7/E8: the anti-nef cycle
/// with the colength and minimal number of generators of its ideal.
struct SimpleGoodIdealRow {
    std::vector<Int> coefficients;
    Int colength;
    Int mu;
};

/// The full table of simple good ideals for an E-type singularity.
/// Throws validation_error for A/D types.
const std::vector<SimpleGoodIdealRow>& simple_good_ideal_table(const ADEType& t);

} // namespace ulrich
