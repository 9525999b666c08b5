#pragma once

#include <string>
#include <vector>

#include "ulrich/semigroup.hpp" // for Int

namespace ulrich {

struct VertexSpec {
    std::string id;
    Int self_intersection = -2;
};

struct EdgeSpec {
    std::string a;
    std::string b;
    Int multiplicity = 1;
};

/// Effective cycle Z = sum a_i E_i, coefficients in graph vertex order.
struct Cycle {
    std::vector<Int> coefficients;

    Cycle() = default;
    explicit Cycle(std::vector<Int> coeffs) : coefficients(std::move(coeffs)) {}

    Int operator[](std::size_t i) const { return coefficients[i]; }
    Int& operator[](std::size_t i) { return coefficients[i]; }
    std::size_t size() const { return coefficients.size(); }
    bool is_zero() const;

    bool operator==(const Cycle& other) const { return coefficients == other.coefficients; }
    bool operator!=(const Cycle& other) const { return !(*this == other); }
    bool operator<(const Cycle& other) const { return coefficients < other.coefficients; }
};

Cycle operator+(const Cycle& a, const Cycle& b);
/// Componentwise minimum (the inf of two cycles).
Cycle inf(const Cycle& a, const Cycle& b);
/// Componentwise comparison a <= b.
bool dominated_by(const Cycle& a, const Cycle& b);

/// The weighted dual graph of a resolution of a normal surface singularity:
/// vertices are exceptional curves with self-intersection numbers <= -2,
/// edges carry intersection multiplicities. Construction validates that the
/// intersection form is negative definite and the graph is connected, and
/// computes the fundamental cycle. Immutable afterwards.
class DualGraph {
public:
    DualGraph(std::vector<VertexSpec> vertices, std::vector<EdgeSpec> edges);

    /// Builds from an explicit symmetric intersection matrix (row-major).
    /// Throws validation_error for an asymmetric matrix.
    static DualGraph from_matrix(std::vector<std::string> ids, std::vector<Int> matrix);

    std::size_t size() const { return verts_.size(); }
    const std::vector<VertexSpec>& vertices() const { return verts_; }
    const std::string& id_of(std::size_t i) const { return verts_[i].id; }
    std::size_t index_of(const std::string& id) const; // throws validation_error

    Int entry(std::size_t i, std::size_t j) const { return mat_[i * verts_.size() + j]; }

    /// Intersection pairing Z . W.
    Int dot(const Cycle& z, const Cycle& w) const;
    /// Z . E_j for the j-th vertex.
    Int dot_vertex(const Cycle& z, std::size_t j) const;

    bool is_antinef(const Cycle& z) const;

    /// The minimal nonzero anti-nef cycle, by Laufer's algorithm (start from
    /// all ones; raise the lowest-indexed vertex with positive degree).
    const Cycle& fundamental_cycle() const { return fundamental_; }

    /// K . Z via adjunction (K . E_i = -E_i^2 - 2); K itself is never formed.
    Int canonical_degree(const Cycle& z) const;

    /// p_a(Z) = (Z^2 + K.Z)/2 + 1 for effective nonzero Z.
    Int arithmetic_genus(const Cycle& z) const;

    /// Multiplicity e = -Z_0^2 of the singularity.
    Int multiplicity() const { return -dot(fundamental_, fundamental_); }

    /// All self-intersections equal -2 (rational double point graph).
    bool is_rdp() const;

    /// Artin's rationality test: p_a(Z_0) = 0.
    bool is_rational() const;

    struct IdealStats {
        Int colength = 0;
        Int multiplicity = 0;
        Int mu = 0;
    };

    /// Invariants of the integrally closed ideal represented by an anti-nef
    /// cycle: colength 1 - p_a(Z), multiplicity -Z^2, mu = 1 - Z.Z_0.
    /// Throws validation_error unless Z is anti-nef and nonzero.
    IdealStats ideal_stats(const Cycle& z) const;

    /// U(Z) = (Z_0 . Z)(p_a(Z) - 1) + Z^2; zero exactly on Ulrich cycles.
    Int u_value(const Cycle& z) const;

    /// Right-hand side of the difference identity
    /// U(Z + Y) - U(Z) = (Y.Z0){(p_a(Z)-1) + (p_a(Y)-1)} + (Y.Z)((Z+Y).Z0 + 2)
    ///                   + (p_a(Y)-1)(Z.Z0 + 2) - K.Y.
    Int u_delta(const Cycle& z, const Cycle& y) const;

private:
    DualGraph() = default;
    void validate_and_finish();

    std::vector<VertexSpec> verts_;
    std::vector<Int> mat_; // row-major intersection matrix
    Cycle fundamental_;
};

} // namespace ulrich
