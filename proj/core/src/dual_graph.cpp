#include "ulrich/dual_graph.hpp"

#include <algorithm>

#include <boost/multiprecision/cpp_int.hpp>

#include "ulrich/errors.hpp"

namespace ulrich {

using boost::multiprecision::cpp_int;

bool Cycle::is_zero() const {
    return std::all_of(coefficients.begin(), coefficients.end(), [](Int c) { return c == 0; });
}

Cycle operator+(const Cycle& a, const Cycle& b) {
    if (a.size() != b.size()) throw validation_error("cycle sum: size mismatch");
    Cycle out = a;
    for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
    return out;
}

Cycle inf(const Cycle& a, const Cycle& b) {
    if (a.size() != b.size()) throw validation_error("cycle inf: size mismatch");
    Cycle out = a;
    for (std::size_t i = 0; i < b.size(); ++i) out[i] = std::min(out[i], b[i]);
    return out;
}

bool dominated_by(const Cycle& a, const Cycle& b) {
    if (a.size() != b.size()) throw validation_error("cycle comparison: size mismatch");
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] > b[i]) return false;
    }
    return true;
}

DualGraph::DualGraph(std::vector<VertexSpec> vertices, std::vector<EdgeSpec> edges) {
    verts_ = std::move(vertices);
    const std::size_t n = verts_.size();
    mat_.assign(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) mat_[i * n + i] = verts_[i].self_intersection;
    for (const EdgeSpec& e : edges) {
        const std::size_t i = index_of(e.a);
        const std::size_t j = index_of(e.b);
        if (i == j) throw validation_error("graph: self-edge at vertex " + e.a);
        if (e.multiplicity < 1) throw validation_error("graph: edge multiplicity must be >= 1");
        mat_[i * n + j] += e.multiplicity;
        mat_[j * n + i] += e.multiplicity;
    }
    validate_and_finish();
}

DualGraph DualGraph::from_matrix(std::vector<std::string> ids, std::vector<Int> matrix) {
    DualGraph g;
    const std::size_t n = ids.size();
    if (matrix.size() != n * n) throw validation_error("graph: matrix size mismatch");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (matrix[i * n + j] != matrix[j * n + i])
                throw validation_error("graph: asymmetric edges");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (matrix[i * n + j] < 0)
                throw validation_error("graph: negative intersection between distinct curves");
    g.verts_.reserve(n);
    for (std::size_t i = 0; i < n; ++i) g.verts_.push_back({std::move(ids[i]), matrix[i * n + i]});
    g.mat_ = std::move(matrix);
    g.validate_and_finish();
    return g;
}

void DualGraph::validate_and_finish() {
    const std::size_t n = verts_.size();
    if (n == 0) throw validation_error("graph: no vertices");
    for (std::size_t i = 0; i < n; ++i) {
        if (verts_[i].id.empty()) throw validation_error("graph: empty vertex id");
        for (std::size_t j = i + 1; j < n; ++j)
            if (verts_[i].id == verts_[j].id)
                throw validation_error("graph: duplicate vertex id " + verts_[i].id);
        if (verts_[i].self_intersection > -2)
            throw validation_error("graph: non-minimal vertex " + verts_[i].id +
                                   " (self-intersection >= -1)");
    }

    // Connectivity.
    std::vector<bool> seen(n, false);
    std::vector<std::size_t> stack{0};
    seen[0] = true;
    while (!stack.empty()) {
        const std::size_t v = stack.back();
        stack.pop_back();
        for (std::size_t w = 0; w < n; ++w) {
            if (w != v && mat_[v * n + w] > 0 && !seen[w]) {
                seen[w] = true;
                stack.push_back(w);
            }
        }
    }
    if (!std::all_of(seen.begin(), seen.end(), [](bool b) { return b; }))
        throw validation_error("graph: disconnected");

    // Negative definiteness: all leading principal minors of -M positive,
    // checked by fraction-free (Bareiss) elimination in exact arithmetic.
    std::vector<cpp_int> a(n * n);
    for (std::size_t i = 0; i < n * n; ++i) a[i] = -mat_[i];
    cpp_int prev = 1;
    for (std::size_t k = 0; k < n; ++k) {
        if (a[k * n + k] <= 0) throw validation_error("graph: not negative definite");
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                a[i * n + j] = (a[i * n + j] * a[k * n + k] - a[i * n + k] * a[k * n + j]) / prev;
            }
            a[i * n + k] = 0;
        }
        prev = a[k * n + k];
    }

    // Laufer's algorithm terminates on negative definite graphs.
    Cycle z(std::vector<Int>(n, 1));
    for (;;) {
        bool raised = false;
        for (std::size_t j = 0; j < n; ++j) {
            if (dot_vertex(z, j) > 0) {
                ++z[j];
                raised = true;
                break;
            }
        }
        if (!raised) break;
    }
    fundamental_ = std::move(z);
}

std::size_t DualGraph::index_of(const std::string& id) const {
    for (std::size_t i = 0; i < verts_.size(); ++i) {
        if (verts_[i].id == id) return i;
    }
    throw validation_error("graph: unknown vertex id " + id);
}

Int DualGraph::dot(const Cycle& z, const Cycle& w) const {
    const std::size_t n = verts_.size();
    if (z.size() != n || w.size() != n) throw validation_error("dot: cycle size mismatch");
    Int total = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (z[i] == 0) continue;
        Int row = 0;
        for (std::size_t j = 0; j < n; ++j) row += mat_[i * n + j] * w[j];
        total += z[i] * row;
    }
    return total;
}

Int DualGraph::dot_vertex(const Cycle& z, std::size_t j) const {
    const std::size_t n = verts_.size();
    Int row = 0;
    for (std::size_t i = 0; i < n; ++i) row += mat_[j * n + i] * z[i];
    return row;
}

bool DualGraph::is_antinef(const Cycle& z) const {
    for (std::size_t j = 0; j < verts_.size(); ++j) {
        if (dot_vertex(z, j) > 0) return false;
    }
    return true;
}

Int DualGraph::canonical_degree(const Cycle& z) const {
    if (z.size() != verts_.size()) throw validation_error("canonical degree: size mismatch");
    Int total = 0;
    for (std::size_t i = 0; i < verts_.size(); ++i)
        total += z[i] * (-verts_[i].self_intersection - 2);
    return total;
}

Int DualGraph::arithmetic_genus(const Cycle& z) const {
    if (z.is_zero()) throw validation_error("arithmetic genus: zero cycle");
    const Int s = dot(z, z) + canonical_degree(z);
    if (s % 2 != 0) throw validation_error("arithmetic genus: parity violation");
    return s / 2 + 1;
}

bool DualGraph::is_rdp() const {
    return std::all_of(verts_.begin(), verts_.end(),
                       [](const VertexSpec& v) { return v.self_intersection == -2; });
}

bool DualGraph::is_rational() const { return arithmetic_genus(fundamental_) == 0; }

DualGraph::IdealStats DualGraph::ideal_stats(const Cycle& z) const {
    if (z.is_zero() || !is_antinef(z))
        throw validation_error("ideal stats: cycle must be a nonzero anti-nef cycle");
    IdealStats s;
    s.colength = 1 - arithmetic_genus(z);
    s.multiplicity = -dot(z, z);
    s.mu = 1 - dot(z, fundamental_);
    return s;
}

Int DualGraph::u_value(const Cycle& z) const {
    if (z.is_zero()) throw validation_error("u value: zero cycle");
    return dot(fundamental_, z) * (arithmetic_genus(z) - 1) + dot(z, z);
}

Int DualGraph::u_delta(const Cycle& z, const Cycle& y) const {
    if (z.is_zero() || y.is_zero()) throw validation_error("u delta: cycles must be nonzero");
    const Cycle zp = z + y;
    const Int paZ = arithmetic_genus(z);
    const Int paY = arithmetic_genus(y);
    const Int yz0 = dot(y, fundamental_);
    const Int yz = dot(y, z);
    const Int zz0 = dot(z, fundamental_);
    const Int zpz0 = dot(zp, fundamental_);
    return yz0 * ((paZ - 1) + (paY - 1)) + yz * (zpz0 + 2) + (paY - 1) * (zz0 + 2) -
           canonical_degree(y);
}

} // namespace ulrich
