#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

#include "octoder/algebra.hpp"
#include "octoder/linalg.hpp"

namespace octoder {

/// Linear maps on the algebra are n x n matrices acting on coordinates;
/// column j is the image of e_j.
using LinearMap = Matrix;

/// The Leibniz constraint system for D(e_i e_j) = D(e_i) e_j + e_i D(e_j):
/// one row per triple (i, j, k) (the e_k component of the identity at
/// (e_i, e_j)), one column per unknown map entry, vectorized row-major.
/// Shape n^3 x n^2; the kernel is exactly the space of derivations.
[[nodiscard]] inline Matrix leibniz_system(const StructureConstants& sc) {
    const std::size_t n = sc.dim();
    Matrix system(sc.field(), n * n * n, n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                const std::size_t row = (i * n + j) * n + k;
                // D(e_i e_j) contributes +c[i][j][m] to unknown d[k][m].
                for (std::size_t m = 0; m < n; ++m)
                    if (!sc.c(i, j, m).is_zero()) system.at(row, k * n + m) += sc.c(i, j, m);
                // D(e_i) e_j contributes -c[r][j][k] to unknown d[r][i].
                for (std::size_t r = 0; r < n; ++r)
                    if (!sc.c(r, j, k).is_zero()) system.at(row, r * n + i) -= sc.c(r, j, k);
                // e_i D(e_j) contributes -c[i][r][k] to unknown d[r][j].
                for (std::size_t r = 0; r < n; ++r)
                    if (!sc.c(i, r, k).is_zero()) system.at(row, r * n + j) -= sc.c(i, r, k);
            }
    return system;
}

/// A basis of a space of linear maps: `maps` lists the basis, `span` is the
/// same space in vectorized canonical form. For library-built bases, maps[t]
/// devectorizes row t of span.basis(); hand-assembled aggregates may break
/// that correspondence (lie_closure_check detects maps straying off span).
struct DerivationBasis {
    FieldSpec field;
    std::size_t algebra_dim;
    std::vector<LinearMap> maps;
    Subspace span;
};

/// All derivations of sc: the kernel of the Leibniz system. Basis maps are
/// the devectorized canonical kernel basis, ordered by leading entry.
[[nodiscard]] inline DerivationBasis derivation_space(const StructureConstants& sc) {
    const std::size_t n = sc.dim();
    Subspace kernel = nullspace(leibniz_system(sc));
    std::vector<LinearMap> maps;
    maps.reserve(kernel.dim());
    for (std::size_t t = 0; t < kernel.dim(); ++t)
        maps.push_back(devectorize_row_major(sc.field(), n, kernel.basis().row(t)));
    return DerivationBasis{sc.field(), n, std::move(maps), std::move(kernel)};
}

/// Direct Leibniz check of a single map on all basis pairs.
[[nodiscard]] inline bool is_derivation(const StructureConstants& sc, const LinearMap& d) {
    const std::size_t n = sc.dim();
    if (d.rows() != n || d.cols() != n) throw DimensionError("map shape != algebra dimension");
    if (d.field() != sc.field())
        throw FieldMismatchError("map field " + d.field().to_string() + " != algebra field " +
                                 sc.field().to_string());
    std::vector<Vec> basis, image;
    for (std::size_t i = 0; i < n; ++i) {
        basis.push_back(sc.basis_element(i));
        image.push_back(d.col(i));
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Vec lhs = d.apply(sc.product_basis(i, j));
            const Vec rhs = vec_add(sc.multiply(image[i], basis[j]), sc.multiply(basis[i], image[j]));
            if (lhs != rhs) return false;
        }
    return true;
}

namespace detail {

struct PatternEntry {
    int row, col, sign;
};

/// The 14-parameter closed form of an octonion derivation, one parameter per
/// antisymmetric position pair family. Parameter k contributes sign at
/// (row, col) for each of its four entries; rows and columns 0 are zero.
/// Hard-coded independently of the Leibniz solver so the two routes can be
/// compared.
inline constexpr std::array<std::array<PatternEntry, 4>, 14> derivation_pattern_entries = {{
    {{{1, 2, +1}, {2, 1, -1}, {5, 6, +1}, {6, 5, -1}}}, // a12
    {{{1, 3, +1}, {3, 1, -1}, {5, 7, +1}, {7, 5, -1}}}, // a13
    {{{1, 4, +1}, {3, 6, -1}, {4, 1, -1}, {6, 3, +1}}}, // a14
    {{{1, 5, +1}, {3, 7, -1}, {5, 1, -1}, {7, 3, +1}}}, // a15
    {{{1, 6, +1}, {3, 4, +1}, {4, 3, -1}, {6, 1, -1}}}, // a16
    {{{1, 7, +1}, {3, 5, +1}, {5, 3, -1}, {7, 1, -1}}}, // a17
    {{{2, 3, +1}, {3, 2, -1}, {6, 7, +1}, {7, 6, -1}}}, // a23
    {{{2, 4, +1}, {3, 5, +1}, {4, 2, -1}, {5, 3, -1}}}, // a24
    {{{2, 5, +1}, {3, 4, -1}, {4, 3, +1}, {5, 2, -1}}}, // a25
    {{{2, 6, +1}, {3, 7, -1}, {6, 2, -1}, {7, 3, +1}}}, // a26
    {{{2, 7, +1}, {3, 6, +1}, {6, 3, -1}, {7, 2, -1}}}, // a27
    {{{4, 5, +1}, {5, 4, -1}, {6, 7, +1}, {7, 6, -1}}}, // a45
    {{{4, 6, +1}, {5, 7, -1}, {6, 4, -1}, {7, 5, +1}}}, // a46
    {{{4, 7, +1}, {5, 6, +1}, {6, 5, -1}, {7, 4, -1}}}, // a47
}};

inline constexpr std::array<const char*, 14> derivation_pattern_names = {
    "a12", "a13", "a14", "a15", "a16", "a17", "a23",
    "a24", "a25", "a26", "a27", "a45", "a46", "a47",
};

} // namespace detail

/// Number of parameters in the octonion derivation pattern.
inline constexpr std::size_t derivation_pattern_size = 14;

/// The 8 x 8 map obtained by setting pattern parameter `param` to one and the
/// other thirteen to zero.
[[nodiscard]] inline LinearMap derivation_pattern_map(const FieldSpec& field, std::size_t param) {
    if (param >= derivation_pattern_size) throw DimensionError("pattern parameter out of range");
    LinearMap m(field, 8, 8);
    const Scalar one = Scalar::one(field);
    for (const auto& e : detail::derivation_pattern_entries[param])
        m.at(static_cast<std::size_t>(e.row), static_cast<std::size_t>(e.col)) =
            e.sign > 0 ? one : -one;
    return m;
}

[[nodiscard]] inline const char* derivation_pattern_name(std::size_t param) {
    return detail::derivation_pattern_names.at(param);
}

/// Span of the 14 pattern maps, vectorized; ambient dimension 64.
[[nodiscard]] inline Subspace derivation_pattern_space(const FieldSpec& field) {
    std::vector<Vec> rows;
    rows.reserve(derivation_pattern_size);
    for (std::size_t k = 0; k < derivation_pattern_size; ++k)
        rows.push_back(vectorize_row_major(derivation_pattern_map(field, k)));
    return Subspace::from_span(field, 64, rows);
}

/// True iff the Leibniz kernel of sc coincides, as a subspace, with the
/// hard-coded 14-parameter pattern. Requires an 8-dimensional algebra.
[[nodiscard]] inline bool verify_derivation_pattern(const StructureConstants& sc) {
    if (sc.dim() != 8)
        throw DimensionError("derivation pattern is specific to 8-dimensional algebras");
    return derivation_space(sc).span == derivation_pattern_space(sc.field());
}

[[nodiscard]] inline LinearMap commutator(const LinearMap& a, const LinearMap& b) {
    return a * b - b * a;
}

/// True iff every listed map lies in span and every pairwise commutator of
/// listed maps lies in span.
[[nodiscard]] inline bool lie_closure_check(const DerivationBasis& db) {
    for (const LinearMap& m : db.maps)
        if (!db.span.contains(vectorize_row_major(m))) return false;
    for (std::size_t i = 0; i < db.maps.size(); ++i)
        for (std::size_t j = i + 1; j < db.maps.size(); ++j)
            if (!db.span.contains(vectorize_row_major(commutator(db.maps[i], db.maps[j]))))
                return false;
    return true;
}

/// Rank of the Killing form K(x, y) = trace(ad x . ad y) of the Lie algebra
/// spanned by db. Computed in the canonical span basis (the rank is invariant
/// under base change). Throws ClosureError if db is not commutator-closed.
[[nodiscard]] inline std::size_t killing_form_rank(const DerivationBasis& db) {
    if (!lie_closure_check(db))
        throw ClosureError("Killing form requires a commutator-closed family of maps");
    const std::size_t d = db.span.dim();
    const std::size_t n = db.algebra_dim;
    std::vector<LinearMap> basis;
    basis.reserve(d);
    for (std::size_t t = 0; t < d; ++t)
        basis.push_back(devectorize_row_major(db.field, n, db.span.basis().row(t)));
    // s[a][x] = coordinates of [basis_a, basis_x] in the span basis.
    std::vector<std::vector<Vec>> s(d, std::vector<Vec>(d, zero_vec(db.field, d)));
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t x = a + 1; x < d; ++x) {
            auto coords = db.span.coordinates(vectorize_row_major(commutator(basis[a], basis[x])));
            if (!coords)
                throw ClosureError("commutator of span basis maps escapes the span");
            s[a][x] = *coords;
            s[x][a] = vec_scale(-Scalar::one(db.field), *coords);
        }
    Matrix killing(db.field, d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t x = 0; x < d; ++x)
                for (std::size_t y = 0; y < d; ++y)
                    if (!s[i][x][y].is_zero() && !s[j][y][x].is_zero())
                        killing.at(i, j) += s[i][x][y] * s[j][y][x];
    return rank(killing);
}

} // namespace octoder
