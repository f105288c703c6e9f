#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "octoder/linalg.hpp"
#include "octoder/matrix.hpp"

namespace octoder {

/// A finite-dimensional algebra presented by structure constants:
/// e_i e_j = sum_k c[i][j][k] e_k. Elements are coordinate vectors in the
/// basis e_0 .. e_{n-1}. The tensor is mutable during construction and then
/// treated as read-only.
class StructureConstants {
  public:
    StructureConstants(std::string name, const FieldSpec& field, std::size_t dim)
        : name_(std::move(name)), field_(field), dim_(dim),
          tensor_(dim * dim * dim, Scalar::zero(field)) {}

    [[nodiscard]] const std::string& name() const noexcept { return name_; }
    [[nodiscard]] const FieldSpec& field() const noexcept { return field_; }
    [[nodiscard]] std::size_t dim() const noexcept { return dim_; }

    [[nodiscard]] const Scalar& c(std::size_t i, std::size_t j, std::size_t k) const {
        return tensor_[index(i, j, k)];
    }

    void set_c(std::size_t i, std::size_t j, std::size_t k, Scalar value) {
        tensor_[index(i, j, k)] = std::move(value);
    }

    /// e_i e_j as a coordinate vector.
    [[nodiscard]] Vec product_basis(std::size_t i, std::size_t j) const {
        Vec out = zero_vec(field_, dim_);
        for (std::size_t k = 0; k < dim_; ++k) out[k] = c(i, j, k);
        return out;
    }

    /// Bilinear product of arbitrary elements.
    [[nodiscard]] Vec multiply(const Vec& a, const Vec& b) const {
        require_element(a);
        require_element(b);
        Vec out = zero_vec(field_, dim_);
        for (std::size_t i = 0; i < dim_; ++i) {
            if (a[i].is_zero()) continue;
            for (std::size_t j = 0; j < dim_; ++j) {
                if (b[j].is_zero()) continue;
                const Scalar ab = a[i] * b[j];
                for (std::size_t k = 0; k < dim_; ++k)
                    if (!c(i, j, k).is_zero()) out[k] += ab * c(i, j, k);
            }
        }
        return out;
    }

    /// (xy)z - x(yz).
    [[nodiscard]] Vec associator(const Vec& x, const Vec& y, const Vec& z) const {
        return vec_sub(multiply(multiply(x, y), z), multiply(x, multiply(y, z)));
    }

    [[nodiscard]] Vec basis_element(std::size_t i) const { return basis_vec(field_, dim_, i); }
    [[nodiscard]] Vec zero_element() const { return zero_vec(field_, dim_); }

    void require_element(const Vec& x) const {
        if (x.size() != dim_) throw DimensionError("element length != algebra dimension");
        for (const Scalar& s : x)
            if (s.field() != field_)
                throw FieldMismatchError("element field " + s.field().to_string() +
                                         " != algebra field " + field_.to_string());
    }

  private:
    [[nodiscard]] std::size_t index(std::size_t i, std::size_t j, std::size_t k) const {
        if (i >= dim_ || j >= dim_ || k >= dim_)
            throw DimensionError("structure constant index out of range");
        return (i * dim_ + j) * dim_ + k;
    }

    std::string name_;
    FieldSpec field_;
    std::size_t dim_;
    std::vector<Scalar> tensor_;
};

namespace detail {

/// The seven index triples (i, j, k) with eps_{ijk} = +1; eps is totally
/// antisymmetric in its three indices and zero otherwise.
inline constexpr std::array<std::array<int, 3>, 7> octonion_eps_triples = {{
    {1, 2, 3}, {1, 4, 5}, {1, 7, 6}, {2, 4, 6}, {2, 5, 7}, {3, 4, 7}, {3, 6, 5},
}};

} // namespace detail

/// The octonion algebra over the given field, built from the defining
/// formula: e_0 is the unit, e_i e_j = -delta_ij e_0 + eps_ijk e_k for
/// nonzero i, j, with eps the antisymmetrization of the seven triples above.
[[nodiscard]] inline StructureConstants build_octonion(const FieldSpec& field) {
    StructureConstants sc("octonion", field, 8);
    const Scalar one = Scalar::one(field);
    int eps[8][8][8] = {};
    for (const auto& t : detail::octonion_eps_triples) {
        const int a = t[0], b = t[1], c = t[2];
        eps[a][b][c] = eps[b][c][a] = eps[c][a][b] = 1;
        eps[a][c][b] = eps[c][b][a] = eps[b][a][c] = -1;
    }
    for (std::size_t j = 0; j < 8; ++j) sc.set_c(0, j, j, one); // e_0 e_j = e_j
    for (std::size_t i = 1; i < 8; ++i) {
        sc.set_c(i, 0, i, one); // e_i e_0 = e_i
        sc.set_c(i, i, 0, -one); // e_i e_i = -e_0
        for (std::size_t j = 1; j < 8; ++j) {
            if (i == j) continue;
            for (std::size_t k = 1; k < 8; ++k)
                if (eps[i][j][k] != 0)
                    sc.set_c(i, j, k, eps[i][j][k] > 0 ? one : -one);
        }
    }
    return sc;
}

namespace detail {

/// Independently transcribed octonion multiplication table: row i, column j
/// holds (sign, index) with e_i e_j = sign * e_index. This is NOT generated
/// from the eps expansion above; table_consistency_check pits the two
/// transcriptions against each other.
inline constexpr int octonion_ref_sign[8][8] = {
    {+1, +1, +1, +1, +1, +1, +1, +1},
    {+1, -1, +1, -1, +1, -1, -1, +1},
    {+1, -1, -1, +1, +1, +1, -1, -1},
    {+1, +1, -1, -1, +1, -1, +1, -1},
    {+1, -1, -1, -1, -1, +1, +1, +1},
    {+1, +1, -1, +1, -1, -1, -1, +1},
    {+1, +1, +1, -1, -1, +1, -1, -1},
    {+1, -1, +1, +1, -1, -1, +1, -1},
};

inline constexpr int octonion_ref_index[8][8] = {
    {0, 1, 2, 3, 4, 5, 6, 7},
    {1, 0, 3, 2, 5, 4, 7, 6},
    {2, 3, 0, 1, 6, 7, 4, 5},
    {3, 2, 1, 0, 7, 6, 5, 4},
    {4, 5, 6, 7, 0, 1, 2, 3},
    {5, 4, 7, 6, 1, 0, 3, 2},
    {6, 7, 4, 5, 2, 3, 0, 1},
    {7, 6, 5, 4, 3, 2, 1, 0},
};

} // namespace detail

/// The reference value of e_i e_j from the independent table transcription.
[[nodiscard]] inline Vec octonion_reference_product(const FieldSpec& field, std::size_t i,
                                                    std::size_t j) {
    if (i >= 8 || j >= 8) throw DimensionError("octonion basis index out of range");
    Vec out = zero_vec(field, 8);
    const Scalar one = Scalar::one(field);
    out[static_cast<std::size_t>(detail::octonion_ref_index[i][j])] =
        detail::octonion_ref_sign[i][j] > 0 ? one : -one;
    return out;
}

/// True iff sc reproduces the reference octonion table on all 64 basis
/// products. Requires an 8-dimensional algebra.
[[nodiscard]] inline bool table_consistency_check(const StructureConstants& sc) {
    if (sc.dim() != 8) return false;
    for (std::size_t i = 0; i < 8; ++i)
        for (std::size_t j = 0; j < 8; ++j)
            if (sc.product_basis(i, j) != octonion_reference_product(sc.field(), i, j)) return false;
    return true;
}

/// Alternativity on the basis, in linearized form so the check is exact over
/// any field of characteristic != 2: associator(x,x,y) = associator(x,y,y) = 0
/// together with antisymmetry of the associator in its first and last pairs.
[[nodiscard]] inline bool check_alternative(const StructureConstants& sc) {
    const std::size_t n = sc.dim();
    std::vector<Vec> basis;
    basis.reserve(n);
    for (std::size_t i = 0; i < n; ++i) basis.push_back(sc.basis_element(i));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (!is_zero_vec(sc.associator(basis[i], basis[i], basis[j]))) return false;
            if (!is_zero_vec(sc.associator(basis[i], basis[j], basis[j]))) return false;
        }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                const Vec a = sc.associator(basis[i], basis[j], basis[k]);
                if (!is_zero_vec(vec_add(a, sc.associator(basis[j], basis[i], basis[k]))))
                    return false;
                if (!is_zero_vec(vec_add(a, sc.associator(basis[i], basis[k], basis[j]))))
                    return false;
            }
    return true;
}

/// e_i e_j = -e_j e_i for distinct nonzero basis indices.
[[nodiscard]] inline bool check_anticommutative_imaginaries(const StructureConstants& sc) {
    for (std::size_t i = 1; i < sc.dim(); ++i)
        for (std::size_t j = 1; j < sc.dim(); ++j) {
            if (i == j) continue;
            if (!is_zero_vec(vec_add(sc.product_basis(i, j), sc.product_basis(j, i)))) return false;
        }
    return true;
}

} // namespace octoder
