#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "octoder/matrix.hpp"

namespace octoder {

struct RrefResult {
    Matrix reduced;
    std::size_t rank;
    std::vector<std::size_t> pivot_cols; // strictly increasing
};

/// Reduced row echelon form by Gauss-Jordan elimination with exact division.
/// Pivot choice is the first nonzero entry in the current column; no
/// magnitude-based pivoting exists over an exact field.
[[nodiscard]] inline RrefResult rref(Matrix m) {
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    std::vector<std::size_t> pivots;
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < cols && pivot_row < rows; ++col) {
        std::size_t found = rows;
        for (std::size_t r = pivot_row; r < rows; ++r) {
            if (!m.at(r, col).is_zero()) {
                found = r;
                break;
            }
        }
        if (found == rows) continue;
        if (found != pivot_row)
            for (std::size_t c = col; c < cols; ++c) std::swap(m.at(pivot_row, c), m.at(found, c));
        const Scalar inv = m.at(pivot_row, col).inverse();
        for (std::size_t c = col; c < cols; ++c)
            if (!m.at(pivot_row, c).is_zero()) m.at(pivot_row, c) *= inv;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == pivot_row || m.at(r, col).is_zero()) continue;
            const Scalar factor = m.at(r, col);
            for (std::size_t c = col; c < cols; ++c)
                if (!m.at(pivot_row, c).is_zero()) m.at(r, c) -= factor * m.at(pivot_row, c);
        }
        pivots.push_back(col);
        ++pivot_row;
    }
    return RrefResult{std::move(m), pivots.size(), std::move(pivots)};
}

[[nodiscard]] inline std::size_t rank(const Matrix& m) { return rref(m).rank; }

/// A linear subspace of F^n held in canonical form: the basis matrix is the
/// RREF of any spanning set, zero rows dropped. Two subspaces are equal as
/// sets iff their canonical bases are entrywise identical.
class Subspace {
  public:
    [[nodiscard]] static Subspace zero(const FieldSpec& field, std::size_t ambient) {
        return Subspace(Matrix(field, 0, ambient));
    }

    [[nodiscard]] static Subspace full(const FieldSpec& field, std::size_t ambient) {
        return Subspace(Matrix::identity(field, ambient));
    }

    [[nodiscard]] static Subspace from_span(const FieldSpec& field, std::size_t ambient,
                                            const std::vector<Vec>& spanning) {
        RrefResult r = rref(Matrix::from_rows(field, ambient, spanning));
        Matrix basis(field, r.rank, ambient);
        for (std::size_t i = 0; i < r.rank; ++i)
            for (std::size_t c = 0; c < ambient; ++c) basis.at(i, c) = r.reduced.at(i, c);
        return Subspace(std::move(basis));
    }

    /// Rows must already be canonical RREF rows; used internally.
    [[nodiscard]] static Subspace from_canonical_basis(Matrix basis) {
        return Subspace(std::move(basis));
    }

    [[nodiscard]] const FieldSpec& field() const noexcept { return basis_.field(); }
    [[nodiscard]] std::size_t ambient_dim() const noexcept { return basis_.cols(); }
    [[nodiscard]] std::size_t dim() const noexcept { return basis_.rows(); }
    [[nodiscard]] const Matrix& basis() const noexcept { return basis_; }

    /// Coefficients of v in the canonical basis, or nullopt if v lies outside.
    [[nodiscard]] std::optional<Vec> coordinates(const Vec& v) const {
        if (v.size() != ambient_dim()) throw DimensionError("coordinates: ambient dimension differs");
        Vec residual = v;
        Vec coeffs;
        coeffs.reserve(dim());
        for (std::size_t i = 0; i < dim(); ++i) {
            const std::size_t p = pivot_of_row(i);
            const Scalar c = residual[p];
            coeffs.push_back(c);
            if (!c.is_zero())
                for (std::size_t j = p; j < ambient_dim(); ++j)
                    if (!basis_.at(i, j).is_zero()) residual[j] -= c * basis_.at(i, j);
        }
        if (!is_zero_vec(residual)) return std::nullopt;
        return coeffs;
    }

    [[nodiscard]] bool contains(const Vec& v) const { return coordinates(v).has_value(); }

    /// Set inclusion this <= other.
    [[nodiscard]] bool leq(const Subspace& other) const {
        if (ambient_dim() != other.ambient_dim())
            throw DimensionError("subspace comparison: ambient dimensions differ");
        if (dim() > other.dim()) return false;
        for (std::size_t i = 0; i < dim(); ++i)
            if (!other.contains(basis_.row(i))) return false;
        return true;
    }

    /// Canonical bases make set equality an entrywise comparison.
    [[nodiscard]] friend bool operator==(const Subspace& a, const Subspace& b) {
        if (a.ambient_dim() != b.ambient_dim())
            throw DimensionError("subspace comparison: ambient dimensions differ");
        return a.basis_ == b.basis_;
    }

  private:
    explicit Subspace(Matrix basis) : basis_(std::move(basis)) {}

    [[nodiscard]] std::size_t pivot_of_row(std::size_t i) const {
        for (std::size_t c = 0; c < ambient_dim(); ++c)
            if (!basis_.at(i, c).is_zero()) return c;
        throw DimensionError("canonical basis contains a zero row");
    }

    Matrix basis_;
};

/// Kernel {x : m x = 0} as a canonical subspace of F^cols.
[[nodiscard]] inline Subspace nullspace(const Matrix& m) {
    RrefResult r = rref(m);
    const std::size_t n = m.cols();
    std::vector<bool> is_pivot(n, false);
    for (std::size_t p : r.pivot_cols) is_pivot[p] = true;
    std::vector<Vec> kernel;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        Vec v = zero_vec(m.field(), n);
        v[f] = Scalar::one(m.field());
        for (std::size_t t = 0; t < r.rank; ++t) v[r.pivot_cols[t]] = -r.reduced.at(t, f);
        kernel.push_back(std::move(v));
    }
    return Subspace::from_span(m.field(), n, kernel);
}

/// One solution of a x = b with all free variables set to zero, read off the
/// RREF of the augmented system; nullopt when inconsistent.
[[nodiscard]] inline std::optional<Vec> solve(const Matrix& a, const Vec& b) {
    if (b.size() != a.rows()) throw DimensionError("solve: right-hand side length differs");
    RrefResult r = rref(a.augment(Matrix::from_rows(a.field(), b.size(), {b}).transpose()));
    Vec x = zero_vec(a.field(), a.cols());
    for (std::size_t t = 0; t < r.rank; ++t) {
        if (r.pivot_cols[t] == a.cols()) return std::nullopt; // pivot in the b column
        x[r.pivot_cols[t]] = r.reduced.at(t, a.cols());
    }
    return x;
}

[[nodiscard]] inline Subspace row_space(const Matrix& m) {
    std::vector<Vec> rows;
    rows.reserve(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(m.row(r));
    return Subspace::from_span(m.field(), m.cols(), rows);
}

[[nodiscard]] inline Subspace column_space(const Matrix& m) { return row_space(m.transpose()); }

/// Functionals vanishing on s, as vectors under the dot-product pairing:
/// {f in F^n : f . v = 0 for all v in s}. dim = n - dim s.
[[nodiscard]] inline Subspace annihilator(const Subspace& s) { return nullspace(s.basis()); }

} // namespace octoder
