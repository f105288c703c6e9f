#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "octoder/errors.hpp"
#include "octoder/scalar.hpp"

namespace octoder {

/// Coordinate vectors. All entries share one field; consumers check lengths.
using Vec = std::vector<Scalar>;

[[nodiscard]] inline Vec zero_vec(const FieldSpec& field, std::size_t n) {
    return Vec(n, Scalar::zero(field));
}

[[nodiscard]] inline Vec basis_vec(const FieldSpec& field, std::size_t n, std::size_t i) {
    if (i >= n) throw DimensionError("basis index out of range");
    Vec v = zero_vec(field, n);
    v[i] = Scalar::one(field);
    return v;
}

[[nodiscard]] inline bool is_zero_vec(const Vec& v) {
    for (const Scalar& s : v)
        if (!s.is_zero()) return false;
    return true;
}

inline void require_same_length(const Vec& a, const Vec& b) {
    if (a.size() != b.size())
        throw DimensionError("vector lengths differ: " + std::to_string(a.size()) + " vs " +
                             std::to_string(b.size()));
}

[[nodiscard]] inline Vec vec_add(Vec a, const Vec& b) {
    require_same_length(a, b);
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return a;
}

[[nodiscard]] inline Vec vec_sub(Vec a, const Vec& b) {
    require_same_length(a, b);
    for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
    return a;
}

[[nodiscard]] inline Vec vec_scale(const Scalar& c, Vec v) {
    for (Scalar& s : v) s *= c;
    return v;
}

[[nodiscard]] inline Scalar dot(const Vec& a, const Vec& b) {
    require_same_length(a, b);
    if (a.empty()) throw DimensionError("dot product of empty vectors has no field");
    Scalar acc = Scalar::zero(a.front().field());
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!a[i].is_zero() && !b[i].is_zero()) acc += a[i] * b[i];
    return acc;
}

/// Dense matrix over one field, row-major storage. Zero rows/columns allowed.
class Matrix {
  public:
    Matrix(const FieldSpec& field, std::size_t rows, std::size_t cols)
        : field_(field), rows_(rows), cols_(cols), entries_(rows * cols, Scalar::zero(field)) {}

    [[nodiscard]] static Matrix identity(const FieldSpec& field, std::size_t n) {
        Matrix m(field, n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(field);
        return m;
    }

    /// Builds from row vectors; `cols` disambiguates the empty case.
    [[nodiscard]] static Matrix from_rows(const FieldSpec& field, std::size_t cols,
                                          const std::vector<Vec>& rows) {
        Matrix m(field, rows.size(), cols);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (rows[r].size() != cols) throw DimensionError("ragged rows in matrix construction");
            for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = rows[r][c];
        }
        return m;
    }

    [[nodiscard]] const FieldSpec& field() const noexcept { return field_; }
    [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
    [[nodiscard]] std::size_t cols() const noexcept { return cols_; }

    [[nodiscard]] Scalar& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    [[nodiscard]] const Scalar& at(std::size_t r, std::size_t c) const {
        return entries_[r * cols_ + c];
    }

    [[nodiscard]] Vec row(std::size_t r) const {
        Vec out;
        out.reserve(cols_);
        for (std::size_t c = 0; c < cols_; ++c) out.push_back(at(r, c));
        return out;
    }

    [[nodiscard]] Vec col(std::size_t c) const {
        Vec out;
        out.reserve(rows_);
        for (std::size_t r = 0; r < rows_; ++r) out.push_back(at(r, c));
        return out;
    }

    /// Matrix times column vector.
    [[nodiscard]] Vec apply(const Vec& x) const {
        if (x.size() != cols_) throw DimensionError("apply: vector length != column count");
        Vec out = zero_vec(field_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c)
                if (!at(r, c).is_zero() && !x[c].is_zero()) out[r] += at(r, c) * x[c];
        return out;
    }

    [[nodiscard]] Matrix transpose() const {
        Matrix out(field_, cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) out.at(c, r) = at(r, c);
        return out;
    }

    /// [this | rhs] side by side.
    [[nodiscard]] Matrix augment(const Matrix& rhs) const {
        if (rhs.rows_ != rows_) throw DimensionError("augment: row counts differ");
        Matrix out(field_, rows_, cols_ + rhs.cols_);
        for (std::size_t r = 0; r < rows_; ++r) {
            for (std::size_t c = 0; c < cols_; ++c) out.at(r, c) = at(r, c);
            for (std::size_t c = 0; c < rhs.cols_; ++c) out.at(r, cols_ + c) = rhs.at(r, c);
        }
        return out;
    }

    /// [this on top of rhs].
    [[nodiscard]] Matrix stack(const Matrix& rhs) const {
        if (rhs.cols_ != cols_) throw DimensionError("stack: column counts differ");
        Matrix out(field_, rows_ + rhs.rows_, cols_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) out.at(r, c) = at(r, c);
        for (std::size_t r = 0; r < rhs.rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) out.at(rows_ + r, c) = rhs.at(r, c);
        return out;
    }

    [[nodiscard]] friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw DimensionError("matrix product: inner dimensions differ");
        Matrix out(a.field_, a.rows_, b.cols_);
        for (std::size_t r = 0; r < a.rows_; ++r)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const Scalar& f = a.at(r, k);
                if (f.is_zero()) continue;
                for (std::size_t c = 0; c < b.cols_; ++c)
                    if (!b.at(k, c).is_zero()) out.at(r, c) += f * b.at(k, c);
            }
        return out;
    }

    [[nodiscard]] friend Matrix operator+(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionError("matrix sum: shapes differ");
        Matrix out = a;
        for (std::size_t i = 0; i < out.entries_.size(); ++i) out.entries_[i] += b.entries_[i];
        return out;
    }

    [[nodiscard]] friend Matrix operator-(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw DimensionError("matrix difference: shapes differ");
        Matrix out = a;
        for (std::size_t i = 0; i < out.entries_.size(); ++i) out.entries_[i] -= b.entries_[i];
        return out;
    }

    [[nodiscard]] bool is_zero() const {
        for (const Scalar& s : entries_)
            if (!s.is_zero()) return false;
        return true;
    }

    [[nodiscard]] friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.field_ == b.field_ &&
               a.entries_ == b.entries_;
    }

  private:
    FieldSpec field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Scalar> entries_;
};

/// Shared convention: an n x n map is flattened row-major into a length-n^2
/// vector (entry (r, c) lands at index r*n + c). Every consumer of vectorized
/// maps in this library relies on this single convention.
[[nodiscard]] inline Vec vectorize_row_major(const Matrix& m) {
    Vec out;
    out.reserve(m.rows() * m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) out.push_back(m.at(r, c));
    return out;
}

[[nodiscard]] inline Matrix devectorize_row_major(const FieldSpec& field, std::size_t n,
                                                  const Vec& v) {
    if (v.size() != n * n) throw DimensionError("devectorize: length is not n^2");
    Matrix m(field, n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) m.at(r, c) = v[r * n + c];
    return m;
}

} // namespace octoder
