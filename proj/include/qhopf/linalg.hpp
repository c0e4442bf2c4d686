#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "qhopf/scalar.hpp"

namespace qhopf {

using Vec = std::vector<Scalar>;

struct Matrix {
    std::size_t rows = 0, cols = 0;
    std::vector<Scalar> a;  // row-major

    Matrix() = default;
    Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}

    static Matrix identity(std::size_t n, const FieldDesc& f) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
        return m;
    }
    static Matrix from_rows(const std::vector<Vec>& rows_in) {
        Matrix m(rows_in.size(), rows_in.empty() ? 0 : rows_in[0].size());
        for (std::size_t i = 0; i < m.rows; ++i) {
            if (rows_in[i].size() != m.cols) throw InputError("ragged rows");
            for (std::size_t j = 0; j < m.cols; ++j) m.at(i, j) = rows_in[i][j];
        }
        return m;
    }

    Scalar& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    const Scalar& at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

    Vec row(std::size_t i) const { return Vec(a.begin() + i * cols, a.begin() + (i + 1) * cols); }
    Vec col(std::size_t j) const {
        Vec v(rows);
        for (std::size_t i = 0; i < rows; ++i) v[i] = at(i, j);
        return v;
    }

    Matrix transpose() const {
        Matrix t(cols, rows);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) t.at(j, i) = at(i, j);
        return t;
    }

    /// Field of the first nonzero entry; rational for the zero matrix.
    FieldDesc field_hint() const {
        for (const auto& s : a)
            if (!s.is_zero())
                return s.kind() == FieldKind::Prime ? FieldDesc::prime(s.modulus())
                                                    : FieldDesc::rational();
        return FieldDesc::rational();
    }

    friend bool operator==(const Matrix& x, const Matrix& y) {
        if (x.rows != y.rows || x.cols != y.cols) return false;
        for (std::size_t i = 0; i < x.a.size(); ++i)
            if (x.a[i] != y.a[i]) return false;
        return true;
    }
};

inline Matrix mat_mul(const Matrix& x, const Matrix& y) {
    if (x.cols != y.rows) throw InputError("matrix product dimension mismatch");
    Matrix z(x.rows, y.cols);
    for (std::size_t i = 0; i < x.rows; ++i)
        for (std::size_t k = 0; k < x.cols; ++k) {
            if (x.at(i, k).is_zero()) continue;
            for (std::size_t j = 0; j < y.cols; ++j)
                z.at(i, j) += x.at(i, k) * y.at(k, j);
        }
    return z;
}

/// v as a row vector times m.
inline Vec vec_mat(const Vec& v, const Matrix& m) {
    if (v.size() != m.rows) throw InputError("vector/matrix dimension mismatch");
    Vec r(m.cols);
    for (std::size_t i = 0; i < m.rows; ++i) {
        if (v[i].is_zero()) continue;
        for (std::size_t j = 0; j < m.cols; ++j) r[j] += v[i] * m.at(i, j);
    }
    return r;
}

inline Vec mat_vec(const Matrix& m, const Vec& v) {
    if (v.size() != m.cols) throw InputError("matrix/vector dimension mismatch");
    Vec r(m.rows);
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = 0; j < m.cols; ++j)
            if (!m.at(i, j).is_zero() && !v[j].is_zero()) r[i] += m.at(i, j) * v[j];
    return r;
}

inline Scalar dot(const Vec& x, const Vec& y) {
    if (x.size() != y.size()) throw InputError("dot product dimension mismatch");
    Scalar s;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (!x[i].is_zero() && !y[i].is_zero()) s += x[i] * y[i];
    return s;
}

inline bool is_zero_vec(const Vec& v) {
    for (const auto& s : v)
        if (!s.is_zero()) return false;
    return true;
}

namespace detail {
// In-place reduced row echelon form; returns pivot column per pivot row.
// Pivot choice is by ascending column, first nonzero row; exact arithmetic,
// so there are no pivot-size concerns.
inline std::vector<std::size_t> rref_in_place(Matrix& m) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
        std::size_t sel = r;
        while (sel < m.rows && m.at(sel, c).is_zero()) ++sel;
        if (sel == m.rows) continue;
        for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.at(r, j), m.at(sel, j));
        Scalar inv = m.at(r, c).inverse();
        for (std::size_t j = c; j < m.cols; ++j) m.at(r, j) = m.at(r, j) * inv;
        for (std::size_t i = 0; i < m.rows; ++i) {
            if (i == r || m.at(i, c).is_zero()) continue;
            Scalar f = m.at(i, c);
            for (std::size_t j = c; j < m.cols; ++j) m.at(i, j) -= f * m.at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}
}  // namespace detail

inline Matrix rref(Matrix m) {
    detail::rref_in_place(m);
    return m;
}

inline std::size_t rank(const Matrix& m) {
    Matrix c = m;
    return detail::rref_in_place(c).size();
}

/// One exact solution of A x = b, or nullopt when the system is inconsistent.
inline std::optional<Vec> solve_linear(const Matrix& A, const Vec& b) {
    if (A.rows != b.size()) throw InputError("solve_linear: A has " + std::to_string(A.rows) +
                                             " rows but b has " + std::to_string(b.size()) + " entries");
    Matrix aug(A.rows, A.cols + 1);
    for (std::size_t i = 0; i < A.rows; ++i) {
        for (std::size_t j = 0; j < A.cols; ++j) aug.at(i, j) = A.at(i, j);
        aug.at(i, A.cols) = b[i];
    }
    auto pivots = detail::rref_in_place(aug);
    for (auto c : pivots)
        if (c == A.cols) return std::nullopt;  // pivot in the constant column
    Vec x(A.cols);
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug.at(r, A.cols);
    return x;
}

/// Reduced-echelon basis of the nullspace {x : A x = 0}.  Deterministic: the
/// result is the canonical RREF basis of the kernel (leading coordinate 1,
/// zeros above and below, pivot columns ascending).
inline std::vector<Vec> kernel_basis(const Matrix& A, FieldDesc fd) {
    Matrix m = A;
    auto pivots = detail::rref_in_place(m);
    std::vector<bool> is_pivot(A.cols, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<Vec> basis;
    for (std::size_t f = 0; f < A.cols; ++f) {
        if (is_pivot[f]) continue;
        Vec v(A.cols);
        v[f] = Scalar::one(fd);
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m.at(r, f);
        basis.push_back(std::move(v));
    }
    if (basis.empty()) return basis;
    Matrix bm = Matrix::from_rows(basis);
    detail::rref_in_place(bm);
    std::vector<Vec> out;
    for (std::size_t i = 0; i < bm.rows; ++i)
        if (!is_zero_vec(bm.row(i))) out.push_back(bm.row(i));
    return out;
}

inline std::vector<Vec> kernel_basis(const Matrix& A) { return kernel_basis(A, A.field_hint()); }

/// Exact inverse, or nullopt when singular.
inline std::optional<Matrix> invert(const Matrix& A) {
    if (A.rows != A.cols) throw InputError("invert: matrix is not square");
    std::size_t n = A.rows;
    FieldDesc fd = A.field_hint();
    Matrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = A.at(i, j);
        aug.at(i, n + i) = Scalar::one(fd);
    }
    auto pivots = detail::rref_in_place(aug);
    if (pivots.size() != n || pivots.back() != n - 1) return std::nullopt;
    Matrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
    return inv;
}

/// Canonical (RREF) basis of the span of the given vectors.
inline std::vector<Vec> echelon_span(const std::vector<Vec>& vectors) {
    if (vectors.empty()) return {};
    Matrix m = Matrix::from_rows(vectors);
    detail::rref_in_place(m);
    std::vector<Vec> out;
    for (std::size_t i = 0; i < m.rows; ++i)
        if (!is_zero_vec(m.row(i))) out.push_back(m.row(i));
    return out;
}

inline bool in_span(const Vec& v, const std::vector<Vec>& basis) {
    if (is_zero_vec(v)) return true;
    std::vector<Vec> with = basis;
    with.push_back(v);
    return echelon_span(with).size() == echelon_span(basis).size();
}

inline bool same_span(const std::vector<Vec>& a, const std::vector<Vec>& b) {
    return echelon_span(a) == echelon_span(b);
}

}  // namespace qhopf
