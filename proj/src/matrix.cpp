#include "lefschetz/matrix.hpp"

#include <utility>

namespace lefschetz {

Matrix Matrix::from_rows(std::span<const Vector> rows, std::size_t cols) {
    if (!rows.empty()) cols = rows.front().size();
    Matrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) {
            throw DimensionMismatch("ragged rows: expected length " + std::to_string(cols) + ", got " +
                                    std::to_string(rows[r].size()));
        }
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
    }
    return m;
}

Matrix Matrix::from_rows(std::initializer_list<Vector> rows) {
    std::vector<Vector> v(rows);
    return from_rows(std::span<const Vector>(v));
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Vector Matrix::row(std::size_t r) const {
    return Vector(entries_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                  entries_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vector Matrix::column(std::size_t c) const {
    Vector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
}

std::vector<Vector> Matrix::row_vectors() const {
    std::vector<Vector> out;
    out.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out.push_back(row(r));
    return out;
}

Matrix Matrix::transposed() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

void Matrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) throw DimensionMismatch("matrix product shape mismatch");
    Matrix p(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a(i, k).is_zero()) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) p(i, j) += a(i, k) * b(k, j);
        }
    return p;
}

Vector operator*(const Matrix& a, const Vector& x) {
    if (a.cols() != x.size()) throw DimensionMismatch("matrix-vector shape mismatch");
    Vector y(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (!x[k].is_zero()) y[i] += a(i, k) * x[k];
        }
    return y;
}

RrefResult rref(const Matrix& m) {
    RrefResult out{m, {}, 0};
    Matrix& a = out.reduced;
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < a.cols() && pivot_row < a.rows(); ++col) {
        std::size_t found = pivot_row;
        while (found < a.rows() && a(found, col).is_zero()) ++found;
        if (found == a.rows()) continue;
        a.swap_rows(pivot_row, found);

        const Rational inv = a(pivot_row, col).inverse();
        for (std::size_t c = col; c < a.cols(); ++c) a(pivot_row, c) *= inv;

        for (std::size_t r = 0; r < a.rows(); ++r) {
            if (r == pivot_row || a(r, col).is_zero()) continue;
            const Rational factor = a(r, col);
            for (std::size_t c = col; c < a.cols(); ++c) {
                if (!a(pivot_row, c).is_zero()) a(r, c) -= factor * a(pivot_row, c);
            }
        }
        out.pivot_columns.push_back(col);
        ++pivot_row;
    }
    out.rank = out.pivot_columns.size();
    return out;
}

std::size_t rank(const Matrix& m) { return rref(m).rank; }

std::size_t row_space_rank(std::span<const Vector> vectors) {
    if (vectors.empty()) return 0;
    return rank(Matrix::from_rows(vectors));
}

std::optional<Vector> solve(const Matrix& a, const Vector& b) {
    if (a.rows() != b.size()) {
        throw DimensionMismatch("solve: matrix has " + std::to_string(a.rows()) + " rows but rhs has length " +
                                std::to_string(b.size()));
    }
    Matrix augmented(a.rows(), a.cols() + 1);
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) augmented(r, c) = a(r, c);
        augmented(r, a.cols()) = b[r];
    }
    const RrefResult red = rref(augmented);
    if (!red.pivot_columns.empty() && red.pivot_columns.back() == a.cols()) return std::nullopt;

    Vector x(a.cols());
    for (std::size_t i = 0; i < red.rank; ++i) x[red.pivot_columns[i]] = red.reduced(i, a.cols());
    return x;
}

std::vector<Vector> kernel(const Matrix& a) {
    const RrefResult red = rref(a);
    std::vector<bool> is_pivot(a.cols(), false);
    for (std::size_t p : red.pivot_columns) is_pivot[p] = true;

    std::vector<Vector> basis;
    for (std::size_t free = 0; free < a.cols(); ++free) {
        if (is_pivot[free]) continue;
        Vector v(a.cols());
        v[free] = 1;
        for (std::size_t i = 0; i < red.rank; ++i) v[red.pivot_columns[i]] = -red.reduced(i, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<Vector> echelon_basis(std::span<const Vector> vectors, std::size_t width) {
    const RrefResult red = rref(Matrix::from_rows(vectors, width));
    std::vector<Vector> out;
    out.reserve(red.rank);
    for (std::size_t i = 0; i < red.rank; ++i) out.push_back(red.reduced.row(i));
    return out;
}

bool is_zero(const Vector& v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

Vector zero_vector(std::size_t n) { return Vector(n); }

Vector unit_vector(std::size_t n, std::size_t i) {
    Vector v(n);
    v.at(i) = 1;
    return v;
}

void axpy(Vector& y, const Rational& a, const Vector& x) {
    if (y.size() != x.size()) throw DimensionMismatch("axpy length mismatch");
    if (a.is_zero()) return;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (!x[i].is_zero()) y[i] += a * x[i];
    }
}

Vector scaled(const Vector& x, const Rational& a) {
    Vector y(x);
    for (auto& v : y) v *= a;
    return y;
}

Rational dot(const Vector& a, const Vector& b) {
    if (a.size() != b.size()) throw DimensionMismatch("dot length mismatch");
    Rational s;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i].is_zero() && !b[i].is_zero()) s += a[i] * b[i];
    }
    return s;
}

std::string to_string(const Vector& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        s += v[i].str();
    }
    return s + ")";
}

}  // namespace lefschetz
