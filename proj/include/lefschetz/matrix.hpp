#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "lefschetz/rational.hpp"

namespace lefschetz {

using Vector = std::vector<Rational>;

/// Thrown when operands have incompatible shapes.
class DimensionMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Dense row-major matrix over the rationals.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}

    /// Builds a matrix whose rows are the given vectors. All rows must share
    /// one length; `cols` fixes the width when `rows` is empty.
    static Matrix from_rows(std::span<const Vector> rows, std::size_t cols = 0);
    static Matrix from_rows(std::initializer_list<Vector> rows);
    static Matrix identity(std::size_t n);

    [[nodiscard]] std::size_t rows() const { return rows_; }
    [[nodiscard]] std::size_t cols() const { return cols_; }
    [[nodiscard]] bool empty() const { return rows_ == 0 || cols_ == 0; }

    Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    [[nodiscard]] Vector row(std::size_t r) const;
    [[nodiscard]] Vector column(std::size_t c) const;
    [[nodiscard]] std::vector<Vector> row_vectors() const;
    [[nodiscard]] Matrix transposed() const;

    void swap_rows(std::size_t a, std::size_t b);

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> entries_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
Vector operator*(const Matrix& a, const Vector& x);

struct RrefResult {
    Matrix reduced;
    std::vector<std::size_t> pivot_columns;
    std::size_t rank = 0;
};

/// Reduced row echelon form. Zero rows end up at the bottom.
RrefResult rref(const Matrix& m);

[[nodiscard]] std::size_t rank(const Matrix& m);

/// Dimension of the span of the vectors. Throws DimensionMismatch on ragged input.
std::size_t row_space_rank(std::span<const Vector> vectors);

/// One solution of a·x = b, free variables set to zero; nullopt when the
/// system is inconsistent. Throws DimensionMismatch when rows(a) != len(b).
std::optional<Vector> solve(const Matrix& a, const Vector& b);

/// Basis of the null space, one vector per free column of rref(a); each has
/// a 1 in its free column.
std::vector<Vector> kernel(const Matrix& a);

/// Nonzero rows of rref of the stacked vectors: a canonical basis of their span.
std::vector<Vector> echelon_basis(std::span<const Vector> vectors, std::size_t width);

// Vector helpers.
bool is_zero(const Vector& v);
Vector zero_vector(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t i);
void axpy(Vector& y, const Rational& a, const Vector& x);  // y += a*x
Vector scaled(const Vector& x, const Rational& a);
Rational dot(const Vector& a, const Vector& b);
std::string to_string(const Vector& v);

}  // namespace lefschetz
