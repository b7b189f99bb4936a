#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "cacodes/field.hpp"
#include "cacodes/polynomial.hpp"

namespace cacodes {

using Vector = std::vector<Elem>;

/// Dense row-major matrix over F_q.
class Matrix {
public:
    Matrix(Field field, std::size_t rows, std::size_t cols);
    /// Throws ShapeMismatch if entries.size() != rows * cols, InvalidElement
    /// for out-of-range entries.
    Matrix(Field field, std::size_t rows, std::size_t cols, std::vector<Elem> entries);

    static Matrix identity(const Field& field, std::size_t n);
    /// Every row must have `cols` entries.
    static Matrix from_rows(const Field& field, std::size_t cols, const std::vector<Vector>& rows);

    const Field& field() const noexcept { return field_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    std::span<const Elem> entries() const noexcept { return entries_; }

    Elem operator()(std::size_t i, std::size_t j) const noexcept { return entries_[i * cols_ + j]; }
    Elem& operator()(std::size_t i, std::size_t j) noexcept { return entries_[i * cols_ + j]; }
    std::span<const Elem> row(std::size_t i) const noexcept {
        return {entries_.data() + i * cols_, cols_};
    }

    /// Rows of *this followed by rows of `below`.
    Matrix stacked(const Matrix& below) const;
    Matrix transposed() const;
    /// M * x^T. Throws LengthMismatch.
    Vector apply(std::span<const Elem> x) const;

    friend bool operator==(const Matrix& a, const Matrix& b) noexcept {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_ && a.field_ == b.field_;
    }

private:
    Field field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Elem> entries_;
};

struct RrefResult {
    Matrix reduced;
    std::size_t rank;
    std::vector<std::size_t> pivots;
};

/// Reduced row echelon form. Pivot rule: leftmost column, topmost nonzero entry.
RrefResult rref(const Matrix& m);
std::size_t rank(const Matrix& m);

/// Rows form a basis of {v : M v^T = 0}, one per free column of rref(M) in
/// increasing column order, with a 1 in that free column.
Matrix nullspace_basis(const Matrix& m);

/// Throws NotSquare.
Elem determinant(const Matrix& m);

/// Sylvester matrix in ascending-coefficient layout: deg(g) rows holding f's
/// coefficients shifted right by one per row, then deg(f) rows of g's.
/// Throws ZeroPolynomial when either input is zero or deg(f)+deg(g) == 0.
Matrix sylvester(const Polynomial& f, const Polynomial& g);

/// det(sylvester(f, g)).
Elem resultant(const Polynomial& f, const Polynomial& g);

}  // namespace cacodes
