#include "cacodes/matrix.hpp"

#include <utility>

#include "cacodes/error.hpp"

namespace cacodes {

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), entries_(rows * cols, 0) {}

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols, std::vector<Elem> entries)
    : field_(std::move(field)), rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_) {
        fail("ShapeMismatch", std::to_string(entries_.size()) + " entries for a " + std::to_string(rows_) + "x" +
                                  std::to_string(cols_) + " matrix");
    }
    for (const auto e : entries_) {
        if (!field_.contains(e)) fail("InvalidElement", std::to_string(e) + " is not in F_" + field_.spec());
    }
}

Matrix Matrix::identity(const Field& field, std::size_t n) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Matrix Matrix::from_rows(const Field& field, std::size_t cols, const std::vector<Vector>& rows) {
    std::vector<Elem> entries;
    entries.reserve(rows.size() * cols);
    for (const auto& r : rows) {
        if (r.size() != cols) {
            fail("ShapeMismatch", "row of length " + std::to_string(r.size()) + ", expected " + std::to_string(cols));
        }
        entries.insert(entries.end(), r.begin(), r.end());
    }
    return {field, rows.size(), cols, std::move(entries)};
}

Matrix Matrix::stacked(const Matrix& below) const {
    require_same_field(field_, below.field_);
    if (cols_ != below.cols_) fail("ShapeMismatch", "cannot stack matrices with different column counts");
    std::vector<Elem> entries = entries_;
    entries.insert(entries.end(), below.entries_.begin(), below.entries_.end());
    return {field_, rows_ + below.rows_, cols_, std::move(entries)};
}

Matrix Matrix::transposed() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    }
    return t;
}

Vector Matrix::apply(std::span<const Elem> x) const {
    if (x.size() != cols_) {
        fail("LengthMismatch", "vector of length " + std::to_string(x.size()) + " for " + std::to_string(cols_) +
                                   " columns");
    }
    Vector out(rows_, 0);
    for (std::size_t i = 0; i < rows_; ++i) {
        Elem acc = 0;
        for (std::size_t j = 0; j < cols_; ++j) acc = field_.add(acc, field_.mul((*this)(i, j), x[j]));
        out[i] = acc;
    }
    return out;
}

RrefResult rref(const Matrix& input) {
    Matrix m = input;
    const Field& f = m.field();
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t pr = r;
        while (pr < m.rows() && m(pr, c) == 0) ++pr;
        if (pr == m.rows()) continue;
        if (pr != r) {
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(pr, j), m(r, j));
        }
        const Elem scale = f.inv(m(r, c));
        for (std::size_t j = c; j < m.cols(); ++j) m(r, j) = f.mul(m(r, j), scale);
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c) == 0) continue;
            const Elem factor = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j) m(i, j) = f.sub(m(i, j), f.mul(factor, m(r, j)));
        }
        pivots.push_back(c);
        ++r;
    }
    return {std::move(m), r, std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return rref(m).rank; }

Matrix nullspace_basis(const Matrix& m) {
    const auto [reduced, rk, pivots] = rref(m);
    const Field& f = m.field();
    std::vector<bool> is_pivot(m.cols(), false);
    for (const auto c : pivots) is_pivot[c] = true;

    Matrix basis(f, m.cols() - rk, m.cols());
    std::size_t out = 0;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        basis(out, free) = 1;
        for (std::size_t i = 0; i < rk; ++i) basis(out, pivots[i]) = f.neg(reduced(i, free));
        ++out;
    }
    return basis;
}

Elem determinant(const Matrix& input) {
    if (input.rows() != input.cols()) {
        fail("NotSquare", "determinant of a " + std::to_string(input.rows()) + "x" + std::to_string(input.cols()) +
                              " matrix");
    }
    Matrix m = input;
    const Field& f = m.field();
    const std::size_t n = m.rows();
    Elem det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t pr = c;
        while (pr < n && m(pr, c) == 0) ++pr;
        if (pr == n) return 0;
        if (pr != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m(pr, j), m(c, j));
            det = f.neg(det);
        }
        det = f.mul(det, m(c, c));
        const Elem inv = f.inv(m(c, c));
        for (std::size_t i = c + 1; i < n; ++i) {
            if (m(i, c) == 0) continue;
            const Elem factor = f.mul(m(i, c), inv);
            for (std::size_t j = c; j < n; ++j) m(i, j) = f.sub(m(i, j), f.mul(factor, m(c, j)));
        }
    }
    return det;
}

Matrix sylvester(const Polynomial& f, const Polynomial& g) {
    require_same_field(f.field(), g.field());
    if (f.is_zero() || g.is_zero()) fail("ZeroPolynomial", "Sylvester matrix of a zero polynomial");
    const std::size_t df = *f.degree();
    const std::size_t dg = *g.degree();
    const std::size_t size = df + dg;
    if (size == 0) fail("ZeroPolynomial", "Sylvester matrix of two constants is empty");

    Matrix s(f.field(), size, size);
    for (std::size_t i = 0; i < dg; ++i) {
        for (std::size_t j = 0; j <= df; ++j) s(i, i + j) = f.coeff(j);
    }
    for (std::size_t i = 0; i < df; ++i) {
        for (std::size_t j = 0; j <= dg; ++j) s(dg + i, i + j) = g.coeff(j);
    }
    return s;
}

Elem resultant(const Polynomial& f, const Polynomial& g) { return determinant(sylvester(f, g)); }

}  // namespace cacodes
