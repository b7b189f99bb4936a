#include "cacodes/subspace.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "cacodes/error.hpp"

namespace cacodes {

Subspace::Subspace(Field field, std::size_t ambient_n) : basis_(std::move(field), 0, ambient_n) {}

Subspace Subspace::from_rows(const Matrix& rows) {
    auto [reduced, rk, pivots] = rref(rows);
    std::vector<Elem> entries(reduced.entries().begin(),
                              reduced.entries().begin() + static_cast<std::ptrdiff_t>(rk * rows.cols()));
    return Subspace(Matrix(rows.field(), rk, rows.cols(), std::move(entries)));
}

Subspace Subspace::full(const Field& field, std::size_t ambient_n) {
    return Subspace(Matrix::identity(field, ambient_n));
}

bool Subspace::contains(std::span<const Elem> v) const {
    if (v.size() != ambient_n()) fail("AmbientMismatch", "vector length differs from ambient dimension");
    const Matrix single(field(), 1, v.size(), Vector(v.begin(), v.end()));
    return rank(basis_.stacked(single)) == dim();
}

bool Subspace::contains(const Subspace& other) const {
    require_compatible(*this, other);
    return rank(basis_.stacked(other.basis_)) == dim();
}

std::strong_ordering operator<=>(const Subspace& a, const Subspace& b) noexcept {
    const auto ea = a.basis_.entries();
    const auto eb = b.basis_.entries();
    return std::lexicographical_compare_three_way(ea.begin(), ea.end(), eb.begin(), eb.end());
}

void require_compatible(const Subspace& a, const Subspace& b) {
    require_same_field(a.field(), b.field());
    if (a.ambient_n() != b.ambient_n()) {
        fail("AmbientMismatch", "subspaces of F_q^" + std::to_string(a.ambient_n()) + " and F_q^" +
                                    std::to_string(b.ambient_n()));
    }
}

Subspace sum(const Subspace& a, const Subspace& b) {
    require_compatible(a, b);
    return Subspace::from_rows(a.basis().stacked(b.basis()));
}

Subspace intersection(const Subspace& a, const Subspace& b) {
    require_compatible(a, b);
    // Rows (a_i | a_i) and (b_j | 0); after RREF the rows whose left half
    // vanishes carry a basis of A ∩ B in their right half.
    const std::size_t n = a.ambient_n();
    const Field& f = a.field();
    Matrix z(f, a.dim() + b.dim(), 2 * n);
    for (std::size_t i = 0; i < a.dim(); ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            z(i, j) = a.basis()(i, j);
            z(i, n + j) = a.basis()(i, j);
        }
    }
    for (std::size_t i = 0; i < b.dim(); ++i) {
        for (std::size_t j = 0; j < n; ++j) z(a.dim() + i, j) = b.basis()(i, j);
    }
    const auto [reduced, rk, pivots] = rref(z);
    std::vector<Vector> rows;
    for (std::size_t i = 0; i < rk; ++i) {
        if (pivots[i] < n) continue;
        const auto r = reduced.row(i);
        rows.emplace_back(r.begin() + static_cast<std::ptrdiff_t>(n), r.end());
    }
    return Subspace::from_rows(Matrix::from_rows(f, n, rows));
}

std::size_t intersection_dim(const Subspace& a, const Subspace& b) {
    require_compatible(a, b);
    return a.dim() + b.dim() - rank(a.basis().stacked(b.basis()));
}

std::size_t subspace_distance(const Subspace& a, const Subspace& b) {
    return a.dim() + b.dim() - 2 * intersection_dim(a, b);
}

GrassmannianCode::GrassmannianCode(Field field, std::size_t ambient_n, std::vector<Subspace> codewords)
    : field_(std::move(field)), ambient_n_(ambient_n), codewords_(std::move(codewords)) {
    for (const auto& c : codewords_) {
        require_same_field(field_, c.field());
        if (c.ambient_n() != ambient_n_) {
            fail("AmbientMismatch", "codeword in F_q^" + std::to_string(c.ambient_n()) + " for a code in F_q^" +
                                        std::to_string(ambient_n_));
        }
    }
    std::sort(codewords_.begin(), codewords_.end());
    const auto last = std::unique(codewords_.begin(), codewords_.end());
    duplicates_dropped_ = static_cast<std::size_t>(codewords_.end() - last);
    codewords_.erase(last, codewords_.end());
    if (!codewords_.empty()) {
        const std::size_t d = codewords_.front().dim();
        if (std::all_of(codewords_.begin(), codewords_.end(), [d](const Subspace& s) { return s.dim() == d; })) {
            constant_dim_ = d;
        }
    }
}

std::size_t min_distance(const GrassmannianCode& code) {
    const auto& words = code.codewords();
    if (words.size() < 2) fail("TooFewCodewords", "minimum distance needs at least two codewords");
    std::size_t best = std::numeric_limits<std::size_t>::max();
    for (std::size_t i = 0; i < words.size(); ++i) {
        for (std::size_t j = i + 1; j < words.size(); ++j) best = std::min(best, subspace_distance(words[i], words[j]));
    }
    return best;
}

CodeParams code_params(const GrassmannianCode& code) {
    if (code.size() == 0) fail("EmptyCode", "code has no codewords");
    CodeParams p;
    p.n = code.ambient_n();
    p.size = code.size();
    for (const auto& c : code.codewords()) p.max_dim = std::max(p.max_dim, c.dim());
    p.log_q_size = std::log(static_cast<double>(code.size())) / std::log(static_cast<double>(code.field().q()));
    if (code.size() >= 2) p.min_distance = min_distance(code);
    return p;
}

}  // namespace cacodes
