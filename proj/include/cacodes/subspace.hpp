#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <vector>

#include "cacodes/matrix.hpp"

namespace cacodes {

/// Subspace of F_q^n stored by its RREF basis (no zero rows), so equal
/// subspaces have identical representations.
class Subspace {
public:
    /// Zero subspace of F_q^n.
    Subspace(Field field, std::size_t ambient_n);

    /// Span of the rows of `rows`; dependent rows collapse.
    static Subspace from_rows(const Matrix& rows);
    static Subspace full(const Field& field, std::size_t ambient_n);

    const Field& field() const noexcept { return basis_.field(); }
    std::size_t ambient_n() const noexcept { return basis_.cols(); }
    std::size_t dim() const noexcept { return basis_.rows(); }
    const Matrix& basis() const noexcept { return basis_; }

    bool contains(std::span<const Elem> v) const;
    bool contains(const Subspace& other) const;

    friend bool operator==(const Subspace& a, const Subspace& b) noexcept { return a.basis_ == b.basis_; }
    /// Lexicographic on the flattened RREF entries.
    friend std::strong_ordering operator<=>(const Subspace& a, const Subspace& b) noexcept;

private:
    explicit Subspace(Matrix basis) : basis_(std::move(basis)) {}
    Matrix basis_;
};

/// Throws AmbientMismatch (or FieldMismatch).
void require_compatible(const Subspace& a, const Subspace& b);

/// A + B.
Subspace sum(const Subspace& a, const Subspace& b);
/// A ∩ B via the Zassenhaus construction.
Subspace intersection(const Subspace& a, const Subspace& b);
/// dim(A ∩ B) = dim A + dim B - rank([A; B]).
std::size_t intersection_dim(const Subspace& a, const Subspace& b);
/// dim A + dim B - 2 dim(A ∩ B).
std::size_t subspace_distance(const Subspace& a, const Subspace& b);

/// A set of distinct subspaces of a common ambient space.
class GrassmannianCode {
public:
    /// Canonicalizes: sorts codewords and drops duplicates (counted in
    /// duplicates_dropped()). Throws AmbientMismatch.
    GrassmannianCode(Field field, std::size_t ambient_n, std::vector<Subspace> codewords);

    const Field& field() const noexcept { return field_; }
    std::size_t ambient_n() const noexcept { return ambient_n_; }
    const std::vector<Subspace>& codewords() const noexcept { return codewords_; }
    std::size_t size() const noexcept { return codewords_.size(); }
    std::size_t duplicates_dropped() const noexcept { return duplicates_dropped_; }
    /// Common dimension if every codeword has the same one.
    std::optional<std::size_t> constant_dim() const noexcept { return constant_dim_; }

    friend bool operator==(const GrassmannianCode& a, const GrassmannianCode& b) noexcept {
        return a.field_ == b.field_ && a.ambient_n_ == b.ambient_n_ && a.codewords_ == b.codewords_;
    }

private:
    Field field_;
    std::size_t ambient_n_;
    std::vector<Subspace> codewords_;
    std::size_t duplicates_dropped_ = 0;
    std::optional<std::size_t> constant_dim_;
};

/// Minimum pairwise subspace distance. Throws TooFewCodewords.
std::size_t min_distance(const GrassmannianCode& code);

/// Parameters [n, max dimension, log_q |C|, D]. D is absent for a
/// single-codeword code.
struct CodeParams {
    std::size_t n = 0;
    std::size_t max_dim = 0;
    std::size_t size = 0;
    double log_q_size = 0.0;
    std::optional<std::size_t> min_distance;
};

/// Throws EmptyCode.
CodeParams code_params(const GrassmannianCode& code);

}  // namespace cacodes
