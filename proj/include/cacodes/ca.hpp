#pragma once

#include <cstddef>
#include <span>

#include "cacodes/matrix.hpp"
#include "cacodes/polynomial.hpp"
#include "cacodes/subspace.hpp"

namespace cacodes {

/// Bipermutive linear local rule f(x_0..x_k) = a_0 x_0 + ... + a_k x_k with
/// a_0 != 0 and a_k == 1, identified with its rule polynomial a_0 + ... + a_k X^k.
class LinearRule {
public:
    /// Throws ZeroPolynomial, DegreeZero or NotBipermutive.
    static LinearRule make(Polynomial poly);

    const Polynomial& poly() const noexcept { return poly_; }
    const Field& field() const noexcept { return poly_.field(); }
    /// k = deg(P_f).
    std::size_t degree() const noexcept { return *poly_.degree(); }
    std::size_t diameter() const noexcept { return degree() + 1; }

    friend bool operator==(const LinearRule& a, const LinearRule& b) noexcept { return a.poly_ == b.poly_; }

private:
    explicit LinearRule(Polynomial poly) : poly_(std::move(poly)) {}
    Polynomial poly_;
};

/// Scales a polynomial with nonzero leading coefficient to monic form, for
/// callers that want to accept rules with a_k != 1. Throws ZeroPolynomial.
Polynomial normalize_monic(const Polynomial& poly);

/// One-shot linear CA F: F_q^n -> F_q^(n-k), no boundary wraparound.
class LinearCA {
public:
    /// Throws LatticeTooShort when n < diameter.
    LinearCA(LinearRule rule, std::size_t n);

    const LinearRule& rule() const noexcept { return rule_; }
    const Field& field() const noexcept { return rule_.field(); }
    std::size_t n() const noexcept { return n_; }
    std::size_t k() const noexcept { return rule_.degree(); }
    std::size_t output_length() const noexcept { return n_ - k(); }

private:
    LinearRule rule_;
    std::size_t n_;
};

/// (n-k) x n banded matrix whose row i holds a_0..a_k starting at column i.
Matrix transition_matrix(const LinearCA& ca);

/// F(x)_i = sum_j a_j x_(i+j). Throws LengthMismatch.
Vector ca_eval(const LinearCA& ca, std::span<const Elem> x);

/// Extends a seed of k cells to the unique preimage of zero starting with it:
/// x_i = -(a_0 x_(i-k) + ... + a_(k-1) x_(i-1)). Throws SeedLengthMismatch.
Vector lfsr_preimage(const LinearCA& ca, std::span<const Elem> seed);

/// ker(F), spanned by the LFSR preimages of the k unit seeds.
Subspace kernel_basis(const LinearCA& ca);

/// ker(F) computed independently as the nullspace of the transition matrix.
Subspace kernel_via_nullspace(const LinearCA& ca);

}  // namespace cacodes
