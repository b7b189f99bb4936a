#include "cacodes/ca.hpp"

#include "cacodes/error.hpp"

namespace cacodes {

LinearRule LinearRule::make(Polynomial poly) {
    if (poly.is_zero()) fail("ZeroPolynomial", "rule polynomial is zero");
    if (*poly.degree() == 0) fail("DegreeZero", "rule polynomial must have degree at least 1");
    if (poly.coeff(0) == 0) fail("NotBipermutive", "constant coefficient a_0 is zero");
    if (!poly.is_monic()) fail("NotBipermutive", "leading coefficient a_k is not 1");
    return LinearRule(std::move(poly));
}

Polynomial normalize_monic(const Polynomial& poly) { return poly.monic(); }

LinearCA::LinearCA(LinearRule rule, std::size_t n) : rule_(std::move(rule)), n_(n) {
    if (n_ < rule_.diameter()) {
        fail("LatticeTooShort", "lattice length " + std::to_string(n_) + " is below the diameter " +
                                    std::to_string(rule_.diameter()));
    }
}

Matrix transition_matrix(const LinearCA& ca) {
    Matrix m(ca.field(), ca.output_length(), ca.n());
    const auto& p = ca.rule().poly();
    for (std::size_t i = 0; i < ca.output_length(); ++i) {
        for (std::size_t j = 0; j <= ca.k(); ++j) m(i, i + j) = p.coeff(j);
    }
    return m;
}

Vector ca_eval(const LinearCA& ca, std::span<const Elem> x) {
    if (x.size() != ca.n()) {
        fail("LengthMismatch", "configuration of length " + std::to_string(x.size()) + ", expected " +
                                   std::to_string(ca.n()));
    }
    const Field& f = ca.field();
    const auto& p = ca.rule().poly();
    Vector out(ca.output_length(), 0);
    for (std::size_t i = 0; i < out.size(); ++i) {
        Elem acc = 0;
        for (std::size_t j = 0; j <= ca.k(); ++j) acc = f.add(acc, f.mul(p.coeff(j), x[i + j]));
        out[i] = acc;
    }
    return out;
}

Vector lfsr_preimage(const LinearCA& ca, std::span<const Elem> seed) {
    const std::size_t k = ca.k();
    if (seed.size() != k) {
        fail("SeedLengthMismatch", "seed of length " + std::to_string(seed.size()) + ", expected " +
                                       std::to_string(k));
    }
    const Field& f = ca.field();
    const auto& p = ca.rule().poly();
    Vector x(ca.n(), 0);
    for (std::size_t i = 0; i < k; ++i) {
        if (!f.contains(seed[i])) fail("InvalidElement", "seed entry outside F_" + f.spec());
        x[i] = seed[i];
    }
    for (std::size_t i = k; i < ca.n(); ++i) {
        Elem acc = 0;
        for (std::size_t j = 0; j < k; ++j) acc = f.add(acc, f.mul(p.coeff(j), x[i - k + j]));
        x[i] = f.neg(acc);
    }
    return x;
}

Subspace kernel_basis(const LinearCA& ca) {
    std::vector<Vector> rows;
    rows.reserve(ca.k());
    Vector seed(ca.k(), 0);
    for (std::size_t i = 0; i < ca.k(); ++i) {
        seed.assign(ca.k(), 0);
        seed[i] = 1;
        rows.push_back(lfsr_preimage(ca, seed));
    }
    return Subspace::from_rows(Matrix::from_rows(ca.field(), ca.n(), rows));
}

Subspace kernel_via_nullspace(const LinearCA& ca) {
    return Subspace::from_rows(nullspace_basis(transition_matrix(ca)));
}

}  // namespace cacodes
