#include "doctest.h"

#include <random>

#include "cacodes/ca.hpp"
#include "cacodes/error.hpp"

#include "../support/oracles.hpp"

using namespace cacodes;

namespace {

Polynomial P(const Field& f, std::initializer_list<std::int64_t> c) { return Polynomial::from_ints(f, c); }

LinearCA make_ca(const Field& f, std::initializer_list<std::int64_t> c, std::size_t n) {
    return LinearCA(LinearRule::make(P(f, c)), n);
}

std::string error_name(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.name();
    }
    return "";
}

// Every rule polynomial of degree k over f: monic with nonzero constant term.
std::vector<Polynomial> rules_of_degree(const Field& f, std::size_t k) {
    std::vector<Polynomial> out;
    for (const auto& p : oracle::monic_of_degree(f, k)) {
        if (p.coeff(0) != 0) out.push_back(p);
    }
    return out;
}

}  // namespace

TEST_CASE("rule_make validates bipermutivity") {
    const Field f2 = Field::make(2);
    CHECK(LinearRule::make(P(f2, {1, 1})).degree() == 1);
    CHECK(LinearRule::make(P(f2, {1, 1, 1})).diameter() == 3);
    CHECK(error_name([&] { LinearRule::make(P(f2, {0, 1, 1})); }) == "NotBipermutive");
    CHECK(error_name([&] { LinearRule::make(P(f2, {1})); }) == "DegreeZero");
    CHECK(error_name([&] { LinearRule::make(Polynomial(f2)); }) == "ZeroPolynomial");
    const Field f3 = Field::make(3);
    CHECK(error_name([&] { LinearRule::make(P(f3, {1, 2})); }) == "NotBipermutive");
    CHECK(LinearRule::make(normalize_monic(P(f3, {1, 2}))).poly() == P(f3, {2, 1}));
    CHECK(error_name([&] { make_ca(f2, {1, 1, 1}, 2); }) == "LatticeTooShort");
}

TEST_CASE("transition matrix examples") {
    const Field f2 = Field::make(2);
    CHECK(transition_matrix(make_ca(f2, {1, 1}, 2)) == Matrix::from_rows(f2, 2, {{1, 1}}));
    CHECK(transition_matrix(make_ca(f2, {1, 1, 1}, 4)) == Matrix::from_rows(f2, 4, {{1, 1, 1, 0}, {0, 1, 1, 1}}));
    for (std::size_t k = 1; k <= 3; ++k) {
        for (const auto& p : rules_of_degree(f2, k)) {
            for (std::size_t n = k + 1; n <= 8; ++n) {
                const LinearCA ca(LinearRule::make(p), n);
                CHECK(rank(transition_matrix(ca)) == n - k);
            }
        }
    }
}

TEST_CASE("ca_eval examples") {
    const Field f2 = Field::make(2);
    const std::vector<Elem> x11{1, 1};
    CHECK(ca_eval(make_ca(f2, {1, 1}, 2), x11) == Vector{0});
    const std::vector<Elem> zero(4, 0);
    CHECK(ca_eval(make_ca(f2, {1, 1, 1}, 4), zero) == Vector{0, 0});
    const std::vector<Elem> x{1, 0, 1, 1};
    CHECK(ca_eval(make_ca(f2, {1, 1, 1}, 4), x) == Vector{0, 0});
    CHECK(error_name([&] { ca_eval(make_ca(f2, {1, 1}, 3), x11); }) == "LengthMismatch");
}

TEST_CASE("ca_eval is linear and matches the transition matrix") {
    std::mt19937_64 rng(11);
    for (const char* spec : {"2", "3", "2^2", "5"}) {
        const Field f = Field::parse(spec);
        std::uniform_int_distribution<Elem> pick(0, f.q() - 1);
        for (int t = 0; t < 100; ++t) {
            const std::size_t k = 1 + static_cast<std::size_t>(t % 3);
            std::vector<Elem> c(k + 1);
            for (auto& e : c) e = pick(rng);
            c[0] = c[0] == 0 ? 1 : c[0];
            c[k] = 1;
            const LinearCA ca(LinearRule::make(Polynomial(f, c)), k + 1 + static_cast<std::size_t>(t % 5));
            Vector x(ca.n()), y(ca.n()), z(ca.n());
            const Elem a = pick(rng), b = pick(rng);
            for (std::size_t i = 0; i < ca.n(); ++i) {
                x[i] = pick(rng);
                y[i] = pick(rng);
                z[i] = f.add(f.mul(a, x[i]), f.mul(b, y[i]));
            }
            const Vector fx = ca_eval(ca, x), fy = ca_eval(ca, y), fz = ca_eval(ca, z);
            for (std::size_t i = 0; i < fz.size(); ++i) CHECK(fz[i] == f.add(f.mul(a, fx[i]), f.mul(b, fy[i])));
            CHECK(fx == transition_matrix(ca).apply(x));
            CHECK(fx == oracle::apply_rule(ca.rule().poly(), x));
        }
    }
}

TEST_CASE("lfsr_preimage examples") {
    const Field f2 = Field::make(2);
    const std::vector<Elem> seed10{1, 0};
    CHECK(lfsr_preimage(make_ca(f2, {1, 1, 1}, 4), seed10) == Vector{1, 0, 1, 1});
    const std::vector<Elem> seed00{0, 0};
    CHECK(lfsr_preimage(make_ca(f2, {1, 1, 1}, 6), seed00) == Vector(6, 0));
    const Field f3 = Field::make(3);
    const std::vector<Elem> seed1{1};
    CHECK(lfsr_preimage(make_ca(f3, {1, 1}, 3), seed1) == Vector{1, 2, 1});
    CHECK(error_name([&] { lfsr_preimage(make_ca(f3, {1, 1}, 3), seed10); }) == "SeedLengthMismatch");
}

TEST_CASE("kernel_basis examples") {
    const Field f2 = Field::make(2);
    const Subspace k1 = kernel_basis(make_ca(f2, {1, 1}, 2));
    CHECK(k1.dim() == 1);
    CHECK(k1.basis() == Matrix::from_rows(f2, 2, {{1, 1}}));
    const Subspace k2 = kernel_basis(make_ca(f2, {1, 1, 1}, 4));
    CHECK(k2.dim() == 2);
    CHECK(k2.contains(std::vector<Elem>{1, 0, 1, 1}));
    CHECK(k2.contains(std::vector<Elem>{0, 1, 1, 0}));
}

TEST_CASE("kernel law and agreement of the two kernel paths") {
    for (const char* spec : {"2", "3"}) {
        const Field f = Field::parse(spec);
        for (std::size_t k = 1; k <= 3; ++k) {
            for (const auto& p : rules_of_degree(f, k)) {
                const std::size_t max_n = f.q() == 2 ? 8 : 6;
                for (std::size_t n = k + 1; n <= max_n; ++n) {
                    const LinearCA ca(LinearRule::make(p), n);
                    const Subspace lfsr = kernel_basis(ca);
                    CHECK(lfsr.dim() == k);
                    CHECK(lfsr == kernel_via_nullspace(ca));
                    for (std::size_t i = 0; i < lfsr.dim(); ++i) CHECK(oracle::is_zero(ca_eval(ca, lfsr.basis().row(i))));
                }
            }
        }
    }
}

TEST_CASE("kernel size equals q^k by enumeration at n = 2k") {
    const Field f2 = Field::make(2);
    for (std::size_t k = 1; k <= 3; ++k) {
        for (const auto& p : rules_of_degree(f2, k)) {
            std::size_t zeros = 0;
            for (const auto& x : oracle::all_vectors(f2, 2 * k)) {
                if (oracle::is_zero(oracle::apply_rule(p, x))) ++zeros;
            }
            CHECK(zeros == (std::size_t{1} << k));
        }
    }
}
