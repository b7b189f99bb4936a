#pragma once

// Brute-force reference computations used only by tests. None of these go
// through rref, Sylvester matrices, the LFSR recurrence or the clique search.

#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "cacodes/field.hpp"
#include "cacodes/polynomial.hpp"

namespace cacodes::oracle {

using Vec = std::vector<Elem>;

/// Every vector of F_q^n, in base-q counting order.
inline std::vector<Vec> all_vectors(const Field& f, std::size_t n) {
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < n; ++i) total *= f.q();
    std::vector<Vec> out;
    out.reserve(total);
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        Vec v(n);
        std::uint64_t rest = idx;
        for (std::size_t i = 0; i < n; ++i) {
            v[i] = static_cast<Elem>(rest % f.q());
            rest /= f.q();
        }
        out.push_back(std::move(v));
    }
    return out;
}

/// All F_q-linear combinations of `gens`, as a set.
inline std::set<Vec> span_elements(const Field& f, std::size_t n, const std::vector<Vec>& gens) {
    std::set<Vec> out;
    for (const auto& coeffs : all_vectors(f, gens.size())) {
        Vec v(n, 0);
        for (std::size_t i = 0; i < gens.size(); ++i) {
            for (std::size_t j = 0; j < n; ++j) v[j] = f.add(v[j], f.mul(coeffs[i], gens[i][j]));
        }
        out.insert(std::move(v));
    }
    return out;
}

/// log_q of a set size that is known to be a power of q.
inline std::size_t log_q(std::size_t size, std::uint32_t q) {
    std::size_t d = 0;
    while (size > 1) {
        size /= q;
        ++d;
    }
    return d;
}

/// Window evaluation sum_j a_j x_(i+j) written out directly.
inline Vec apply_rule(const Polynomial& p, const Vec& x) {
    const Field& f = p.field();
    const std::size_t k = *p.degree();
    Vec out;
    for (std::size_t i = 0; i + k < x.size(); ++i) {
        Elem acc = 0;
        for (std::size_t j = 0; j <= k; ++j) acc = f.add(acc, f.mul(p.coeff(j), x[i + j]));
        out.push_back(acc);
    }
    return out;
}

inline bool is_zero(const Vec& v) {
    for (const auto e : v) {
        if (e != 0) return false;
    }
    return true;
}

/// Every monic polynomial of the given degree.
inline std::vector<Polynomial> monic_of_degree(const Field& f, std::size_t d) {
    std::vector<Polynomial> out;
    for (auto tail : all_vectors(f, d)) {
        tail.push_back(1);
        out.emplace_back(f, tail);
    }
    return out;
}

/// Irreducibility by trial division with every monic polynomial of degree
/// 1..deg/2.
inline bool irreducible_by_trial_division(const Polynomial& p) {
    if (p.is_zero() || *p.degree() == 0) return false;
    const std::size_t n = *p.degree();
    for (std::size_t d = 1; d <= n / 2; ++d) {
        for (const auto& c : monic_of_degree(p.field(), d)) {
            if (divrem(p, c).remainder.is_zero()) return false;
        }
    }
    return true;
}

/// Degree of the gcd as the largest degree of a monic common divisor,
/// found by trial division.
inline std::size_t gcd_degree_by_divisors(const Polynomial& a, const Polynomial& b) {
    const std::size_t bound = std::min(*a.degree(), *b.degree());
    for (std::size_t d = bound + 1; d-- > 0;) {
        for (const auto& c : monic_of_degree(a.field(), d)) {
            if (divrem(a, c).remainder.is_zero() && divrem(b, c).remainder.is_zero()) return d;
        }
    }
    return 0;
}

/// Size of the largest subset of `items` in which every pair satisfies
/// `ok`, by enumerating all subsets (items.size() <= ~20).
template <typename Pred>
std::size_t max_subset_size(const std::vector<Polynomial>& items, Pred ok) {
    const std::size_t n = items.size();
    std::vector<std::uint32_t> compat(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i != j && ok(items[i], items[j])) compat[i] |= 1U << j;
        }
    }
    std::size_t best = 0;
    for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
        const auto size = static_cast<std::size_t>(__builtin_popcount(mask));
        if (size <= best) continue;
        bool good = true;
        for (std::size_t i = 0; i < n && good; ++i) {
            if ((mask >> i) & 1U) good = (compat[i] | (1U << i) | ~mask) == ~0U;
        }
        if (good) best = size;
    }
    return best;
}

inline Polynomial random_polynomial(const Field& f, std::size_t max_degree, std::mt19937_64& rng, bool nonzero) {
    std::uniform_int_distribution<std::size_t> deg(0, max_degree);
    std::uniform_int_distribution<Elem> coef(0, f.q() - 1);
    for (;;) {
        std::vector<Elem> c(deg(rng) + 1);
        for (auto& x : c) x = coef(rng);
        Polynomial p(f, c);
        if (!nonzero || !p.is_zero()) return p;
    }
}

}  // namespace cacodes::oracle
