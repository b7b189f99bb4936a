#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cacodes/field.hpp"

namespace cacodes {

/// Univariate polynomial over F_q in canonical form: ascending coefficients,
/// no trailing zeros. The zero polynomial has no degree (std::nullopt).
class Polynomial {
public:
    explicit Polynomial(Field field);
    Polynomial(Field field, std::vector<Elem> coeffs);

    static Polynomial constant(const Field& field, Elem c);
    static Polynomial monomial(const Field& field, Elem c, std::size_t degree);
    /// Builds a polynomial from small integers interpreted in the prime subfield.
    static Polynomial from_ints(const Field& field, std::initializer_list<std::int64_t> coeffs);

    const Field& field() const noexcept { return field_; }
    std::span<const Elem> coeffs() const noexcept { return coeffs_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    std::optional<std::size_t> degree() const noexcept;
    /// Coefficient of X^i (zero past the degree).
    Elem coeff(std::size_t i) const noexcept { return i < coeffs_.size() ? coeffs_[i] : 0; }
    Elem leading() const noexcept { return coeffs_.empty() ? 0 : coeffs_.back(); }
    bool is_monic() const noexcept { return !coeffs_.empty() && coeffs_.back() == 1; }
    bool is_one() const noexcept { return coeffs_.size() == 1 && coeffs_[0] == 1; }

    /// Throws ZeroPolynomial.
    Polynomial monic() const;
    Polynomial scaled(Elem c) const;
    Polynomial operator-() const;

    Elem eval(Elem x) const noexcept;
    FieldElement eval(const FieldElement& x) const;

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

    friend bool operator==(const Polynomial& a, const Polynomial& b) noexcept {
        return a.coeffs_ == b.coeffs_ && a.field_ == b.field_;
    }
    /// Canonical order: by degree, then ascending coefficients compared
    /// lexicographically from the constant term.
    friend std::strong_ordering operator<=>(const Polynomial& a, const Polynomial& b) noexcept;

private:
    void normalize() noexcept;

    Field field_;
    std::vector<Elem> coeffs_;
};

struct DivRem {
    Polynomial quotient;
    Polynomial remainder;
};

/// f = quotient * g + remainder with deg(remainder) < deg(g). Throws DivisionByZero.
DivRem divrem(const Polynomial& f, const Polynomial& g);

/// Monic greatest common divisor. Throws BothZero.
Polynomial gcd(const Polynomial& f, const Polynomial& g);

struct ExtendedGcd {
    Polynomial gcd;  // monic
    Polynomial u;
    Polynomial v;    // u*f + v*g == gcd
};

/// Extended Euclid. Throws BothZero.
ExtendedGcd extended_gcd(const Polynomial& f, const Polynomial& g);

/// f mod g.
Polynomial mod(const Polynomial& f, const Polynomial& g);

/// Irreducibility over the coefficient field (Ben-Or test). Constants and
/// the zero polynomial are not irreducible.
bool is_irreducible(const Polynomial& f);

/// Comma-separated ascending coefficients, e.g. "1,1,1". Extension-field
/// coefficients are written as bracketed coordinate tuples "[0,1]".
std::string to_text(const Polynomial& f);

/// Inverse of to_text. Bare integers in an extension field are read as
/// prime-subfield elements. "0" or "" parse to the zero polynomial.
Polynomial parse_polynomial(const Field& field, std::string_view text);

/// Human-readable rendering such as "1 + X + X^2". Display only.
std::string display(const Polynomial& f);

std::string element_text(const Field& field, Elem a);

}  // namespace cacodes
