#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cacodes {

/// Packed element of F_q: the base-p digits are the coordinates over F_p in
/// ascending powers of the adjoined root. For prime fields this is the residue.
using Elem = std::uint32_t;

/// Runtime description of F_q, q = p^m. Cheap to copy (shared immutable state).
///
/// Extension fields are built as F_p[X]/(h) where h is the lexicographically
/// smallest monic irreducible of degree m (coefficients compared from the
/// constant term upward). Only m <= 4 is supported.
class Field {
public:
    static constexpr unsigned kMaxDegree = 4;

    /// Throws NotPrime, InvalidDegree or FieldTooLarge.
    static Field make(std::uint32_t p, unsigned m = 1);

    /// Parses "p" or "p^m".
    static Field parse(std::string_view spec);

    std::uint32_t p() const noexcept;
    unsigned m() const noexcept;
    std::uint32_t q() const noexcept;
    bool is_prime_field() const noexcept { return m() == 1; }

    /// Ascending coefficients of the defining modulus over F_p (size m+1);
    /// empty for prime fields.
    const std::vector<std::uint32_t>& modulus() const noexcept;

    /// "p" for prime fields, "p^m" otherwise.
    std::string spec() const;

    bool contains(Elem a) const noexcept { return a < q(); }

    Elem zero() const noexcept { return 0; }
    Elem one() const noexcept { return 1; }
    /// Image of an integer in the prime subfield.
    Elem from_int(std::int64_t v) const noexcept;

    Elem add(Elem a, Elem b) const noexcept;
    Elem sub(Elem a, Elem b) const noexcept;
    Elem neg(Elem a) const noexcept;
    Elem mul(Elem a, Elem b) const noexcept;
    /// Throws DivisionByZero.
    Elem inv(Elem a) const;
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
    Elem pow(Elem a, std::uint64_t e) const noexcept;

    std::vector<std::uint32_t> coords(Elem a) const;
    /// Throws InvalidElement when a coordinate is out of range or too many are given.
    Elem from_coords(std::span<const std::uint32_t> c) const;

    friend bool operator==(const Field& a, const Field& b) noexcept;

private:
    struct Impl;
    explicit Field(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
    std::shared_ptr<const Impl> impl_;
};

bool is_prime(std::uint64_t n) noexcept;

/// An element bound to its field; arithmetic across fields throws FieldMismatch.
class FieldElement {
public:
    FieldElement(Field field, Elem value);

    const Field& field() const noexcept { return field_; }
    Elem value() const noexcept { return value_; }
    bool is_zero() const noexcept { return value_ == 0; }

    FieldElement inv() const;
    FieldElement operator-() const;

    friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
    friend bool operator==(const FieldElement& a, const FieldElement& b) noexcept {
        return a.value_ == b.value_ && a.field_ == b.field_;
    }

private:
    Field field_;
    Elem value_;
};

void require_same_field(const Field& a, const Field& b);

}  // namespace cacodes
