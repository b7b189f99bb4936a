#include "doctest.h"

#include "cacodes/error.hpp"
#include "cacodes/field.hpp"

#include "../support/oracles.hpp"

using namespace cacodes;

namespace {

std::string error_name(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.name();
    }
    return "";
}

}  // namespace

TEST_CASE("field_make builds prime fields without a modulus") {
    const Field f = Field::make(2, 1);
    CHECK(f.q() == 2);
    CHECK(f.modulus().empty());
    CHECK(f.spec() == "2");
}

TEST_CASE("field_make picks 1 + X + X^2 for F_4") {
    // Oracle: the monic quadratics over F_2 without a root in F_2.
    std::vector<std::vector<std::uint32_t>> rootless;
    for (std::uint32_t a0 = 0; a0 < 2; ++a0) {
        for (std::uint32_t a1 = 0; a1 < 2; ++a1) {
            bool root = false;
            for (std::uint32_t x = 0; x < 2; ++x) root = root || (a0 + a1 * x + x * x) % 2 == 0;
            if (!root) rootless.push_back({a0, a1, 1});
        }
    }
    REQUIRE(rootless.size() == 1);
    const Field f = Field::make(2, 2);
    CHECK(f.q() == 4);
    CHECK(f.modulus() == rootless.front());
    CHECK(f.spec() == "2^2");
}

TEST_CASE("field_make picks the smallest irreducible modulus") {
    // Tails (a_0, .., a_(m-1)) are tried with a_0 most significant.
    // F_9: 1 + X^2 has no root mod 3.
    CHECK(Field::make(3, 2).modulus() == std::vector<std::uint32_t>{1, 0, 1});
    // F_8: 1 + X^3 has the root 1; 1 + X^2 + X^3 is rootless.
    CHECK(Field::make(2, 3).modulus() == std::vector<std::uint32_t>{1, 0, 1, 1});
    // F_16: 1 + X^4 = (1+X)^4; 1 + X^3 + X^4 is rootless and not (1+X+X^2)^2.
    CHECK(Field::make(2, 4).modulus() == std::vector<std::uint32_t>{1, 0, 0, 1, 1});
    for (const auto& [p, m] : std::vector<std::pair<std::uint32_t, unsigned>>{{2, 2}, {2, 3}, {2, 4}, {3, 2}, {3, 3},
                                                                              {5, 2}, {3, 4}}) {
        const Field f = Field::make(p, m);
        const Field base = Field::make(p);
        std::vector<Elem> c(f.modulus().begin(), f.modulus().end());
        CHECK(oracle::irreducible_by_trial_division(Polynomial(base, c)));
    }
}

TEST_CASE("field_make rejects bad input") {
    CHECK(error_name([] { Field::make(4, 1); }) == "NotPrime");
    CHECK(error_name([] { Field::make(1, 1); }) == "NotPrime");
    CHECK(error_name([] { Field::make(2, 0); }) == "InvalidDegree");
    CHECK(error_name([] { Field::make(2, 5); }) == "InvalidDegree");
    CHECK(error_name([] { Field::parse("2^x"); }) == "InvalidFieldSpec");
    CHECK(Field::parse("3^2").q() == 9);
    CHECK(Field::parse("7").q() == 7);
}

TEST_CASE("inverses") {
    const Field f5 = Field::make(5);
    Elem scanned = 0;
    for (Elem x = 1; x < 5; ++x) {
        if ((2 * x) % 5 == 1) scanned = x;
    }
    CHECK(f5.inv(2) == scanned);
    CHECK(scanned == 3);
    for (const char* spec : {"2", "3", "2^2", "5", "2^3", "3^2"}) CHECK(Field::parse(spec).inv(1) == 1);
    CHECK(error_name([&] { f5.inv(0); }) == "DivisionByZero");
    const Field big = Field::make(65537);
    CHECK(big.mul(big.inv(12345), 12345) == 1);
    const Field ext = Field::make(7, 3);  // untabulated extension
    for (Elem a = 1; a < ext.q(); a += 17) CHECK(ext.mul(a, ext.inv(a)) == 1);
}

TEST_CASE("F_4 arithmetic on the adjoined root") {
    const Field f = Field::make(2, 2);
    const std::uint32_t alpha_c[] = {0, 1};
    const Elem alpha = f.from_coords(alpha_c);
    const std::uint32_t expected_c[] = {1, 1};
    CHECK(f.mul(alpha, alpha) == f.from_coords(expected_c));
    const FieldElement a(f, alpha);
    CHECK((a * a).value() == f.add(alpha, 1));
}

TEST_CASE("field axioms hold exhaustively for small fields") {
    for (const char* spec : {"2", "3", "2^2", "5", "2^3", "3^2", "7^2"}) {
        const Field f = Field::parse(spec);
        CAPTURE(spec);
        const Elem q = f.q();
        bool ok = true;
        for (Elem a = 0; a < q && ok; ++a) {
            ok = ok && f.add(a, 0) == a && f.mul(a, 1) == a && f.add(a, f.neg(a)) == 0;
            if (a != 0) ok = ok && f.mul(a, f.inv(a)) == 1;
            for (Elem b = 0; b < q && ok; ++b) {
                ok = ok && f.add(a, b) == f.add(b, a) && f.mul(a, b) == f.mul(b, a);
                if (q > 16) continue;
                for (Elem c = 0; c < q && ok; ++c) {
                    ok = ok && f.add(f.add(a, b), c) == f.add(a, f.add(b, c));
                    ok = ok && f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c));
                    ok = ok && f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c));
                }
            }
        }
        CHECK(ok);
    }
}

TEST_CASE("elements of different fields do not mix") {
    const FieldElement a(Field::make(2), 1);
    const FieldElement b(Field::make(3), 1);
    CHECK(error_name([&] { (void)(a + b); }) == "FieldMismatch");
    CHECK(error_name([&] { (void)(a * b); }) == "FieldMismatch");
    CHECK(error_name([] { FieldElement(Field::make(3), 3); }) == "InvalidElement");
    CHECK((FieldElement(Field::make(5), 2).inv()).value() == 3);
}

TEST_CASE("coordinate round trip") {
    const Field f = Field::make(3, 3);
    for (Elem a = 0; a < f.q(); ++a) CHECK(f.from_coords(f.coords(a)) == a);
    const std::uint32_t too_big[] = {3};
    CHECK(error_name([&] { f.from_coords(too_big); }) == "InvalidElement");
}
