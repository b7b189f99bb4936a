#include "cacodes/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "cacodes/error.hpp"

namespace cacodes {

Polynomial::Polynomial(Field field) : field_(std::move(field)) {}

Polynomial::Polynomial(Field field, std::vector<Elem> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
    for (const auto c : coeffs_) {
        if (!field_.contains(c)) {
            fail("InvalidElement", std::to_string(c) + " is not an element of F_" + field_.spec());
        }
    }
    normalize();
}

Polynomial Polynomial::constant(const Field& field, Elem c) { return Polynomial(field, {c}); }

Polynomial Polynomial::monomial(const Field& field, Elem c, std::size_t degree) {
    std::vector<Elem> coeffs(degree + 1, 0);
    coeffs[degree] = c;
    return Polynomial(field, std::move(coeffs));
}

Polynomial Polynomial::from_ints(const Field& field, std::initializer_list<std::int64_t> coeffs) {
    std::vector<Elem> c;
    c.reserve(coeffs.size());
    for (const auto v : coeffs) c.push_back(field.from_int(v));
    return Polynomial(field, std::move(c));
}

void Polynomial::normalize() noexcept {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::optional<std::size_t> Polynomial::degree() const noexcept {
    if (coeffs_.empty()) return std::nullopt;
    return coeffs_.size() - 1;
}

Polynomial Polynomial::monic() const {
    if (is_zero()) fail("ZeroPolynomial", "the zero polynomial has no monic associate");
    return scaled(field_.inv(leading()));
}

Polynomial Polynomial::scaled(Elem c) const {
    std::vector<Elem> out(coeffs_.size());
    std::transform(coeffs_.begin(), coeffs_.end(), out.begin(), [&](Elem a) { return field_.mul(a, c); });
    return Polynomial(field_, std::move(out));
}

Polynomial Polynomial::operator-() const {
    std::vector<Elem> out(coeffs_.size());
    std::transform(coeffs_.begin(), coeffs_.end(), out.begin(), [&](Elem a) { return field_.neg(a); });
    return Polynomial(field_, std::move(out));
}

Elem Polynomial::eval(Elem x) const noexcept {
    Elem acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = field_.add(field_.mul(acc, x), *it);
    return acc;
}

FieldElement Polynomial::eval(const FieldElement& x) const {
    require_same_field(field_, x.field());
    return {field_, eval(x.value())};
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    require_same_field(a.field_, b.field_);
    std::vector<Elem> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.field_.add(a.coeff(i), b.coeff(i));
    return Polynomial(a.field_, std::move(out));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    require_same_field(a.field_, b.field_);
    if (a.is_zero() || b.is_zero()) return Polynomial(a.field_);
    const Field& f = a.field_;
    std::vector<Elem> out(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            out[i + j] = f.add(out[i + j], f.mul(a.coeffs_[i], b.coeffs_[j]));
        }
    }
    return Polynomial(f, std::move(out));
}

std::strong_ordering operator<=>(const Polynomial& a, const Polynomial& b) noexcept {
    if (auto c = a.coeffs_.size() <=> b.coeffs_.size(); c != 0) return c;
    return std::lexicographical_compare_three_way(a.coeffs_.begin(), a.coeffs_.end(), b.coeffs_.begin(),
                                                  b.coeffs_.end());
}

DivRem divrem(const Polynomial& f, const Polynomial& g) {
    require_same_field(f.field(), g.field());
    if (g.is_zero()) fail("DivisionByZero", "polynomial division by zero");
    const Field& field = f.field();
    const std::size_t dg = *g.degree();
    if (f.is_zero() || *f.degree() < dg) return {Polynomial(field), f};

    std::vector<Elem> rem(f.coeffs().begin(), f.coeffs().end());
    std::vector<Elem> quo(rem.size() - dg, 0);
    const Elem lead_inv = field.inv(g.leading());
    for (std::size_t i = rem.size(); i-- > dg;) {
        if (rem[i] == 0) continue;
        const Elem c = field.mul(rem[i], lead_inv);
        quo[i - dg] = c;
        for (std::size_t j = 0; j <= dg; ++j) {
            rem[i - dg + j] = field.sub(rem[i - dg + j], field.mul(c, g.coeff(j)));
        }
    }
    rem.resize(dg);
    return {Polynomial(field, std::move(quo)), Polynomial(field, std::move(rem))};
}

Polynomial mod(const Polynomial& f, const Polynomial& g) { return divrem(f, g).remainder; }

Polynomial gcd(const Polynomial& f, const Polynomial& g) {
    require_same_field(f.field(), g.field());
    if (f.is_zero() && g.is_zero()) fail("BothZero", "gcd(0, 0) is undefined");
    Polynomial a = f;
    Polynomial b = g;
    while (!b.is_zero()) {
        Polynomial r = mod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

ExtendedGcd extended_gcd(const Polynomial& f, const Polynomial& g) {
    require_same_field(f.field(), g.field());
    if (f.is_zero() && g.is_zero()) fail("BothZero", "gcd(0, 0) is undefined");
    const Field& field = f.field();
    Polynomial r0 = f, r1 = g;
    Polynomial u0 = Polynomial::constant(field, 1), u1(field);
    Polynomial v0(field), v1 = Polynomial::constant(field, 1);
    while (!r1.is_zero()) {
        auto [quo, rem] = divrem(r0, r1);
        Polynomial u2 = u0 - quo * u1;
        Polynomial v2 = v0 - quo * v1;
        r0 = std::move(r1);
        r1 = std::move(rem);
        u0 = std::move(u1);
        u1 = std::move(u2);
        v0 = std::move(v1);
        v1 = std::move(v2);
    }
    const Elem norm = field.inv(r0.leading());
    return {r0.scaled(norm), u0.scaled(norm), v0.scaled(norm)};
}

namespace {

Polynomial mulmod(const Polynomial& a, const Polynomial& b, const Polynomial& m) { return mod(a * b, m); }

Polynomial powmod(Polynomial base, std::uint64_t e, const Polynomial& m) {
    Polynomial result = mod(Polynomial::constant(base.field(), 1), m);
    base = mod(base, m);
    while (e != 0) {
        if (e & 1U) result = mulmod(result, base, m);
        base = mulmod(base, base, m);
        e >>= 1U;
    }
    return result;
}

}  // namespace

bool is_irreducible(const Polynomial& f) {
    if (f.is_zero() || *f.degree() == 0) return false;
    const std::size_t n = *f.degree();
    if (n == 1) return true;
    const Polynomial h = f.monic();
    const Field& field = f.field();
    const Polynomial x = Polynomial::monomial(field, 1, 1);
    // x^(q^i) mod h for i = 1 .. n/2; h is reducible iff it shares a factor
    // with x^(q^i) - x for some such i.
    Polynomial power = x;
    for (std::size_t i = 1; i <= n / 2; ++i) {
        power = powmod(power, field.q(), h);
        if (!gcd(h, power - x).is_one()) return false;
    }
    return true;
}

std::string element_text(const Field& field, Elem a) {
    if (field.is_prime_field()) return std::to_string(a);
    std::string out = "[";
    const auto c = field.coords(a);
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i != 0) out += ',';
        out += std::to_string(c[i]);
    }
    return out + "]";
}

std::string to_text(const Polynomial& f) {
    if (f.is_zero()) return "0";
    std::string out;
    for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
        if (i != 0) out += ',';
        out += element_text(f.field(), f.coeffs()[i]);
    }
    return out;
}

namespace {

class TextCursor {
public:
    explicit TextCursor(std::string_view s) : s_(s) {}

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool done() {
        skip_ws();
        return pos_ >= s_.size();
    }
    bool accept(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!accept(c)) bad();
    }
    std::uint32_t number() {
        skip_ws();
        std::uint32_t v = 0;
        auto [ptr, ec] = std::from_chars(s_.data() + pos_, s_.data() + s_.size(), v);
        if (ec != std::errc{}) bad();
        pos_ = static_cast<std::size_t>(ptr - s_.data());
        return v;
    }
    [[noreturn]] void bad() const {
        fail("InvalidPolynomial", "cannot parse polynomial '" + std::string(s_) + "' at offset " +
                                      std::to_string(pos_));
    }

private:
    std::string_view s_;
    std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(const Field& field, std::string_view text) {
    TextCursor cur(text);
    std::vector<Elem> coeffs;
    if (cur.done()) return Polynomial(field);
    do {
        if (cur.accept('[')) {
            std::vector<std::uint32_t> coords;
            if (!cur.accept(']')) {
                do {
                    coords.push_back(cur.number());
                } while (cur.accept(','));
                cur.expect(']');
            }
            coeffs.push_back(field.from_coords(coords));
        } else {
            const std::uint32_t v = cur.number();
            if (v >= field.p()) {
                fail("InvalidElement", "coefficient " + std::to_string(v) + " out of range for F_" + field.spec());
            }
            coeffs.push_back(v);
        }
    } while (cur.accept(','));
    if (!cur.done()) cur.bad();
    return Polynomial(field, std::move(coeffs));
}

std::string display(const Polynomial& f) {
    if (f.is_zero()) return "0";
    std::string out;
    for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
        const Elem c = f.coeffs()[i];
        if (c == 0) continue;
        if (!out.empty()) out += " + ";
        const bool show_coeff = c != 1 || i == 0;
        if (show_coeff) out += element_text(f.field(), c);
        if (i == 0) continue;
        if (show_coeff) out += "*";
        out += "X";
        if (i > 1) out += "^" + std::to_string(i);
    }
    return out;
}

}  // namespace cacodes
