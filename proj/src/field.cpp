#include "cacodes/field.hpp"

#include <charconv>
#include <limits>

#include "cacodes/error.hpp"

namespace cacodes {

namespace {

constexpr std::uint32_t kTableLimit = 256;

using Digits = std::vector<std::uint32_t>;

// Degree of a digit vector over F_p, -1 for zero.
int digits_degree(const Digits& a) {
    for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i) {
        if (a[static_cast<std::size_t>(i)] != 0) return i;
    }
    return -1;
}

// Remainder of a modulo monic b over F_p.
Digits digits_mod(Digits a, const Digits& b, std::uint32_t p) {
    const int db = digits_degree(b);
    for (int da = digits_degree(a); da >= db; da = digits_degree(a)) {
        const std::uint64_t c = a[static_cast<std::size_t>(da)];
        const int shift = da - db;
        for (int i = 0; i <= db; ++i) {
            auto& slot = a[static_cast<std::size_t>(i + shift)];
            const std::uint64_t sub = (c * b[static_cast<std::size_t>(i)]) % p;
            slot = static_cast<std::uint32_t>((slot + p - sub) % p);
        }
    }
    return a;
}

// Irreducibility over F_p of a monic polynomial of degree <= 4 by trial
// division with every monic polynomial of degree <= deg/2.
bool small_irreducible(const Digits& h, std::uint32_t p) {
    const int deg = digits_degree(h);
    for (int d = 1; d <= deg / 2; ++d) {
        Digits cand(static_cast<std::size_t>(d) + 1, 0);
        cand[static_cast<std::size_t>(d)] = 1;
        std::uint64_t combos = 1;
        for (int i = 0; i < d; ++i) combos *= p;
        for (std::uint64_t idx = 0; idx < combos; ++idx) {
            std::uint64_t rest = idx;
            for (int i = 0; i < d; ++i) {
                cand[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(rest % p);
                rest /= p;
            }
            if (digits_degree(digits_mod(h, cand, p)) < 0) return false;
        }
    }
    return true;
}

Digits smallest_irreducible(std::uint32_t p, unsigned m) {
    Digits h(m + 1, 0);
    h[m] = 1;
    std::uint64_t combos = 1;
    for (unsigned i = 0; i < m; ++i) combos *= p;
    // Enumerate (a_0, ..., a_{m-1}) with a_0 as the most significant digit.
    for (std::uint64_t idx = 0; idx < combos; ++idx) {
        std::uint64_t rest = idx;
        for (int i = static_cast<int>(m) - 1; i >= 0; --i) {
            h[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(rest % p);
            rest /= p;
        }
        if (h[0] != 0 && small_irreducible(h, p)) return h;
    }
    fail("InternalError", "no irreducible modulus found");
}

}  // namespace

struct Field::Impl {
    std::uint32_t p = 2;
    unsigned m = 1;
    std::uint32_t q = 2;
    Digits modulus;
    std::vector<Elem> add_tab;
    std::vector<Elem> mul_tab;
    std::vector<Elem> inv_tab;

    Digits to_digits(Elem a) const {
        Digits d(m, 0);
        for (unsigned i = 0; i < m; ++i) {
            d[i] = a % p;
            a /= p;
        }
        return d;
    }

    Elem from_digits(const Digits& d) const {
        Elem v = 0;
        for (int i = static_cast<int>(m) - 1; i >= 0; --i) {
            v = v * p + (static_cast<std::size_t>(i) < d.size() ? d[static_cast<std::size_t>(i)] : 0);
        }
        return v;
    }

    Elem slow_add(Elem a, Elem b) const {
        if (m == 1) return static_cast<Elem>((std::uint64_t{a} + b) % p);
        Elem v = 0;
        Elem scale = 1;
        for (unsigned i = 0; i < m; ++i) {
            v += ((a % p + b % p) % p) * scale;
            a /= p;
            b /= p;
            scale *= p;
        }
        return v;
    }

    Elem slow_mul(Elem a, Elem b) const {
        if (m == 1) return static_cast<Elem>((std::uint64_t{a} * b) % p);
        const Digits da = to_digits(a);
        const Digits db = to_digits(b);
        Digits prod(2 * m - 1, 0);
        for (unsigned i = 0; i < m; ++i) {
            for (unsigned j = 0; j < m; ++j) {
                prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + std::uint64_t{da[i]} * db[j]) % p);
            }
        }
        return from_digits(digits_mod(std::move(prod), modulus, p));
    }

    Elem slow_pow(Elem a, std::uint64_t e) const {
        Elem result = 1;
        while (e != 0) {
            if (e & 1U) result = slow_mul(result, a);
            a = slow_mul(a, a);
            e >>= 1U;
        }
        return result;
    }

    void build_tables() {
        add_tab.resize(std::size_t{q} * q);
        mul_tab.resize(std::size_t{q} * q);
        inv_tab.assign(q, 0);
        for (Elem a = 0; a < q; ++a) {
            for (Elem b = 0; b < q; ++b) {
                add_tab[std::size_t{a} * q + b] = slow_add(a, b);
                const Elem prod = slow_mul(a, b);
                mul_tab[std::size_t{a} * q + b] = prod;
                if (prod == 1) inv_tab[a] = b;
            }
        }
    }
};

bool is_prime(std::uint64_t n) noexcept {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2) {
        if (n % d == 0) return false;
    }
    return true;
}

Field Field::make(std::uint32_t p, unsigned m) {
    if (!is_prime(p)) fail("NotPrime", std::to_string(p) + " is not prime");
    if (m < 1) fail("InvalidDegree", "extension degree must be at least 1");
    if (m > kMaxDegree) {
        fail("InvalidDegree", "extension degree " + std::to_string(m) + " exceeds supported maximum " +
                                  std::to_string(kMaxDegree));
    }
    std::uint64_t q = 1;
    for (unsigned i = 0; i < m; ++i) {
        q *= p;
        if (q > std::numeric_limits<std::int32_t>::max()) {
            fail("FieldTooLarge", "field order exceeds 2^31");
        }
    }
    auto impl = std::make_shared<Impl>();
    impl->p = p;
    impl->m = m;
    impl->q = static_cast<std::uint32_t>(q);
    if (m > 1) {
        impl->modulus = smallest_irreducible(p, m);
        if (q <= kTableLimit) impl->build_tables();
    }
    return Field(std::move(impl));
}

Field Field::parse(std::string_view spec) {
    const auto caret = spec.find('^');
    const auto parse_uint = [&](std::string_view s) -> std::uint32_t {
        std::uint32_t v = 0;
        const auto* end = s.data() + s.size();
        auto [ptr, ec] = std::from_chars(s.data(), end, v);
        if (s.empty() || ec != std::errc{} || ptr != end) {
            fail("InvalidFieldSpec", "cannot parse field spec '" + std::string(spec) + "'");
        }
        return v;
    };
    if (caret == std::string_view::npos) return make(parse_uint(spec), 1);
    return make(parse_uint(spec.substr(0, caret)), parse_uint(spec.substr(caret + 1)));
}

std::uint32_t Field::p() const noexcept { return impl_->p; }
unsigned Field::m() const noexcept { return impl_->m; }
std::uint32_t Field::q() const noexcept { return impl_->q; }
const std::vector<std::uint32_t>& Field::modulus() const noexcept { return impl_->modulus; }

std::string Field::spec() const {
    if (m() == 1) return std::to_string(p());
    return std::to_string(p()) + "^" + std::to_string(m());
}

Elem Field::from_int(std::int64_t v) const noexcept {
    const auto p64 = static_cast<std::int64_t>(p());
    return static_cast<Elem>(((v % p64) + p64) % p64);
}

Elem Field::add(Elem a, Elem b) const noexcept {
    if (!impl_->add_tab.empty()) return impl_->add_tab[std::size_t{a} * q() + b];
    return impl_->slow_add(a, b);
}

Elem Field::neg(Elem a) const noexcept {
    if (m() == 1) return a == 0 ? 0 : p() - a;
    Elem v = 0;
    Elem scale = 1;
    for (unsigned i = 0; i < m(); ++i) {
        const Elem d = a % p();
        v += (d == 0 ? 0 : p() - d) * scale;
        a /= p();
        scale *= p();
    }
    return v;
}

Elem Field::sub(Elem a, Elem b) const noexcept { return add(a, neg(b)); }

Elem Field::mul(Elem a, Elem b) const noexcept {
    if (!impl_->mul_tab.empty()) return impl_->mul_tab[std::size_t{a} * q() + b];
    return impl_->slow_mul(a, b);
}

Elem Field::inv(Elem a) const {
    if (a == 0) fail("DivisionByZero", "inverse of zero in F_" + spec());
    if (!impl_->inv_tab.empty()) return impl_->inv_tab[a];
    if (m() == 1) {
        // Extended Euclid on integers.
        std::int64_t r0 = p(), r1 = a, t0 = 0, t1 = 1;
        while (r1 != 0) {
            const std::int64_t quo = r0 / r1;
            std::int64_t tmp = r0 - quo * r1;
            r0 = r1;
            r1 = tmp;
            tmp = t0 - quo * t1;
            t0 = t1;
            t1 = tmp;
        }
        return from_int(t0);
    }
    return impl_->slow_pow(a, std::uint64_t{q()} - 2);
}

Elem Field::pow(Elem a, std::uint64_t e) const noexcept {
    Elem result = 1;
    while (e != 0) {
        if (e & 1U) result = mul(result, a);
        a = mul(a, a);
        e >>= 1U;
    }
    return result;
}

std::vector<std::uint32_t> Field::coords(Elem a) const { return impl_->to_digits(a); }

Elem Field::from_coords(std::span<const std::uint32_t> c) const {
    if (c.size() > m()) fail("InvalidElement", "too many coordinates for F_" + spec());
    for (const auto v : c) {
        if (v >= p()) fail("InvalidElement", "coordinate " + std::to_string(v) + " out of range");
    }
    return impl_->from_digits(Digits(c.begin(), c.end()));
}

bool operator==(const Field& a, const Field& b) noexcept {
    return a.impl_ == b.impl_ || (a.p() == b.p() && a.m() == b.m());
}

void require_same_field(const Field& a, const Field& b) {
    if (!(a == b)) fail("FieldMismatch", "operands over F_" + a.spec() + " and F_" + b.spec());
}

FieldElement::FieldElement(Field field, Elem value) : field_(std::move(field)), value_(value) {
    if (!field_.contains(value_)) {
        fail("InvalidElement", std::to_string(value_) + " is not an element of F_" + field_.spec());
    }
}

FieldElement FieldElement::inv() const { return {field_, field_.inv(value_)}; }
FieldElement FieldElement::operator-() const { return {field_, field_.neg(value_)}; }

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
    require_same_field(a.field_, b.field_);
    return {a.field_, a.field_.add(a.value_, b.value_)};
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
    require_same_field(a.field_, b.field_);
    return {a.field_, a.field_.sub(a.value_, b.value_)};
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
    require_same_field(a.field_, b.field_);
    return {a.field_, a.field_.mul(a.value_, b.value_)};
}

FieldElement operator/(const FieldElement& a, const FieldElement& b) {
    require_same_field(a.field_, b.field_);
    return {a.field_, a.field_.div(a.value_, b.value_)};
}

}  // namespace cacodes
