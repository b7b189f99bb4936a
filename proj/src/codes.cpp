#include "cacodes/codes.hpp"

#include <algorithm>
#include <limits>

#include "cacodes/clique.hpp"
#include "cacodes/error.hpp"

namespace cacodes {

namespace {

constexpr std::uint64_t kEnumerationLimit = std::uint64_t{1} << 24;

std::uint64_t checked_power(std::uint64_t base, std::size_t exp) {
    unsigned __int128 v = 1;
    for (std::size_t i = 0; i < exp; ++i) {
        v *= base;
        if (v > std::numeric_limits<std::uint64_t>::max()) fail("Overflow", "q^n does not fit in 64 bits");
    }
    return static_cast<std::uint64_t>(v);
}

// Every monic polynomial of degree n, optionally only those with a_0 != 0.
std::vector<Polynomial> enumerate_monic(std::size_t n, const Field& field, bool nonzero_constant) {
    const std::uint64_t total = checked_power(field.q(), n);
    if (total > kEnumerationLimit) {
        fail("BudgetExceeded", "enumerating " + std::to_string(total) + " polynomials exceeds the limit");
    }
    std::vector<Polynomial> out;
    out.reserve(total);
    std::vector<Elem> coeffs(n + 1, 0);
    coeffs[n] = 1;
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        std::uint64_t rest = idx;
        for (std::size_t i = 0; i < n; ++i) {
            coeffs[i] = static_cast<Elem>(rest % field.q());
            rest /= field.q();
        }
        if (nonzero_constant && coeffs[0] == 0) continue;
        out.emplace_back(field, coeffs);
    }
    std::sort(out.begin(), out.end());
    return out;
}

void require_k(std::size_t k) {
    if (k < 1) fail("NonPositive", "degree must be at least 1");
}

std::vector<Polynomial> multiples_in_poly_k(std::size_t k, const Polynomial& g) {
    std::vector<Polynomial> out;
    for (auto& f : enumerate_poly_k(k, g.field())) {
        if (mod(f, g).is_zero()) out.push_back(std::move(f));
    }
    return out;
}

template <typename Compatible>
std::vector<Polynomial> clique_of(const std::vector<Polynomial>& vertices, Compatible compatible) {
    Graph graph(vertices.size());
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        for (std::size_t j = i + 1; j < vertices.size(); ++j) {
            if (compatible(vertices[i], vertices[j])) graph.add_edge(i, j);
        }
    }
    std::vector<Polynomial> out;
    for (const auto v : maximum_clique(graph)) out.push_back(vertices[v]);
    return out;
}

void check_budget(std::size_t k, const Field& field, std::size_t budget) {
    const std::uint64_t count = (field.q() - 1) * checked_power(field.q(), k - 1);
    if (count > budget) {
        fail("BudgetExceeded", "|Poly_" + std::to_string(k) + "(F_" + field.spec() + ")| = " +
                                   std::to_string(count) + " exceeds budget " + std::to_string(budget));
    }
}

}  // namespace

CAFamily CAFamily::make(const Field& field, std::vector<Polynomial> polys) {
    if (polys.empty()) fail("EmptyFamily", "a CA family needs at least one rule");
    std::vector<LinearRule> members;
    members.reserve(polys.size());
    for (auto& p : polys) {
        require_same_field(field, p.field());
        members.push_back(LinearRule::make(std::move(p)));
    }
    const std::size_t k = members.front().degree();
    for (std::size_t i = 0; i < members.size(); ++i) {
        if (members[i].degree() != k) {
            fail("MixedDegrees", "member " + std::to_string(i) + " has degree " +
                                     std::to_string(members[i].degree()) + ", expected " + std::to_string(k));
        }
        for (std::size_t j = 0; j < i; ++j) {
            if (members[i] == members[j]) {
                fail("DuplicateMember", "members " + std::to_string(j) + " and " + std::to_string(i) + " coincide");
            }
        }
    }
    return CAFamily(field, k, std::move(members));
}

GrassmannianCode code_from_family(const CAFamily& family) {
    std::vector<Subspace> words;
    words.reserve(family.size());
    for (const auto& rule : family.members()) words.push_back(kernel_basis(LinearCA(rule, 2 * family.k())));
    return GrassmannianCode(family.field(), 2 * family.k(), std::move(words));
}

std::optional<Polynomial> rule_from_kernel(const Subspace& kernel) {
    const std::size_t k = kernel.dim();
    if (k == 0 || kernel.ambient_n() != 2 * k) return std::nullopt;
    const Field& f = kernel.field();
    const Matrix& b = kernel.basis();
    // A CA kernel projects bijectively onto its first k cells, so its RREF
    // rows are the LFSR preimages of the unit seeds and x_k = -a_i in row i.
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
            if (b(i, j) != (i == j ? 1U : 0U)) return std::nullopt;
        }
    }
    std::vector<Elem> coeffs(k + 1, 1);
    for (std::size_t i = 0; i < k; ++i) coeffs[i] = f.neg(b(i, k));
    if (coeffs[0] == 0) return std::nullopt;
    Polynomial poly(f, std::move(coeffs));
    if (kernel_basis(LinearCA(LinearRule::make(poly), 2 * k)) != kernel) return std::nullopt;
    return poly;
}

std::optional<CAFamily> family_from_code(const GrassmannianCode& code) {
    std::vector<Polynomial> polys;
    for (const auto& w : code.codewords()) {
        auto p = rule_from_kernel(w);
        if (!p) return std::nullopt;
        polys.push_back(std::move(*p));
    }
    if (polys.empty()) return std::nullopt;
    return CAFamily::make(code.field(), std::move(polys));
}

DistancePrediction predicted_min_distance(const CAFamily& family) {
    if (family.size() < 2) fail("TooFewMembers", "distance prediction needs at least two rules");
    DistancePrediction out;
    auto& profile = out.profile;
    const auto& m = family.members();
    profile.degrees.resize(m.size());
    bool first = true;
    for (std::size_t i = 0; i < m.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            const std::size_t d = *gcd(m[i].poly(), m[j].poly()).degree();
            profile.degrees[i].push_back(d);
            const std::pair<std::size_t, std::size_t> pair{j, i};
            if (first || d > profile.max_gcd_degree ||
                (d == profile.max_gcd_degree && pair < profile.witness)) {
                profile.max_gcd_degree = d;
                profile.witness = pair;
                first = false;
            }
        }
    }
    out.min_distance = 2 * family.k() - 2 * profile.max_gcd_degree;
    return out;
}

int mobius(std::int64_t n) {
    if (n < 1) fail("NonPositive", "Mobius function needs n >= 1");
    int sign = 1;
    for (std::int64_t p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        n /= p;
        if (n % p == 0) return 0;
        sign = -sign;
    }
    if (n > 1) sign = -sign;
    return sign;
}

std::uint64_t count_irreducibles(std::size_t n, const Field& field) {
    require_k(n);
    __int128 total = 0;
    for (std::size_t d = 1; d <= n; ++d) {
        if (n % d != 0) continue;
        const int mu = mobius(static_cast<std::int64_t>(d));
        if (mu == 0) continue;
        total += mu * static_cast<__int128>(checked_power(field.q(), n / d));
    }
    return static_cast<std::uint64_t>(total / static_cast<__int128>(n));
}

std::uint64_t count_irreducibles_excluding_x(std::size_t n, const Field& field) {
    const std::uint64_t count = count_irreducibles(n, field);
    return n == 1 ? count - 1 : count;
}

std::vector<Polynomial> enumerate_irreducibles(std::size_t n, const Field& field, bool exclude_x) {
    require_k(n);
    std::vector<Polynomial> out;
    for (auto& f : enumerate_monic(n, field, exclude_x)) {
        if (is_irreducible(f)) out.push_back(std::move(f));
    }
    return out;
}

std::vector<Polynomial> enumerate_poly_k(std::size_t k, const Field& field) {
    require_k(k);
    return enumerate_monic(k, field, true);
}

std::uint64_t max_coprime_family_size(std::size_t k, const Field& field) {
    return uniform_gcd_family_size(k, 0, field);
}

std::uint64_t max_coprime_family_size_gauss(std::size_t k, const Field& field) {
    require_k(k);
    std::uint64_t total = count_irreducibles(k, field);
    for (std::size_t j = 1; j <= k / 2; ++j) total += count_irreducibles(j, field);
    return total;
}

std::uint64_t uniform_gcd_family_size(std::size_t k, std::size_t t, const Field& field) {
    if (t > k) fail("DegreeTooLarge", "gcd degree exceeds k");
    const std::size_t m = k - t;
    if (m == 0) return 1;
    std::uint64_t total = count_irreducibles_excluding_x(m, field);
    for (std::size_t i = 1; i <= m / 2; ++i) total += count_irreducibles_excluding_x(i, field);
    return total;
}

std::vector<Polynomial> construction_uniform_gcd(std::size_t k, const Polynomial& g) {
    if (!g.is_monic()) fail("GNotMonic", "g must be monic");
    if (g.coeff(0) == 0) fail("GZeroConstant", "g must have a nonzero constant term");
    const std::size_t t = *g.degree();
    if (t > k) fail("DegreeTooLarge", "deg(g) = " + std::to_string(t) + " exceeds k = " + std::to_string(k));
    const Field& field = g.field();
    const std::size_t m = k - t;
    if (m == 0) return {g};

    std::vector<std::vector<Polynomial>> irr(m + 1);
    const auto irreducibles = [&](std::size_t d) -> const std::vector<Polynomial>& {
        if (irr[d].empty()) irr[d] = enumerate_irreducibles(d, field, true);
        return irr[d];
    };
    // j-th irreducible of degree `low` times the j-th of degree `high`.
    const auto pair_up = [&](std::size_t low, std::size_t high, std::vector<Polynomial>& out) {
        const auto& a = irreducibles(low);
        const auto& b = irreducibles(high);
        if (a.size() > b.size()) fail("InternalError", "no injection between irreducible sets");
        for (std::size_t j = 0; j < a.size(); ++j) out.push_back(a[j] * b[j]);
    };

    std::vector<Polynomial> cofactors = irreducibles(m);
    const std::size_t middle = m / 2;
    for (std::size_t i = 1; i < middle; ++i) pair_up(i, m - i, cofactors);
    if (middle >= 1) {
        if (m % 2 == 1) {
            pair_up(middle, middle + 1, cofactors);
        } else {
            for (const auto& f : irreducibles(middle)) cofactors.push_back(f * f);
        }
    }

    std::vector<Polynomial> out;
    out.reserve(cofactors.size());
    for (const auto& c : cofactors) out.push_back(g * c);
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

FamilyReport verify_membership(std::span<const Polynomial> family, std::optional<std::size_t> k) {
    FamilyReport r;
    if (family.empty()) return r;
    const std::size_t expected = k ? *k : family.front().degree().value_or(0);
    for (std::size_t i = 0; i < family.size(); ++i) {
        const auto& f = family[i];
        const std::string where = "element " + std::to_string(i) + " (" + display(f) + ")";
        if (f.degree() != expected) {
            return {false, k ? "Degree" : "MixedDegrees", where + " does not have degree " + std::to_string(expected)};
        }
        if (!f.is_monic()) return {false, "NotMonic", where + " is not monic"};
        if (f.coeff(0) == 0) return {false, "ZeroConstant", where + " has zero constant term"};
        for (std::size_t j = 0; j < i; ++j) {
            if (family[j] == f) return {false, "Duplicate", where + " repeats element " + std::to_string(j)};
        }
    }
    return r;
}

template <typename PairCheck>
FamilyReport verify_pairs(std::span<const Polynomial> family, PairCheck check) {
    for (std::size_t i = 0; i < family.size(); ++i) {
        for (std::size_t j = i + 1; j < family.size(); ++j) {
            const Polynomial d = gcd(family[i], family[j]);
            if (auto msg = check(d); !msg.empty()) {
                return {false, "PairwiseGcd",
                        "gcd of elements " + std::to_string(i) + " and " + std::to_string(j) + " is " + display(d) +
                            "; " + msg};
            }
        }
    }
    return {};
}

}  // namespace

FamilyReport verify_family(std::span<const Polynomial> family, const Polynomial& g, std::optional<std::size_t> k) {
    if (auto r = verify_membership(family, k); !r.ok) return r;
    return verify_pairs(family, [&](const Polynomial& d) -> std::string {
        return d == g ? std::string{} : "expected " + display(g);
    });
}

FamilyReport verify_family_bounded(std::span<const Polynomial> family, std::size_t t, std::optional<std::size_t> k) {
    if (auto r = verify_membership(family, k); !r.ok) return r;
    return verify_pairs(family, [&](const Polynomial& d) -> std::string {
        return *d.degree() <= t ? std::string{} : "degree exceeds " + std::to_string(t);
    });
}

std::vector<Polynomial> search_max_family(std::size_t k, std::size_t t, const Field& field, std::size_t budget) {
    require_k(k);
    check_budget(k, field, budget);
    return clique_of(enumerate_poly_k(k, field), [t](const Polynomial& a, const Polynomial& b) {
        return *gcd(a, b).degree() <= t;
    });
}

std::vector<Polynomial> search_max_uniform_gcd_family(std::size_t k, const Polynomial& g, std::size_t budget) {
    require_k(k);
    check_budget(k, g.field(), budget);
    return clique_of(multiples_in_poly_k(k, g), [&g](const Polynomial& a, const Polynomial& b) {
        return gcd(a, b) == g;
    });
}

}  // namespace cacodes
