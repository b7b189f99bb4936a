#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cacodes/ca.hpp"
#include "cacodes/subspace.hpp"

namespace cacodes {

/// Distinct bipermutive linear rules sharing the degree k.
class CAFamily {
public:
    /// Throws EmptyFamily, MixedDegrees, DuplicateMember, and the
    /// LinearRule::make errors for invalid members.
    static CAFamily make(const Field& field, std::vector<Polynomial> polys);

    const Field& field() const noexcept { return field_; }
    std::size_t k() const noexcept { return k_; }
    std::size_t size() const noexcept { return members_.size(); }
    const std::vector<LinearRule>& members() const noexcept { return members_; }

private:
    CAFamily(Field field, std::size_t k, std::vector<LinearRule> members)
        : field_(std::move(field)), k_(k), members_(std::move(members)) {}

    Field field_;
    std::size_t k_;
    std::vector<LinearRule> members_;
};

/// Kernels of every member acting on F_q^(2k).
GrassmannianCode code_from_family(const CAFamily& family);

/// Recovers the rule polynomial of a k-dimensional subspace of F_q^(2k) that
/// is the kernel of some linear CA, or nullopt if it is not one.
std::optional<Polynomial> rule_from_kernel(const Subspace& kernel);

/// Rule family behind a code whose codewords are all CA kernels at n = 2k.
std::optional<CAFamily> family_from_code(const GrassmannianCode& code);

struct GcdProfile {
    std::size_t max_gcd_degree = 0;
    std::pair<std::size_t, std::size_t> witness{0, 1};
    /// degrees[i][j] = deg gcd(P_i, P_j) for j < i.
    std::vector<std::vector<std::size_t>> degrees;
};

struct DistancePrediction {
    std::size_t min_distance = 0;
    GcdProfile profile;
};

/// D = 2k - 2 max deg gcd over member pairs. Throws TooFewMembers.
DistancePrediction predicted_min_distance(const CAFamily& family);

/// Throws NonPositive.
int mobius(std::int64_t n);

/// Monic irreducibles of degree n over F_q by Gauss's formula. Throws
/// NonPositive or Overflow.
std::uint64_t count_irreducibles(std::size_t n, const Field& field);

/// Same count with X removed (degree 1 only): the irreducibles usable as
/// factors of polynomials with nonzero constant term.
std::uint64_t count_irreducibles_excluding_x(std::size_t n, const Field& field);

/// All monic irreducibles of degree n in canonical order. Throws NonPositive.
std::vector<Polynomial> enumerate_irreducibles(std::size_t n, const Field& field, bool exclude_x);

/// Poly_k(F_q): monic, degree k, nonzero constant term, in canonical order.
std::vector<Polynomial> enumerate_poly_k(std::size_t k, const Field& field);

/// Largest pairwise-coprime subset of Poly_k(F_q):
/// I'_k + sum_{j=1}^{floor(k/2)} I'_j with X excluded from the degree-1 count.
std::uint64_t max_coprime_family_size(std::size_t k, const Field& field);

/// Same expression evaluated with the unadjusted Gauss counts (I_1 = q).
std::uint64_t max_coprime_family_size_gauss(std::size_t k, const Field& field);

/// I'_(k-t) + sum_{i=1}^{floor((k-t)/2)} I'_i; equals 1 when t == k.
std::uint64_t uniform_gcd_family_size(std::size_t k, std::size_t t, const Field& field);

/// Maximal subset of Poly_k(F_q) whose pairwise gcds all equal g.
/// Throws GNotMonic, GZeroConstant or DegreeTooLarge.
std::vector<Polynomial> construction_uniform_gcd(std::size_t k, const Polynomial& g);

struct FamilyReport {
    bool ok = true;
    std::string violation;  // empty when ok
    std::string detail;
};

/// Checks Poly_k membership of every element (k defaults to the first
/// element's degree) and that every pair has gcd exactly g.
FamilyReport verify_family(std::span<const Polynomial> family, const Polynomial& g,
                           std::optional<std::size_t> k = std::nullopt);

/// As verify_family, but pairs only need deg gcd <= t.
FamilyReport verify_family_bounded(std::span<const Polynomial> family, std::size_t t,
                                   std::optional<std::size_t> k = std::nullopt);

/// Maximum-cardinality member of CD_{k,t}(F_q) by exact clique search.
/// Throws BudgetExceeded when |Poly_k(F_q)| > budget.
std::vector<Polynomial> search_max_family(std::size_t k, std::size_t t, const Field& field, std::size_t budget);

/// Maximum subset of the multiples of g in Poly_k(F_q) with all pairwise gcds
/// equal to g, by exact clique search. Throws BudgetExceeded.
std::vector<Polynomial> search_max_uniform_gcd_family(std::size_t k, const Polynomial& g, std::size_t budget);

}  // namespace cacodes
