#pragma once

#include "gca/expression.hpp"
#include "gca/seed.hpp"

#include <vector>

namespace gca {

/// Laurent phenomenon seed: F_i polynomials in the cluster x_1..x_n.
/// Integers and Rationals differ only in the units used for equivalence;
/// AlgebraicClosure also changes which segment polynomials are irreducible.
struct LPSeed {
    GroundRing ring = GroundRing::Rationals;
    std::size_t n = 0;
    std::vector<std::string> names;
    std::vector<LaurentPolynomial> F;

    /// Default names x1..xn.
    static LPSeed from_polynomials(std::vector<LaurentPolynomial> F, GroundRing ring = GroundRing::Rationals);

    friend bool operator==(const LPSeed&, const LPSeed&) = default;
};

enum class Irreducibility { Verified, AcceptedUnverified };

struct LPValidation {
    std::vector<Violation> violations;
    /// Per polynomial; meaningful when there are no violations.
    std::vector<Irreducibility> irreducibility;
    bool ok() const { return violations.empty(); }
};

/// Codes: shape, not-polynomial, integer-coefficients, constant,
/// self-dependence, variable-divisor, reducible. Irreducibility is decided
/// for polynomials supported on a segment and accepted otherwise.
LPValidation validate_lp_seed(const LPSeed& s);

/// Throws PreconditionError("valid-lp-seed") listing the violations.
void require_valid(const LPSeed& s);

struct ExchangeLaurent {
    std::vector<LaurentPolynomial> Fhat;
    /// exponents[j][k] = a_k for F_j (zero on the diagonal).
    std::vector<ExponentVector> exponents;
};

ExchangeLaurent exchange_laurent(const LPSeed& s);

/// Representative of the equivalence class: each F_i divided by its content
/// (Rationals, AlgebraicClosure) or by the sign of its leading coefficient
/// (Integers).
LPSeed canonical(const LPSeed& s);

/// Mutation in direction k (zero-based). Output polynomials are primitive with
/// positive leading coefficient, and x_k is renamed by toggling a trailing
/// prime. Throws PreconditionError("substitution") when F̂_k|_{x_i←0} is
/// undefined or zero, std::out_of_range for a bad direction.
LPSeed lp_mutate(const LPSeed& s, std::size_t k);

/// New cluster variable F̂_k / x_k written through `cluster`, the current
/// cluster in some ambient coordinates.
RationalExpression lp_exchange(const LPSeed& s, std::size_t k, const std::vector<RationalExpression>& cluster);

/// Equal canonical forms; the units are those of the coarser ring when the
/// two seeds disagree (Integers wins).
bool seeds_equivalent(const LPSeed& a, const LPSeed& b);

bool is_sign_skew_symmetric(const LPSeed& s);

/// Exchange polynomials of a classical seed without frozen variables.
LPSeed lp_seed_from_classical(const GeneralizedSeed& s);

struct LPEnumeration {
    /// Sorted, in the initial cluster.
    std::vector<RationalExpression> variables;
    std::size_t seeds_visited = 0;
    /// Seeds whose exchange Laurent polynomials contain a repeated entry.
    std::size_t repeated_exchange_laurent = 0;
};

/// All cluster variables reachable by at most `depth` LP mutations. Throws
/// std::logic_error if one of them is not a Laurent polynomial.
LPEnumeration enumerate_lp_cluster_variables(const LPSeed& s, std::size_t depth);

}  // namespace gca
